//! Polynomial exterior calculus and the left-invariant coframe of the double.
//!
//! A `Form` is a polynomial differential form over a runtime number of
//! variables; the variables in `diff_offset .. diff_offset + ndiff` carry
//! differentials. This covers both the 3-coordinate Cartan calculus used by
//! the Dorfman bracket and the 6-coordinate calculus of the double, where
//! left-invariance is checked symbolically in the translating element by
//! working over 12 variables (6 symbolic group parameters + 6 coordinates).

use crate::lie::{bracket_basis, LieBasis, Params};
use crate::poly::Poly;
use crate::report::{Counterexample, VerificationReport};
use crate::sample::SampleRng;
use crate::scalar::{self, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// A polynomial differential form. Wedge monomials are encoded as bitmasks
/// over the differential-carrying variables, kept in strictly increasing
/// order with the sign absorbed into the coefficient polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    nvars: usize,
    diff_offset: usize,
    ndiff: usize,
    terms: BTreeMap<u8, Poly>,
}

fn wedge_sign(a: u8, b: u8) -> i64 {
    // (-1)^{number of pairs (i in a, j in b) with i > j}
    let mut inversions = 0u32;
    for i in 0..8 {
        if a & (1 << i) == 0 {
            continue;
        }
        inversions += (b & ((1 << i) - 1)).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Form {
    pub fn zero(nvars: usize, diff_offset: usize, ndiff: usize) -> Self {
        assert!(ndiff <= 8 && diff_offset + ndiff <= nvars);
        Form {
            nvars,
            diff_offset,
            ndiff,
            terms: BTreeMap::new(),
        }
    }

    /// A degree-0 form (a polynomial function).
    pub fn from_poly(p: Poly, diff_offset: usize, ndiff: usize) -> Self {
        let mut f = Form::zero(p.nvars(), diff_offset, ndiff);
        f.insert(0, p);
        f
    }

    /// The constant-coefficient 1-form `d(var_{diff_offset + i})`.
    pub fn differential(nvars: usize, diff_offset: usize, ndiff: usize, i: usize) -> Self {
        assert!(i < ndiff);
        let mut f = Form::zero(nvars, diff_offset, ndiff);
        f.insert(1 << i, Poly::one(nvars));
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, mask: u8, p: Poly) {
        if p.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!((self.nvars, self.diff_offset, self.ndiff), (other.nvars, other.diff_offset, other.ndiff));
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.insert(*m, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.nvars, self.diff_offset, self.ndiff);
        for (m, p) in &self.terms {
            out.insert(*m, p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, c: &Poly) -> Form {
        let mut out = Form::zero(self.nvars, self.diff_offset, self.ndiff);
        for (m, p) in &self.terms {
            out.insert(*m, p.mul(c));
        }
        out
    }

    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &Form) -> Form {
        assert_eq!((self.nvars, self.diff_offset, self.ndiff), (other.nvars, other.diff_offset, other.ndiff));
        let mut out = Form::zero(self.nvars, self.diff_offset, self.ndiff);
        for (ma, pa) in &self.terms {
            for (mb, pb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let sign = wedge_sign(*ma, *mb);
                let coeff = pa.mul(pb).scale(&scalar::int(sign));
                out.insert(ma | mb, coeff);
            }
        }
        out
    }

    /// Exterior derivative: a degree +1 antiderivation with `d o d = 0`.
    pub fn d(&self) -> Form {
        let mut out = Form::zero(self.nvars, self.diff_offset, self.ndiff);
        for (m, p) in &self.terms {
            for i in 0..self.ndiff {
                let bit = 1u8 << i;
                if m & bit != 0 {
                    continue;
                }
                let dp = p.derivative(self.diff_offset + i);
                if dp.is_zero() {
                    continue;
                }
                let sign = wedge_sign(bit, *m);
                out.insert(m | bit, dp.scale(&scalar::int(sign)));
            }
        }
        out
    }

    /// Interior product with a polynomial vector field given by its
    /// coefficients over the differential directions.
    pub fn interior(&self, vf: &[Poly]) -> Form {
        assert_eq!(vf.len(), self.ndiff);
        let mut out = Form::zero(self.nvars, self.diff_offset, self.ndiff);
        for (m, p) in &self.terms {
            let mut pos = 0i64;
            for (i, component) in vf.iter().enumerate().take(self.ndiff) {
                let bit = 1u8 << i;
                if m & bit == 0 {
                    continue;
                }
                if !component.is_zero() {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    out.insert(m & !bit, p.mul(component).scale(&scalar::int(sign)));
                }
                pos += 1;
            }
        }
        out
    }

    /// Cartan's formula: `L_X = i_X d + d i_X`.
    pub fn lie_derivative(&self, vf: &[Poly]) -> Form {
        self.d().interior(vf).add(&self.interior(vf).d())
    }

    /// Pullback along a polynomial map. `images[i]` is the expression for
    /// coordinate `i` of the source in the target space; the target space
    /// geometry is `(target_nvars, target_diff_offset, target_ndiff)`.
    ///
    /// Functorial and commuting with `d` and `wedge`.
    pub fn pullback(
        &self,
        images: &[Poly],
        target_diff_offset: usize,
        target_ndiff: usize,
    ) -> Form {
        assert_eq!(images.len(), self.nvars);
        let tn = images[0].nvars();
        // differentials of the coordinate images in the target space
        let dimg: Vec<Form> = images
            .iter()
            .map(|im| Form::from_poly(im.clone(), target_diff_offset, target_ndiff).d())
            .collect();
        let mut out = Form::zero(tn, target_diff_offset, target_ndiff);
        for (m, p) in &self.terms {
            let coeff = p.substitute(images);
            let mut term = Form::from_poly(coeff, target_diff_offset, target_ndiff);
            for i in 0..self.ndiff {
                if m & (1 << i) != 0 {
                    term = term.wedge(&dimg[self.diff_offset + i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u8, &Poly)> {
        self.terms.iter()
    }

    pub fn render(&self, var_names: &[&str], diff_names: &[&str]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, p) in &self.terms {
            let mut wedge = String::new();
            for i in 0..self.ndiff {
                if m & (1 << i) != 0 {
                    if !wedge.is_empty() {
                        wedge.push('^');
                    }
                    wedge.push_str(diff_names.get(i).copied().unwrap_or("?"));
                }
            }
            if wedge.is_empty() {
                parts.push(format!("({})", p.render(var_names)));
            } else {
                parts.push(format!("({}) {}", p.render(var_names), wedge));
            }
        }
        parts.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// The coframe of the double
// ---------------------------------------------------------------------------

/// Names for the six coframe forms, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoframeName {
    AlphaForm(u8),
    BetaForm(u8),
}

impl CoframeName {
    pub fn all() -> [CoframeName; 6] {
        [
            CoframeName::AlphaForm(1),
            CoframeName::AlphaForm(2),
            CoframeName::AlphaForm(3),
            CoframeName::BetaForm(1),
            CoframeName::BetaForm(2),
            CoframeName::BetaForm(3),
        ]
    }

    /// The Lie basis element dual to this form under the pairing
    /// `(alpha_i, beta_j) = delta_ij`: the form `alpha_i` pairs against the
    /// Lie element `beta_i` and vice versa.
    pub fn dual(&self) -> LieBasis {
        match *self {
            CoframeName::AlphaForm(i) => LieBasis::Beta(i),
            CoframeName::BetaForm(i) => LieBasis::Alpha(i),
        }
    }

    fn position(&self) -> usize {
        match *self {
            CoframeName::AlphaForm(i) => (i - 1) as usize,
            CoframeName::BetaForm(i) => 2 + i as usize,
        }
    }

    /// The coframe form dual to a Lie basis element.
    pub fn of_dual(b: LieBasis) -> CoframeName {
        match b {
            LieBasis::Beta(i) => CoframeName::AlphaForm(i),
            LieBasis::Alpha(i) => CoframeName::BetaForm(i),
        }
    }
}

impl core::fmt::Display for CoframeName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoframeName::AlphaForm(i) => write!(f, "alpha{i}"),
            CoframeName::BetaForm(i) => write!(f, "beta{i}"),
        }
    }
}

const VAR_NAMES: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];
const DIFF_NAMES: [&str; 6] = ["dx1", "dx2", "dx3", "dy1", "dy2", "dy3"];

/// The six left-invariant coframe forms `(alpha_1..3, beta_1..3)` on the
/// coordinates `(x1, x2, x3, y1, y2, y3)`.
pub fn invariant_coframe(p: Params) -> [Form; 6] {
    let n = 6;
    let var = |i: usize| Poly::var(n, i);
    let dd = |i: usize| Form::differential(n, 0, 6, i);
    let c = |num: i64, den: i64| scalar::frac(num, den);

    let (x1, x2, x3, y2) = (var(0), var(1), var(2), var(4));
    let (dx1, dx2, dx3, dy1, dy2, dy3) = (dd(0), dd(1), dd(2), dd(3), dd(4), dd(5));

    let alpha1 = dx1.clone();
    let alpha3 = dx3.clone();
    let alpha2 = dx2
        .clone()
        .add(&dx1.scale_poly(&x3.scale(&c(-p.k, 2))))
        .add(&dx3.scale_poly(&x1.scale(&c(p.k, 2))));
    let beta2 = dy2
        .clone()
        .add(&dx1.scale_poly(&x3.scale(&c(-p.j, 2))))
        .add(&dx3.scale_poly(&x1.scale(&c(p.j, 2))));

    // k y2 + j x2, the recurring coefficient of beta1 and beta3
    let ky2jx2 = y2.scale(&scalar::int(p.k)).add(&x2.scale(&scalar::int(p.j)));

    let beta1 = dy1
        .add(&dx1.scale_poly(&x3.mul(&x3).scale(&c(-p.k * p.j, 3))))
        .add(&dx2.scale_poly(&x3.scale(&c(p.j, 2))))
        .add(&dx3.scale_poly(&ky2jx2.scale(&c(-1, 2))))
        .add(&dx3.scale_poly(&x1.mul(&x3).scale(&c(p.k * p.j, 3))))
        .add(&dy2.scale_poly(&x3.scale(&c(p.k, 2))));
    let beta3 = dy3
        .add(&dx1.scale_poly(&x3.mul(&x1).scale(&c(p.k * p.j, 3))))
        .add(&dx1.scale_poly(&ky2jx2.scale(&c(1, 2))))
        .add(&dx2.scale_poly(&x1.scale(&c(-p.j, 2))))
        .add(&dx3.scale_poly(&x1.mul(&x1).scale(&c(-p.k * p.j, 3))))
        .add(&dy2.scale_poly(&x1.scale(&c(-p.k, 2))));

    [alpha1, alpha2, alpha3, beta1, beta2, beta3]
}

/// `pullback(L_g, theta) = theta` for every coframe form, with `g` symbolic:
/// the check runs over 12 variables, `g` in slots 0..6 and the manifold
/// coordinates in slots 6..12.
pub fn check_left_invariance_symbolic(p: Params) -> VerificationReport {
    let map = crate::group::left_translation_symbolic(p);
    let coframe = invariant_coframe(p);
    for (name, theta) in CoframeName::all().iter().zip(coframe.iter()) {
        // Pull back along h -> g*h: coordinate images are the 12-variable
        // product polynomials; differentials live on the h block.
        let pulled = theta.pullback(&map, 6, 6);
        let lifted = lift_to_gh(theta);
        if pulled != lifted {
            let diff = pulled.sub(&lifted);
            const NAMES12: [&str; 12] = [
                "g.x1", "g.x2", "g.x3", "g.y1", "g.y2", "g.y3", "x1", "x2", "x3", "y1", "y2", "y3",
            ];
            return VerificationReport::fail(
                "forms-left-invariance",
                Counterexample {
                    location: format!("coframe form {name} (symbolic g)"),
                    expected: String::from("0"),
                    actual: diff.render(&NAMES12, &DIFF_NAMES),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("forms-left-invariance").with_params(p)
}

/// Left-invariance on sampled rational group elements.
pub fn check_left_invariance_sampled(p: Params, samples: usize, seed: u64) -> VerificationReport {
    let mut rng = SampleRng::new(seed);
    let coframe = invariant_coframe(p);
    for trial in 0..samples {
        let g = crate::group::GroupElement::new(core::array::from_fn(|_| rng.rational()), p);
        let map = crate::group::left_translation(&g);
        for (name, theta) in CoframeName::all().iter().zip(coframe.iter()) {
            let pulled = theta.pullback(&map, 0, 6);
            if pulled != *theta {
                return VerificationReport::fail(
                    "forms-left-invariance",
                    Counterexample {
                        location: format!("form {name}, sampled g #{trial} = {}", g.render()),
                        expected: String::from("0"),
                        actual: pulled.sub(theta).render(&VAR_NAMES, &DIFF_NAMES),
                    },
                )
                .with_params(p);
            }
        }
    }
    VerificationReport::pass("forms-left-invariance").with_params(p)
}

fn lift_to_gh(theta: &Form) -> Form {
    // embed a 6-variable form into the 12-variable (g, h) space, coordinates
    // in the h block
    let mut out = Form::zero(12, 6, 6);
    for (m, poly) in theta.terms() {
        out.insert(*m, poly.embed(12, 6));
    }
    out
}

/// Maurer-Cartan: for each coframe form `theta` dual to the Lie element `X`,
/// `d theta = - sum_{Y < Z} c^X_{YZ} theta^Y wedge theta^Z` where `c` are the
/// structure constants and `theta^Y` is the coframe form dual to `Y`.
pub fn check_maurer_cartan(p: Params) -> VerificationReport {
    let coframe = invariant_coframe(p);
    let basis = LieBasis::all();
    for (name, theta) in CoframeName::all().iter().zip(coframe.iter()) {
        let x = name.dual();
        let mut rhs = Form::zero(6, 0, 6);
        for (yi, &y) in basis.iter().enumerate() {
            for &z in basis.iter().skip(yi + 1) {
                let c = bracket_basis(y, z, p).coeff(x);
                if scalar::is_zero(&c) {
                    continue;
                }
                let ty = &coframe[CoframeName::of_dual(y).position()];
                let tz = &coframe[CoframeName::of_dual(z).position()];
                rhs = rhs.add(&ty.wedge(tz).scale(&(-c)));
            }
        }
        let lhs = theta.d();
        if lhs != rhs {
            return VerificationReport::fail(
                "forms-maurer-cartan",
                Counterexample {
                    location: format!("coframe form {name}"),
                    expected: rhs.render(&VAR_NAMES, &DIFF_NAMES),
                    actual: lhs.render(&VAR_NAMES, &DIFF_NAMES),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("forms-maurer-cartan").with_params(p)
}

/// `d o d = 0` on the coframe and on sampled random polynomial forms.
pub fn check_d_squared(p: Params, samples: usize, seed: u64) -> VerificationReport {
    for (name, theta) in CoframeName::all().iter().zip(invariant_coframe(p).iter()) {
        if !theta.d().d().is_zero() {
            return VerificationReport::fail(
                "forms-d-squared",
                Counterexample {
                    location: format!("coframe form {name}"),
                    expected: String::from("0"),
                    actual: theta.d().d().render(&VAR_NAMES, &DIFF_NAMES),
                },
            )
            .with_params(p);
        }
    }
    let mut rng = SampleRng::new(seed);
    for trial in 0..samples {
        let f = random_form(&mut rng);
        if !f.d().d().is_zero() {
            return VerificationReport::fail(
                "forms-d-squared",
                Counterexample {
                    location: format!("random form #{trial}"),
                    expected: String::from("0"),
                    actual: f.d().d().render(&VAR_NAMES, &DIFF_NAMES),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("forms-d-squared").with_params(p)
}

fn random_form(rng: &mut SampleRng) -> Form {
    let mut f = Form::zero(6, 0, 6);
    let nterms = rng.int_in(1, 4);
    for _ in 0..nterms {
        let mask = rng.int_in(0, 63) as u8;
        // a random polynomial of degree <= 2 in two random variables
        let a = rng.int_in(0, 5) as usize;
        let b = rng.int_in(0, 5) as usize;
        let poly = Poly::var(6, a)
            .mul(&Poly::var(6, b))
            .scale(&rng.rational())
            .add(&Poly::var(6, a).scale(&rng.rational()))
            .add(&Poly::constant(6, rng.rational()));
        f.insert(mask, poly);
    }
    f
}

/// The coframe coefficient matrix over `(dx1..dy3)` is unipotent: its
/// determinant is 1, so its inverse is again polynomial.
pub fn check_coframe_unipotent(p: Params) -> VerificationReport {
    let coframe = invariant_coframe(p);
    let mut matrix: Vec<Vec<Poly>> = Vec::with_capacity(6);
    for theta in &coframe {
        let mut row: Vec<Poly> = Vec::with_capacity(6);
        for i in 0..6 {
            let mask = 1u8 << i;
            let entry = theta
                .terms()
                .find(|(m, _)| **m == mask)
                .map(|(_, p)| p.clone())
                .unwrap_or_else(|| Poly::zero(6));
            row.push(entry);
        }
        matrix.push(row);
    }
    let det = poly_det(&matrix);
    if det != Poly::one(6) {
        return VerificationReport::fail(
            "forms-coframe-unipotent",
            Counterexample {
                location: String::from("det of coframe coefficient matrix"),
                expected: String::from("1"),
                actual: det.render(&VAR_NAMES),
            },
        )
        .with_params(p);
    }
    VerificationReport::pass("forms-coframe-unipotent").with_params(p)
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero(m[0][0].nvars());
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&poly_det(&minor));
        if col % 2 == 0 {
            det = det.add(&cofactor);
        } else {
            det = det.sub(&cofactor);
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn dxi(i: usize) -> Form {
        Form::differential(6, 0, 6, i)
    }

    #[test]
    fn wedge_basics() {
        let dx1 = dxi(0);
        let dx3 = dxi(2);
        assert!(dx1.wedge(&dx1).is_zero());
        let w = dx1.wedge(&dx3);
        let back = dx3.wedge(&dx1);
        assert_eq!(back, w.scale(&int(-1)));
        // (x3 dx1) ^ dx3 = x3 (dx1 ^ dx3)
        let x3 = Poly::var(6, 2);
        assert_eq!(dx1.scale_poly(&x3).wedge(&dx3), w.scale_poly(&x3));
    }

    #[test]
    fn exterior_derivative_examples() {
        // d(x1) = dx1
        let f = Form::from_poly(Poly::var(6, 0), 0, 6);
        assert_eq!(f.d(), dxi(0));
        // d(alpha2) = k dx1 ^ dx3 for the k-twisted coframe form
        let p = Params::new(5, 2);
        let coframe = invariant_coframe(p);
        let want = dxi(0).wedge(&dxi(2)).scale(&int(5));
        assert_eq!(coframe[1].d(), want);
    }

    #[test]
    fn coframe_printed_entries() {
        // beta2 with j=2 is dy2 - x3 dx1 + x1 dx3
        let p = Params::new(0, 2);
        let coframe = invariant_coframe(p);
        let want = dxi(4)
            .add(&dxi(0).scale_poly(&Poly::var(6, 2).scale(&int(-1))))
            .add(&dxi(2).scale_poly(&Poly::var(6, 0)));
        assert_eq!(coframe[4], want);
        // k = j = 0 degenerates to the constant coframe
        let flat = invariant_coframe(Params::new(0, 0));
        for (i, theta) in flat.iter().enumerate() {
            assert_eq!(*theta, dxi(i));
        }
    }

    #[test]
    fn pullback_functorial_and_identity() {
        let p = Params::new(1, 1);
        let coframe = invariant_coframe(p);
        let id: alloc::vec::Vec<Poly> = (0..6).map(|i| Poly::var(6, i)).collect();
        for theta in &coframe {
            assert_eq!(theta.pullback(&id, 0, 6), *theta);
        }
        // pullback of dx1 along a left translation is dx1
        let g = crate::group::GroupElement::from_ints([3, 1, -2, 0, 5, 1], p);
        let map = crate::group::left_translation(&g);
        assert_eq!(dxi(0).pullback(&map, 0, 6), dxi(0));
    }

    #[test]
    fn pullback_commutes_with_d() {
        let p = Params::new(2, -1);
        let mut rng = SampleRng::new(3);
        let g = crate::group::GroupElement::new(core::array::from_fn(|_| rng.rational()), p);
        let map = crate::group::left_translation(&g);
        for _ in 0..12 {
            let f = random_form(&mut rng);
            assert_eq!(f.d().pullback(&map, 0, 6), f.pullback(&map, 0, 6).d());
        }
    }

    #[test]
    fn left_invariance_and_maurer_cartan_sweep() {
        for k in -3..=3 {
            for j in -3..=3 {
                let p = Params::new(k, j);
                assert!(check_left_invariance_symbolic(p).passed(), "inv {p}");
                assert!(check_maurer_cartan(p).passed(), "mc {p}");
                assert!(check_coframe_unipotent(p).passed(), "unipotent {p}");
            }
        }
    }

    #[test]
    fn maurer_cartan_examples() {
        // d(alpha2) = k alpha1 ^ alpha3 and d(beta2) = j alpha1 ^ alpha3
        let p = Params::new(3, 7);
        let coframe = invariant_coframe(p);
        let a13 = coframe[0].wedge(&coframe[2]);
        assert_eq!(coframe[1].d(), a13.scale(&int(3)));
        assert_eq!(coframe[4].d(), a13.scale(&int(7)));
    }

    #[test]
    fn d_squared_sampled() {
        assert!(check_d_squared(Params::new(2, 3), 100, 5).passed());
    }

    #[test]
    fn sampled_left_invariance() {
        assert!(check_left_invariance_sampled(Params::new(2, 3), 20, 9).passed());
    }

    #[test]
    fn interior_product() {
        // i_{d/dx1} (x2 dx1 ^ dx3) = x2 dx3
        let x2 = Poly::var(6, 1);
        let f = dxi(0).wedge(&dxi(2)).scale_poly(&x2);
        let mut vf: alloc::vec::Vec<Poly> = (0..6).map(|_| Poly::zero(6)).collect();
        vf[0] = Poly::one(6);
        assert_eq!(f.interior(&vf), dxi(2).scale_poly(&x2));
        let _ = frac(1, 2);
    }
}
