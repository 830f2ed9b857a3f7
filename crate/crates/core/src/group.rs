//! Group laws: the 3-dimensional Heisenberg group `G_k` and the
//! 6-dimensional double group on coordinates `(x1, x2, x3, y1, y2, y3)`.
//!
//! The double product comes from the degree-3 truncated BCH series of
//! `h(k,j)` in exponential coordinates; it carries quadratic `k/2`, `j/2`
//! twists and the cubic `kj/6` terms. In these coordinates inversion is
//! coordinate negation.

use crate::lie::Params;
use crate::poly::Poly;
use crate::report::{Counterexample, VerificationReport};
use crate::sample::SampleRng;
use crate::scalar::{self, Scalar};
use crate::CoreError;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;

/// A point of the double group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub coords: [Scalar; 6],
    pub params: Params,
}

impl GroupElement {
    pub fn new(coords: [Scalar; 6], params: Params) -> Self {
        GroupElement { coords, params }
    }

    pub fn identity(params: Params) -> Self {
        GroupElement {
            coords: core::array::from_fn(|_| scalar::zero()),
            params,
        }
    }

    pub fn from_ints(c: [i64; 6], params: Params) -> Self {
        GroupElement {
            coords: core::array::from_fn(|i| scalar::int(c[i])),
            params,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(scalar::to_frac_string).collect();
        format!("({})", parts.join(", "))
    }
}

/// A point of the Heisenberg group `G_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergElement {
    pub coords: [Scalar; 3],
    pub k: i64,
}

impl HeisenbergElement {
    pub fn from_ints(c: [i64; 3], k: i64) -> Self {
        HeisenbergElement {
            coords: core::array::from_fn(|i| scalar::int(c[i])),
            k,
        }
    }
}

/// `(x,y,z)(x',y',z') = (x+x', y+y' - (k/2)xz' + (k/2)x'z, z+z')`.
pub fn heisenberg_multiply(
    g: &HeisenbergElement,
    h: &HeisenbergElement,
) -> Result<HeisenbergElement, CoreError> {
    if g.k != h.k {
        return Err(CoreError::IncompatibleParameters);
    }
    let half_k = scalar::frac(g.k, 2);
    let [x, y, z] = g.coords.clone();
    let [xp, yp, zp] = h.coords.clone();
    Ok(HeisenbergElement {
        coords: [
            x.clone() + xp.clone(),
            y + yp + half_k.clone() * (xp.clone() * z.clone() - x.clone() * zp.clone()),
            z + zp,
        ],
        k: g.k,
    })
}

/// The six coordinate polynomials of the double product, as polynomials in
/// `2 * 6` variables: slots `0..6` are the left factor, `6..12` the right.
///
/// The published product table misprints the quadratic twist of the `y2`
/// coordinate as `x3*x1' - x1'*x3` (identically zero); the BCH expansion of
/// the bracket table forces `(j/2)(x3*x1' - x1*x3')`, and associativity
/// fails without it. We implement the associative product.
pub fn product_polynomials(p: Params) -> [Poly; 6] {
    let n = 12;
    let v = |i: usize| Poly::var(n, i);
    let half = |c: i64| scalar::frac(c, 2);
    let sixth = |c: i64| scalar::frac(c, 6);

    let (x1, x2, x3, y1, y2, y3) = (v(0), v(1), v(2), v(3), v(4), v(5));
    let (x1p, x2p, x3p, y1p, y2p, y3p) = (v(6), v(7), v(8), v(9), v(10), v(11));

    // q = x3*x1' - x1*x3', the recurring quadratic.
    let q = x3.mul(&x1p).sub(&x1.mul(&x3p));

    let x1_out = x1.add(&x1p);
    let x3_out = x3.add(&x3p);
    let x2_out = x2.add(&x2p).add(&q.scale(&half(p.k)));
    let y2_out = y2.add(&y2p).add(&q.scale(&half(p.j)));
    let y1_out = y1
        .add(&y1p)
        .add(&y2.mul(&x3p).sub(&y2p.mul(&x3)).scale(&half(p.k)))
        .add(&x2.mul(&x3p).sub(&x2p.mul(&x3)).scale(&half(p.j)))
        .add(&x3p.sub(&x3).mul(&q).scale(&sixth(p.k * p.j)));
    let y3_out = y3
        .add(&y3p)
        .add(&x1.mul(&y2p).sub(&x1p.mul(&y2)).scale(&half(p.k)))
        .add(&x1.mul(&x2p).sub(&x1p.mul(&x2)).scale(&half(p.j)))
        .add(&x1.sub(&x1p).mul(&q).scale(&sixth(p.k * p.j)));

    [x1_out, x2_out, x3_out, y1_out, y2_out, y3_out]
}

/// The double group product.
pub fn multiply(g: &GroupElement, h: &GroupElement) -> Result<GroupElement, CoreError> {
    if g.params != h.params {
        return Err(CoreError::IncompatibleParameters);
    }
    let polys = product_polynomials(g.params);
    let mut point: Vec<Scalar> = Vec::with_capacity(12);
    point.extend(g.coords.iter().cloned());
    point.extend(h.coords.iter().cloned());
    let coords = core::array::from_fn(|i| polys[i].eval(&point));
    Ok(GroupElement::new(coords, g.params))
}

/// Group inverse. In exponential coordinates this is coordinate negation;
/// `multiply(g, inverse(g))` is the identity.
pub fn inverse(g: &GroupElement) -> GroupElement {
    GroupElement {
        coords: core::array::from_fn(|i| -g.coords[i].clone()),
        params: g.params,
    }
}

/// Associativity check mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocMode {
    /// Expand `(g h) f` and `g (h f)` in 18 indeterminate coordinates and
    /// compare the coordinate polynomials exactly.
    Symbolic,
    /// Check on pseudo-random rational triples from a deterministic seed.
    Sampled { count: usize, seed: u64 },
}

/// `(g h) f = g (h f)`, symbolically or on sampled points.
pub fn check_associativity(p: Params, mode: AssocMode) -> VerificationReport {
    match mode {
        AssocMode::Symbolic => check_associativity_symbolic(p),
        AssocMode::Sampled { count, seed } => check_associativity_sampled(p, count, seed),
    }
}

fn check_associativity_symbolic(p: Params) -> VerificationReport {
    // 18 variables: g in 0..6, h in 6..12, f in 12..18.
    let n = 18;
    let polys = product_polynomials(p);

    // gh: substitute (g, h) into the product, widened to 18 vars.
    let mut gh_images: Vec<Poly> = Vec::with_capacity(12);
    for i in 0..12 {
        gh_images.push(Poly::var(n, i));
    }
    let gh: Vec<Poly> = polys.iter().map(|q| q.substitute(&gh_images)).collect();

    // (gh) f
    let mut left_images = gh.clone();
    for i in 12..18 {
        left_images.push(Poly::var(n, i));
    }
    let left: Vec<Poly> = polys.iter().map(|q| q.substitute(&left_images)).collect();

    // hf
    let mut hf_images: Vec<Poly> = Vec::with_capacity(12);
    for i in 6..18 {
        hf_images.push(Poly::var(n, i));
    }
    let hf: Vec<Poly> = polys.iter().map(|q| q.substitute(&hf_images)).collect();

    // g (hf)
    let mut right_images: Vec<Poly> = Vec::with_capacity(12);
    for i in 0..6 {
        right_images.push(Poly::var(n, i));
    }
    right_images.extend(hf);
    let right: Vec<Poly> = polys.iter().map(|q| q.substitute(&right_images)).collect();

    const NAMES: [&str; 18] = [
        "g.x1", "g.x2", "g.x3", "g.y1", "g.y2", "g.y3", "h.x1", "h.x2", "h.x3", "h.y1", "h.y2",
        "h.y3", "f.x1", "f.x2", "f.x3", "f.y1", "f.y2", "f.y3",
    ];
    const COORD: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];
    for i in 0..6 {
        if left[i] != right[i] {
            let diff = left[i].sub(&right[i]);
            return VerificationReport::fail(
                "group-associativity",
                Counterexample {
                    location: format!("coordinate {} (symbolic)", COORD[i]),
                    expected: String::from("0"),
                    actual: diff.render(&NAMES),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("group-associativity").with_params(p)
}

fn check_associativity_sampled(p: Params, count: usize, seed: u64) -> VerificationReport {
    let mut rng = SampleRng::new(seed);
    for trial in 0..count {
        let g = random_element(&mut rng, p);
        let h = random_element(&mut rng, p);
        let f = random_element(&mut rng, p);
        let left = multiply(&multiply(&g, &h).unwrap(), &f).unwrap();
        let right = multiply(&g, &multiply(&h, &f).unwrap()).unwrap();
        if left != right {
            return VerificationReport::fail(
                "group-associativity",
                Counterexample {
                    location: format!("sampled triple #{trial}"),
                    expected: right.render(),
                    actual: left.render(),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("group-associativity").with_params(p)
}

/// Identity and inverse axioms on seeded random rational points.
pub fn check_identity_inverse(p: Params, count: usize, seed: u64) -> VerificationReport {
    let mut rng = SampleRng::new(seed);
    let e = GroupElement::identity(p);
    for trial in 0..count {
        let g = random_element(&mut rng, p);
        let ge = multiply(&g, &e).unwrap();
        let eg = multiply(&e, &g).unwrap();
        let ginv = inverse(&g);
        let gg = multiply(&g, &ginv).unwrap();
        let gg2 = multiply(&ginv, &g).unwrap();
        let inv_inv = inverse(&ginv);
        let ok = ge == g && eg == g && gg.is_identity() && gg2.is_identity() && inv_inv == g;
        if !ok {
            return VerificationReport::fail(
                "group-identity-inverse",
                Counterexample {
                    location: format!("sampled point #{trial}: g = {}", g.render()),
                    expected: String::from("identity axioms"),
                    actual: format!("g*inv(g) = {}", gg.render()),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("group-identity-inverse").with_params(p)
}

/// The Heisenberg block embeds in the double: `(x,y,z) -> (x1=x, x2=y, x3=z, 0, 0, 0)`.
pub fn check_heisenberg_embedding(p: Params, count: usize, seed: u64) -> VerificationReport {
    let mut rng = SampleRng::new(seed);
    for trial in 0..count {
        let a = [rng.rational(), rng.rational(), rng.rational()];
        let b = [rng.rational(), rng.rational(), rng.rational()];
        let ha = HeisenbergElement {
            coords: a.clone(),
            k: p.k,
        };
        let hb = HeisenbergElement {
            coords: b.clone(),
            k: p.k,
        };
        let hprod = heisenberg_multiply(&ha, &hb).unwrap();

        let lift = |c: &[Scalar; 3]| {
            GroupElement::new(
                [
                    c[0].clone(),
                    c[1].clone(),
                    c[2].clone(),
                    scalar::zero(),
                    scalar::zero(),
                    scalar::zero(),
                ],
                p,
            )
        };
        let gprod = multiply(&lift(&a), &lift(&b)).unwrap();
        let agree = gprod.coords[0] == hprod.coords[0]
            && gprod.coords[1] == hprod.coords[1]
            && gprod.coords[2] == hprod.coords[2];
        if !agree {
            return VerificationReport::fail(
                "group-heisenberg-embedding",
                Counterexample {
                    location: format!("sampled pair #{trial}"),
                    expected: format!(
                        "({}, {}, {})",
                        scalar::to_frac_string(&hprod.coords[0]),
                        scalar::to_frac_string(&hprod.coords[1]),
                        scalar::to_frac_string(&hprod.coords[2])
                    ),
                    actual: gprod.render(),
                },
            )
            .with_params(p);
        }
    }
    VerificationReport::pass("group-heisenberg-embedding").with_params(p)
}

/// Left translation by a concrete `g`: the polynomial map `h -> g * h`
/// in the six coordinates of `h`.
pub fn left_translation(g: &GroupElement) -> [Poly; 6] {
    let polys = product_polynomials(g.params);
    // Freeze the left slot at g, keep the right slot as variables 0..6.
    let mut images: Vec<Poly> = Vec::with_capacity(12);
    for c in &g.coords {
        images.push(Poly::constant(6, c.clone()));
    }
    for i in 0..6 {
        images.push(Poly::var(6, i));
    }
    core::array::from_fn(|i| polys[i].substitute(&images))
}

/// Left translation with a symbolic `g`: a map in 12 variables, `g` in
/// slots `0..6` and `h` in slots `6..12`. Used for symbolic left-invariance.
pub fn left_translation_symbolic(p: Params) -> [Poly; 6] {
    product_polynomials(p)
}

fn random_element(rng: &mut SampleRng, p: Params) -> GroupElement {
    GroupElement::new(core::array::from_fn(|_| rng.rational()), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn heisenberg_examples() {
        let g = HeisenbergElement::from_ints([1, 0, 0], 2);
        let h = HeisenbergElement::from_ints([0, 0, 1], 2);
        let prod = heisenberg_multiply(&g, &h).unwrap();
        assert_eq!(prod.coords, [int(1), int(-1), int(1)]);

        let g0 = HeisenbergElement::from_ints([1, 0, 0], 0);
        let h0 = HeisenbergElement::from_ints([0, 0, 1], 0);
        assert_eq!(
            heisenberg_multiply(&g0, &h0).unwrap().coords,
            [int(1), int(0), int(1)]
        );

        let e = HeisenbergElement::from_ints([0, 0, 0], 2);
        assert_eq!(heisenberg_multiply(&e, &g).unwrap(), g);

        let bad = HeisenbergElement::from_ints([0, 0, 0], 3);
        assert!(heisenberg_multiply(&g, &bad).is_err());
    }

    #[test]
    fn double_product_example() {
        // (1,0,0,0,0,0) * (0,0,1,0,0,0) at k = j = 1. The x2, y1, y3 slots
        // pick up the quadratic and cubic twists; y2 picks up the quadratic
        // j-twist required for associativity.
        let p = Params::new(1, 1);
        let g = GroupElement::from_ints([1, 0, 0, 0, 0, 0], p);
        let h = GroupElement::from_ints([0, 0, 1, 0, 0, 0], p);
        let prod = multiply(&g, &h).unwrap();
        assert_eq!(
            prod.coords,
            [
                int(1),
                frac(-1, 2),
                int(1),
                frac(-1, 6),
                frac(-1, 2),
                frac(-1, 6)
            ]
        );
    }

    #[test]
    fn abelian_degeneration() {
        let p = Params::new(0, 0);
        let g = GroupElement::from_ints([1, 2, 3, 4, 5, 6], p);
        let h = GroupElement::from_ints([-2, 1, 7, 0, 2, -5], p);
        let prod = multiply(&g, &h).unwrap();
        assert_eq!(
            prod,
            GroupElement::from_ints([-1, 3, 10, 4, 7, 1], p)
        );
    }

    #[test]
    fn identity_and_inverse() {
        let p = Params::new(3, -2);
        let e = GroupElement::identity(p);
        let g = GroupElement::from_ints([1, 0, 0, 0, 0, 0], p);
        assert_eq!(multiply(&e, &g).unwrap(), g);
        let ginv = inverse(&g);
        assert_eq!(ginv, GroupElement::from_ints([-1, 0, 0, 0, 0, 0], p));
        assert!(multiply(&g, &ginv).unwrap().is_identity());
        assert!(multiply(&ginv, &g).unwrap().is_identity());
        assert_eq!(inverse(&ginv), g);
    }

    #[test]
    fn symbolic_associativity_sweep() {
        for k in -3..=3 {
            for j in -3..=3 {
                let p = Params::new(k, j);
                assert!(
                    check_associativity(p, AssocMode::Symbolic).passed(),
                    "associativity {p}"
                );
            }
        }
    }

    #[test]
    fn sampled_axioms() {
        let p = Params::new(3, -2);
        assert!(check_associativity(
            p,
            AssocMode::Sampled {
                count: 100,
                seed: 42
            }
        )
        .passed());
        assert!(check_identity_inverse(p, 100, 42).passed());
        assert!(check_heisenberg_embedding(p, 50, 7).passed());
    }

    #[test]
    fn left_translation_example() {
        // x2-component of left translation by (1,0,0,0,0,0) at k=j=1
        // is x2 + (1/2)(0*x1 - 1*x3) = x2 - x3/2.
        let p = Params::new(1, 1);
        let g = GroupElement::from_ints([1, 0, 0, 0, 0, 0], p);
        let map = left_translation(&g);
        let x2 = Poly::var(6, 1);
        let x3 = Poly::var(6, 2);
        assert_eq!(map[1], x2.sub(&x3.scale(&frac(1, 2))));
        // identity translation is the identity map
        let e = GroupElement::identity(p);
        let idmap = left_translation(&e);
        for (i, q) in idmap.iter().enumerate() {
            assert_eq!(*q, Poly::var(6, i));
        }
    }

    #[test]
    fn left_translation_composes() {
        let p = Params::new(2, -1);
        let mut rng = SampleRng::new(11);
        for _ in 0..10 {
            let g = random_element(&mut rng, p);
            let h = random_element(&mut rng, p);
            let gh = multiply(&g, &h).unwrap();
            let point: [Scalar; 6] = core::array::from_fn(|_| rng.rational());
            let lg = left_translation(&g);
            let lh = left_translation(&h);
            let lgh = left_translation(&gh);
            // L_g(L_h(x)) = L_{gh}(x)
            let hx: alloc::vec::Vec<Scalar> = lh.iter().map(|q| q.eval(&point)).collect();
            for i in 0..6 {
                assert_eq!(lg[i].eval(&hx), lgh[i].eval(&point));
            }
        }
    }
}
