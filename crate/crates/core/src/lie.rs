//! The six dimensional, three step nilpotent Lie algebras `h(k,j)`.
//!
//! Basis `{alpha_1..3, beta_1..3}` with the nonzero brackets
//!
//! ```text
//! [b1, b2] = j a3      [b3, b1] = j a2 + k b2     [b2, b3] = j a1
//! [b1, a2] = k a3      [a2, b3] = k a1
//! ```
//!
//! every other basis bracket is zero (the table is closed by bilinearity and
//! skew-symmetry), and the symmetric pairing is `(a_i, b_j) = delta_ij`.

use crate::report::{Counterexample, VerificationReport};
use crate::scalar::{self, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;

/// The two integer parameters of the double: `k` the circle-bundle degree,
/// `j` the three-form flux class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    pub k: i64,
    pub j: i64,
}

impl Params {
    pub fn new(k: i64, j: i64) -> Self {
        Params { k, j }
    }

    pub fn k(&self) -> Scalar {
        scalar::int(self.k)
    }

    pub fn j(&self) -> Scalar {
        scalar::int(self.j)
    }

    pub fn kj(&self) -> Scalar {
        scalar::int(self.k * self.j)
    }
}

impl core::fmt::Display for Params {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(k={}, j={})", self.k, self.j)
    }
}

/// A basis vector of `h(k,j)`: `Alpha(i)` or `Beta(i)` with `i` in `1..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieBasis {
    Alpha(u8),
    Beta(u8),
}

impl LieBasis {
    pub fn index(&self) -> u8 {
        match *self {
            LieBasis::Alpha(i) | LieBasis::Beta(i) => i,
        }
    }

    /// All six basis vectors in canonical order.
    pub fn all() -> [LieBasis; 6] {
        [
            LieBasis::Alpha(1),
            LieBasis::Alpha(2),
            LieBasis::Alpha(3),
            LieBasis::Beta(1),
            LieBasis::Beta(2),
            LieBasis::Beta(3),
        ]
    }
}

impl core::fmt::Display for LieBasis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LieBasis::Alpha(i) => write!(f, "a{i}"),
            LieBasis::Beta(i) => write!(f, "b{i}"),
        }
    }
}

/// A Lie algebra element in canonical sparse form: no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    coeffs: BTreeMap<LieBasis, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn basis(b: LieBasis) -> Self {
        let mut e = LieElement::zero();
        e.add_term(b, scalar::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, b: LieBasis) -> Scalar {
        self.coeffs.get(&b).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn add_term(&mut self, b: LieBasis, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_insert_with(scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        for (b, v) in &self.coeffs {
            out.add_term(*b, v.clone() * c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieBasis, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(b, c)| format!("{}*{}", scalar::to_frac_string(c), b))
            .collect();
        parts.join(" + ")
    }
}

/// Bracket of two basis vectors. Skew-symmetry holds by construction.
pub fn bracket_basis(a: LieBasis, b: LieBasis, p: Params) -> LieElement {
    use LieBasis::*;
    // Nonzero brackets in a fixed orientation; everything else is zero.
    let oriented = |x: LieBasis, y: LieBasis| -> Option<LieElement> {
        let mut e = LieElement::zero();
        match (x, y) {
            (Beta(1), Beta(2)) => e.add_term(Alpha(3), p.j()),
            (Beta(3), Beta(1)) => {
                e.add_term(Alpha(2), p.j());
                e.add_term(Beta(2), p.k());
            }
            (Beta(2), Beta(3)) => e.add_term(Alpha(1), p.j()),
            (Beta(1), Alpha(2)) => e.add_term(Alpha(3), p.k()),
            (Alpha(2), Beta(3)) => e.add_term(Alpha(1), p.k()),
            _ => return None,
        }
        Some(e)
    };
    if let Some(e) = oriented(a, b) {
        e
    } else if let Some(e) = oriented(b, a) {
        e.scale(&scalar::int(-1))
    } else {
        LieElement::zero()
    }
}

/// Bilinear extension of `bracket_basis`.
pub fn bracket(a: &LieElement, b: &LieElement, p: Params) -> LieElement {
    let mut out = LieElement::zero();
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let br = bracket_basis(*ba, *bb, p);
            out = out.add(&br.scale(&(ca.clone() * cb.clone())));
        }
    }
    out
}

/// The symmetric pairing: `(a_i, b_j) = delta_ij`, alpha-alpha and beta-beta
/// pairings vanish.
pub fn pairing(a: &LieElement, b: &LieElement) -> Scalar {
    let mut acc = scalar::zero();
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let paired = match (ba, bb) {
                (LieBasis::Alpha(i), LieBasis::Beta(j)) | (LieBasis::Beta(j), LieBasis::Alpha(i)) => i == j,
                _ => false,
            };
            if paired {
                acc += ca.clone() * cb.clone();
            }
        }
    }
    acc
}

/// Jacobi identity over all basis triples: `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0`.
pub fn check_jacobi_finite(p: Params) -> VerificationReport {
    let basis = LieBasis::all();
    for &a in &basis {
        for &b in &basis {
            for &c in &basis {
                let ea = LieElement::basis(a);
                let eb = LieElement::basis(b);
                let ec = LieElement::basis(c);
                let mut sum = bracket(&ea, &bracket(&eb, &ec, p), p);
                sum = sum.add(&bracket(&eb, &bracket(&ec, &ea, p), p));
                sum = sum.add(&bracket(&ec, &bracket(&ea, &eb, p), p));
                if !sum.is_zero() {
                    return VerificationReport::fail(
                        "lie-jacobi",
                        Counterexample {
                            location: format!("triple ({a}, {b}, {c})"),
                            expected: String::from("0"),
                            actual: sum.render(),
                        },
                    )
                    .with_params(p);
                }
            }
        }
    }
    VerificationReport::pass("lie-jacobi").with_params(p)
}

/// Invariance of the pairing: `([a,b], c) + (b, [a,c]) = 0` over basis triples.
pub fn check_pairing_invariance(p: Params) -> VerificationReport {
    let basis = LieBasis::all();
    for &a in &basis {
        for &b in &basis {
            for &c in &basis {
                let ea = LieElement::basis(a);
                let eb = LieElement::basis(b);
                let ec = LieElement::basis(c);
                let lhs = pairing(&bracket(&ea, &eb, p), &ec) + pairing(&eb, &bracket(&ea, &ec, p));
                if !lhs.is_zero() {
                    return VerificationReport::fail(
                        "lie-pairing-invariance",
                        Counterexample {
                            location: format!("triple ({a}, {b}, {c})"),
                            expected: String::from("0"),
                            actual: scalar::to_frac_string(&lhs),
                        },
                    )
                    .with_params(p);
                }
            }
        }
    }
    VerificationReport::pass("lie-pairing-invariance").with_params(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn table_entries() {
        let p = Params::new(1, 1);
        let e = bracket_basis(LieBasis::Beta(1), LieBasis::Beta(2), p);
        assert_eq!(e.coeff(LieBasis::Alpha(3)), int(1));
        assert_eq!(e.coeffs.len(), 1);

        // unlisted bracket
        let z = bracket_basis(LieBasis::Alpha(1), LieBasis::Alpha(3), Params::new(4, -7));
        assert!(z.is_zero());

        // [b3, b1] with substituted parameters
        let p = Params::new(2, 5);
        let e = bracket_basis(LieBasis::Beta(3), LieBasis::Beta(1), p);
        assert_eq!(e.coeff(LieBasis::Alpha(2)), int(5));
        assert_eq!(e.coeff(LieBasis::Beta(2)), int(2));

        // [b2, a2] is explicitly zero
        assert!(bracket_basis(LieBasis::Beta(2), LieBasis::Alpha(2), p).is_zero());
    }

    #[test]
    fn skew_symmetry_all_pairs() {
        let p = Params::new(3, -2);
        for &a in &LieBasis::all() {
            for &b in &LieBasis::all() {
                let ab = bracket_basis(a, b, p);
                let ba = bracket_basis(b, a, p);
                assert!(ab.add(&ba).is_zero(), "[{a},{b}] not skew");
            }
        }
    }

    #[test]
    fn bilinearity() {
        // [b1 + b2, b3] = j a2 + k b2 reversed sign... compute for k=0, j=1:
        // [b1,b3] = -(j a2 + k b2) = -a2, [b2,b3] = a1, so the sum is a1 - a2.
        let p = Params::new(0, 1);
        let a = LieElement::basis(LieBasis::Beta(1)).add(&LieElement::basis(LieBasis::Beta(2)));
        let b = LieElement::basis(LieBasis::Beta(3));
        let e = bracket(&a, &b, p);
        assert_eq!(e.coeff(LieBasis::Alpha(1)), int(1));
        assert_eq!(e.coeff(LieBasis::Alpha(2)), int(-1));
    }

    #[test]
    fn pairing_values() {
        let a2 = LieElement::basis(LieBasis::Alpha(2));
        let b2 = LieElement::basis(LieBasis::Beta(2));
        let a1 = LieElement::basis(LieBasis::Alpha(1));
        let b3 = LieElement::basis(LieBasis::Beta(3));
        let a3 = LieElement::basis(LieBasis::Alpha(3));
        assert_eq!(pairing(&a2, &b2), int(1));
        assert_eq!(pairing(&a1, &a2), int(0));
        assert_eq!(pairing(&b3, &a3), int(1));
    }

    #[test]
    fn jacobi_and_invariance_sweep() {
        for k in -5..=5 {
            for j in -5..=5 {
                let p = Params::new(k, j);
                assert!(check_jacobi_finite(p).passed(), "jacobi {p}");
                assert!(check_pairing_invariance(p).passed(), "invariance {p}");
            }
        }
    }
}
