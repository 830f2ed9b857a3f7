//! Cartan calculus on the three coordinates `(x, y, z)` of the Heisenberg
//! base, and the H-twisted Dorfman bracket on polynomial sections of
//! `TN + T*N`.
//!
//! The six frame sections realize the Lie algebra `h(k,j)`:
//!
//! ```text
//! b1 = d/dx + (k/2) z d/dy      a1 = dx
//! b2 = d/dy                     a2 = dy + (k/2) x dz - (k/2) z dx
//! b3 = d/dz - (k/2) x d/dy      a3 = dz
//! ```
//!
//! with flux `H_j = -j dx^dy^dz`. The bracket carries the flux term with the
//! contraction order that makes this frame close on the structure constants
//! of `h(k,j)` (the two printed conventions, sign of `H` and order of the
//! contractions, are only consistent with the structure constants in this
//! combination).

use crate::lie::{bracket_basis, LieBasis, Params};
use crate::forms::Form;
use crate::poly::Poly;
use crate::report::{Counterexample, VerificationReport};
use alloc::format;
use alloc::string::String;

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];
const DIFF_NAMES: [&str; 3] = ["dx", "dy", "dz"];

/// A polynomial section of `TN + T*N`: a vector field plus a 1-form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub vf: [Poly; 3],
    pub form: Form,
}

impl Section {
    pub fn zero() -> Self {
        Section {
            vf: core::array::from_fn(|_| Poly::zero(3)),
            form: Form::zero(3, 0, 3),
        }
    }

    pub fn from_vector(vf: [Poly; 3]) -> Self {
        Section {
            vf,
            form: Form::zero(3, 0, 3),
        }
    }

    pub fn from_form(form: Form) -> Self {
        Section {
            vf: core::array::from_fn(|_| Poly::zero(3)),
            form,
        }
    }

    pub fn add(&self, other: &Section) -> Section {
        Section {
            vf: core::array::from_fn(|i| self.vf[i].add(&other.vf[i])),
            form: self.form.add(&other.form),
        }
    }

    pub fn scale(&self, c: &crate::scalar::Scalar) -> Section {
        Section {
            vf: core::array::from_fn(|i| self.vf[i].scale(c)),
            form: self.form.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vf.iter().all(|p| p.is_zero()) && self.form.is_zero()
    }

    pub fn render(&self) -> String {
        format!(
            "({} , {}, {}) + {}",
            self.vf[0].render(&VAR_NAMES),
            self.vf[1].render(&VAR_NAMES),
            self.vf[2].render(&VAR_NAMES),
            self.form.render(&VAR_NAMES, &DIFF_NAMES)
        )
    }
}

/// `H_j = -j dx ^ dy ^ dz`.
pub fn h_flux(j: i64) -> Form {
    let dx = Form::differential(3, 0, 3, 0);
    let dy = Form::differential(3, 0, 3, 1);
    let dz = Form::differential(3, 0, 3, 2);
    dx.wedge(&dy).wedge(&dz).scale(&crate::scalar::int(-j))
}

/// Lie bracket of polynomial vector fields.
fn vf_bracket(a: &[Poly; 3], b: &[Poly; 3]) -> [Poly; 3] {
    core::array::from_fn(|i| {
        let mut out = Poly::zero(3);
        for j in 0..3 {
            out = out.add(&a[j].mul(&b[i].derivative(j)));
            out = out.sub(&b[j].mul(&a[i].derivative(j)));
        }
        out
    })
}

/// The `H`-twisted Dorfman bracket
/// `[X + xi, Y + eta]_H = [X, Y] + L_X eta - i_Y d xi + i_X i_Y H`.
pub fn dorfman_bracket(s1: &Section, s2: &Section, p: Params) -> Section {
    let h = h_flux(p.j);
    let vf = vf_bracket(&s1.vf, &s2.vf);
    let form = s2
        .form
        .lie_derivative(&s1.vf)
        .sub(&s1.form.d().interior(&s2.vf))
        .add(&h.interior(&s2.vf).interior(&s1.vf));
    Section { vf, form }
}

/// The global frame of `TN(k) + T*N(k)` carrying the `h(k,j)` structure.
pub fn frame_section(b: LieBasis, p: Params) -> Section {
    let var = |i: usize| Poly::var(3, i);
    let dd = |i: usize| Form::differential(3, 0, 3, i);
    let half_k = crate::scalar::frac(p.k, 2);
    match b {
        LieBasis::Beta(1) => {
            let mut vf: [Poly; 3] = core::array::from_fn(|_| Poly::zero(3));
            vf[0] = Poly::one(3);
            vf[1] = var(2).scale(&half_k);
            Section::from_vector(vf)
        }
        LieBasis::Beta(2) => {
            let mut vf: [Poly; 3] = core::array::from_fn(|_| Poly::zero(3));
            vf[1] = Poly::one(3);
            Section::from_vector(vf)
        }
        LieBasis::Beta(3) => {
            let mut vf: [Poly; 3] = core::array::from_fn(|_| Poly::zero(3));
            vf[2] = Poly::one(3);
            vf[1] = var(0).scale(&(-half_k));
            Section::from_vector(vf)
        }
        LieBasis::Alpha(1) => Section::from_form(dd(0)),
        LieBasis::Alpha(2) => Section::from_form(
            dd(1)
                .add(&dd(2).scale_poly(&var(0).scale(&half_k)))
                .add(&dd(0).scale_poly(&var(2).scale(&(-half_k)))),
        ),
        LieBasis::Alpha(3) => Section::from_form(dd(2)),
        _ => unreachable!("basis index out of range"),
    }
}

/// The Dorfman bracket of the frame sections reproduces `bracket_basis`.
pub fn check_frame_structure_constants(p: Params) -> VerificationReport {
    for &a in &LieBasis::all() {
        for &b in &LieBasis::all() {
            let got = dorfman_bracket(&frame_section(a, p), &frame_section(b, p), p);
            let mut want = Section::zero();
            for (c, coeff) in bracket_basis(a, b, p).terms() {
                want = want.add(&frame_section(*c, p).scale(coeff));
            }
            if got != want {
                return VerificationReport::fail(
                    "dorfman-frame",
                    Counterexample {
                        location: format!("pair ({a}, {b})"),
                        expected: want.render(),
                        actual: got.render(),
                    },
                )
                .with_params(p);
            }
        }
    }
    VerificationReport::pass("dorfman-frame").with_params(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn flux_is_closed() {
        assert!(h_flux(5).d().is_zero());
    }

    #[test]
    fn two_one_forms_bracket_to_zero() {
        let p = Params::new(2, 3);
        let dx = Section::from_form(Form::differential(3, 0, 3, 0));
        let dy = Section::from_form(Form::differential(3, 0, 3, 1));
        assert!(dorfman_bracket(&dx, &dy, p).is_zero());
    }

    #[test]
    fn lie_derivative_example() {
        // [d/dy, x dz]_H at k = j = 0 is L_{d/dy}(x dz) = 0.
        let p = Params::new(0, 0);
        let mut vf: [Poly; 3] = core::array::from_fn(|_| Poly::zero(3));
        vf[1] = Poly::one(3);
        let dy_field = Section::from_vector(vf);
        let xdz = Section::from_form(
            Form::differential(3, 0, 3, 2).scale_poly(&Poly::var(3, 0)),
        );
        assert!(dorfman_bracket(&dy_field, &xdz, p).is_zero());
    }

    #[test]
    fn frame_reproduces_structure_constants() {
        for k in -3..=3 {
            for j in -3..=3 {
                let p = Params::new(k, j);
                assert!(check_frame_structure_constants(p).passed(), "{p}");
            }
        }
    }

    #[test]
    fn beta1_beta2_is_j_alpha3() {
        let p = Params::new(1, 1);
        let got = dorfman_bracket(
            &frame_section(LieBasis::Beta(1), p),
            &frame_section(LieBasis::Beta(2), p),
            p,
        );
        let want = frame_section(LieBasis::Alpha(3), p).scale(&int(1));
        assert_eq!(got, want);
    }
}
