//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Used for the symbolic group law (associativity in 18 indeterminates),
//! coordinate maps, and the coefficient ring of polynomial differential
//! forms. The variable count is fixed per polynomial and checked on every
//! binary operation.

use crate::scalar::{self, Scalar};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// A polynomial in `nvars` commuting variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, scalar::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0u32; nvars];
        exps[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exps, scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, coeff) in &self.terms {
            out.terms.insert(e.clone(), coeff.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.insert(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        assert!(i < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            out.insert(exps, c.clone() * scalar::int(e[i] as i64));
        }
        out
    }

    /// Substitute `x_i -> images[i]`. All images must share a variable count,
    /// which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let out_nvars = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Poly::zero(out_nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(out_nvars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= point[i].clone();
                }
            }
            acc += term;
        }
        acc
    }

    /// Widen to `new_nvars` variables, shifting existing variables by `offset`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Poly {
        assert!(self.nvars + offset <= new_nvars);
        let mut out = Poly::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            exps[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Render with the given variable names, for counterexample reports.
    pub fn render(&self, names: &[&str]) -> String {
        use alloc::format;
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in &self.terms {
            let mut s = scalar::to_frac_string(c);
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("?");
                if exp == 1 {
                    s = format!("{s}*{name}");
                } else {
                    s = format!("{s}*{name}^{exp}");
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn ring_ops() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        let q = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        let x = Poly::var(1, 0);
        let p = x.mul(&x).mul(&x).scale(&frac(1, 3)); // x^3/3
        assert_eq!(p.derivative(0), x.mul(&x));
        assert_eq!(p.eval(&[int(3)]), int(9));
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&y).add(&y);
        let images = [Poly::var(1, 0), Poly::var(1, 0).mul(&Poly::var(1, 0))];
        // p(x, x^2) = x^3 + x^2
        let got = p.substitute(&images);
        let t = Poly::var(1, 0);
        let want = t.mul(&t).mul(&t).add(&t.mul(&t));
        assert_eq!(got, want);
    }
}
