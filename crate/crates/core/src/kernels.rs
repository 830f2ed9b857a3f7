//! Scalar two-variable formal distributions with bounded log-degree: the
//! delta kernel, the logarithmic kernel, the dilogarithmic kernel `rl`, the
//! trilogarithmic kernel `t`, and their derivative calculus.
//!
//! A `Kernel` stores the exact coefficients of the true (infinite)
//! distribution for all exponents inside its window. Every operation records
//! margin consumption, and comparisons only range over cells provably
//! unaffected by truncation, so each pass/fail outcome is exact.

use crate::error::CoreError;
use crate::report::{Counterexample, VerificationReport};
use crate::scalar::{self, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Truncation contract: exponents range over `|p| <= n`, log-degrees over
/// `0..=l` per variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub n: i64,
    pub l: u8,
}

impl Window {
    pub fn new(n: i64, l: u8) -> Self {
        assert!(n >= 1 && l <= 3, "window out of contract");
        Window { n, l }
    }
}

/// Cell key `(p_z, p_w, l_z, l_w)`.
pub type Cell = (i64, i64, u8, u8);

/// A finite Laurent-log polynomial in `z, w`: terms `(dp_z, dp_w, dl_z, dl_w, coeff)`.
pub type LaurentLog = Vec<(i64, i64, u8, u8, Scalar)>;

/// A truncated two-variable formal distribution with scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub window: Window,
    /// Cells with `max(|p_z|, |p_w|) <= margin` are exact.
    pub margin: i64,
    terms: BTreeMap<Cell, Scalar>,
}

impl Kernel {
    pub fn zero(window: Window) -> Self {
        Kernel {
            window,
            margin: window.n,
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, cell: Cell, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let (pz, pw, lz, lw) = cell;
        if pz.abs() > self.window.n || pw.abs() > self.window.n {
            return;
        }
        debug_assert!(lz <= self.window.l && lw <= self.window.l);
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(cell) {
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

    /// Add a value into a cell (used by closed-form instantiation).
    pub fn add_cell(&mut self, cell: Cell, c: Scalar) {
        self.insert(cell, c);
    }

    pub fn coefficient(&self, cell: Cell) -> Scalar {
        self.terms.get(&cell).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Cell, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Kernel) -> Kernel {
        assert_eq!(self.window, other.window);
        let mut out = self.clone();
        out.margin = self.margin.min(other.margin);
        for (cell, c) in &other.terms {
            out.insert(*cell, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Kernel) -> Kernel {
        self.add(&other.scale(&scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Kernel {
        let mut out = Kernel::zero(self.window);
        out.margin = self.margin;
        if c.is_zero() {
            return out;
        }
        for (cell, v) in &self.terms {
            out.terms.insert(*cell, v.clone() * c.clone());
        }
        out
    }

    /// Formal `d/dz`: `z^p log^a z -> p z^{p-1} log^a z + a z^{p-1} log^{a-1} z`.
    pub fn d_z(&self) -> Kernel {
        let mut out = Kernel::zero(self.window);
        out.margin = self.margin - 1;
        for (&(pz, pw, lz, lw), c) in &self.terms {
            out.insert((pz - 1, pw, lz, lw), c.clone() * scalar::int(pz));
            if lz > 0 {
                out.insert((pz - 1, pw, lz - 1, lw), c.clone() * scalar::int(lz as i64));
            }
        }
        out
    }

    /// Formal `d/dw`.
    pub fn d_w(&self) -> Kernel {
        let mut out = Kernel::zero(self.window);
        out.margin = self.margin - 1;
        for (&(pz, pw, lz, lw), c) in &self.terms {
            out.insert((pz, pw - 1, lz, lw), c.clone() * scalar::int(pw));
            if lw > 0 {
                out.insert((pz, pw - 1, lz, lw - 1), c.clone() * scalar::int(lw as i64));
            }
        }
        out
    }

    /// Multiply by a finite Laurent-log polynomial, coefficientwise exact.
    pub fn mul_laurent(&self, m: &LaurentLog) -> Result<Kernel, CoreError> {
        let mut out = Kernel::zero(self.window);
        let mut shift = 0i64;
        for (dpz, dpw, dlz, dlw, mc) in m {
            shift = shift.max(dpz.abs()).max(dpw.abs());
            for (&(pz, pw, lz, lw), c) in &self.terms {
                let nlz = lz + dlz;
                let nlw = lw + dlw;
                if nlz > self.window.l || nlw > self.window.l {
                    // only reject if the coefficient is actually nonzero
                    if !c.is_zero() && !mc.is_zero() {
                        return Err(CoreError::LogDegreeOverflow);
                    }
                    continue;
                }
                out.insert((pz + dpz, pw + dpw, nlz, nlw), c.clone() * mc.clone());
            }
        }
        out.margin = self.margin - shift;
        Ok(out)
    }

    /// Exchange `z` and `w`: cell `(p_z, p_w, l_z, l_w) -> (p_w, p_z, l_w, l_z)`.
    pub fn swap_zw(&self) -> Kernel {
        let mut out = Kernel::zero(self.window);
        out.margin = self.margin;
        for (&(pz, pw, lz, lw), c) in &self.terms {
            out.terms.insert((pw, pz, lw, lz), c.clone());
        }
        out
    }

    /// First differing cell inside the common safe window, if any.
    pub fn first_difference(&self, other: &Kernel) -> Option<(Cell, Scalar, Scalar)> {
        let m = self.margin.min(other.margin);
        let mut cells: Vec<Cell> = Vec::new();
        for (&cell, _) in self.terms.iter().chain(other.terms.iter()) {
            let (pz, pw, _, _) = cell;
            if pz.abs() <= m && pw.abs() <= m {
                cells.push(cell);
            }
        }
        cells.sort_unstable();
        cells.dedup();
        for cell in cells {
            let a = self.coefficient(cell);
            let b = other.coefficient(cell);
            if a != b {
                return Some((cell, a, b));
            }
        }
        None
    }

    /// Line-oriented dump `p_z p_w l_z l_w numerator/denominator`, sorted.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (&(pz, pw, lz, lw), c) in &self.terms {
            out.push_str(&format!(
                "{pz} {pw} {lz} {lw} {}\n",
                scalar::to_frac_string(c)
            ));
        }
        out
    }
}

fn render_cell(cell: Cell) -> String {
    format!(
        "(p_z={}, p_w={}, l_z={}, l_w={})",
        cell.0, cell.1, cell.2, cell.3
    )
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// `delta(z - w) = sum_n z^n w^{-n-1}`, log-free. The convention is pinned by
/// `d_z log(z - w) = delta(z, w)`.
pub fn delta(w: Window) -> Kernel {
    let mut out = Kernel::zero(w);
    for n in -w.n..=w.n {
        out.insert((n, -n - 1, 0, 0), scalar::one());
    }
    out
}

/// The two-sided logarithmic kernel
/// `log z - log w - sum_{n>0} w^n z^{-n} / n + sum_{n>0} z^n w^{-n} / n`.
pub fn log_kernel(w: Window) -> Result<Kernel, CoreError> {
    if w.l < 1 {
        return Err(CoreError::WindowTooSmall(String::from(
            "log kernel needs log-degree >= 1",
        )));
    }
    let mut out = Kernel::zero(w);
    out.insert((0, 0, 1, 0), scalar::one());
    out.insert((0, 0, 0, 1), scalar::int(-1));
    for n in 1..=w.n {
        out.insert((-n, n, 0, 0), scalar::frac(-1, n));
        out.insert((n, -n, 0, 0), scalar::frac(1, n));
    }
    Ok(out)
}

/// `Li_2(z/w) = sum_{n>0} z^n w^{-n} / n^2` truncated.
fn li2_zw(w: Window) -> Kernel {
    let mut out = Kernel::zero(w);
    for n in 1..=w.n {
        out.insert((n, -n, 0, 0), scalar::frac(1, n * n));
    }
    out
}

/// `Li_3(z/w) = sum_{n>0} z^n w^{-n} / n^3` truncated.
fn li3_zw(w: Window) -> Kernel {
    let mut out = Kernel::zero(w);
    for n in 1..=w.n {
        out.insert((n, -n, 0, 0), scalar::frac(1, n * n * n));
    }
    out
}

fn log_z_minus_log_w() -> LaurentLog {
    vec![
        (0, 0, 1, 0, scalar::one()),
        (0, 0, 0, 1, scalar::int(-1)),
    ]
}

/// The symmetric dilogarithmic kernel
/// `rl = Li2(z/w) + Li2(w/z) + (1/2)(log w - log z)^2 - (1/2)(log z - log w) log(z-w)`.
pub fn rl_kernel(w: Window) -> Result<Kernel, CoreError> {
    if w.l < 2 {
        return Err(CoreError::WindowTooSmall(String::from(
            "rl kernel needs log-degree >= 2",
        )));
    }
    let li2 = li2_zw(w);
    let mut out = li2.add(&li2.swap_zw());
    // (1/2)(log w - log z)^2 = (1/2) log^2 w - log z log w + (1/2) log^2 z
    out.insert((0, 0, 0, 2), scalar::frac(1, 2));
    out.insert((0, 0, 1, 1), scalar::int(-1));
    out.insert((0, 0, 2, 0), scalar::frac(1, 2));
    let cross = log_kernel(w)?
        .mul_laurent(&log_z_minus_log_w())?
        .scale(&scalar::frac(-1, 2));
    Ok(out.add(&cross))
}

/// The antisymmetric trilogarithmic kernel
/// `t = -2 (Li3(z/w) - Li3(w/z)) + (log z - log w)(Li2(z/w) + Li2(w/z))
///    + (1/6)(log z - log w)^3 - (1/6)(log^2 z - 3 log z log w + log^2 w) log(z-w)`.
pub fn t_kernel(w: Window) -> Result<Kernel, CoreError> {
    if w.l < 3 {
        return Err(CoreError::WindowTooSmall(String::from(
            "t kernel needs log-degree 3",
        )));
    }
    let li3 = li3_zw(w);
    let mut out = li3.sub(&li3.swap_zw()).scale(&scalar::int(-2));

    let li2 = li2_zw(w);
    let li2sym = li2.add(&li2.swap_zw());
    out = out.add(&li2sym.mul_laurent(&log_z_minus_log_w())?);

    // (1/6)(log z - log w)^3
    out.insert((0, 0, 3, 0), scalar::frac(1, 6));
    out.insert((0, 0, 2, 1), scalar::frac(-1, 2));
    out.insert((0, 0, 1, 2), scalar::frac(1, 2));
    out.insert((0, 0, 0, 3), scalar::frac(-1, 6));

    let quad = quadratic_log_poly();
    let tail = log_kernel(w)?
        .mul_laurent(&quad)?
        .scale(&scalar::frac(-1, 6));
    Ok(out.add(&tail))
}

/// `log^2 z - 3 log z log w + log^2 w`.
fn quadratic_log_poly() -> LaurentLog {
    vec![
        (0, 0, 2, 0, scalar::one()),
        (0, 0, 1, 1, scalar::int(-3)),
        (0, 0, 0, 2, scalar::one()),
    ]
}

// ---------------------------------------------------------------------------
// The derivative identities
// ---------------------------------------------------------------------------

fn compare(check: &str, lhs: &Kernel, rhs: &Kernel) -> VerificationReport {
    match lhs.first_difference(rhs) {
        None => VerificationReport::pass(check),
        Some((cell, a, b)) => VerificationReport::fail(
            check,
            Counterexample {
                location: render_cell(cell),
                expected: scalar::to_frac_string(&b),
                actual: scalar::to_frac_string(&a),
            },
        ),
    }
}

/// The four derivative identities of the kernel calculus, verified exactly
/// on the safe sub-window:
///
/// 1. `d_z log = delta = -d_w log`
/// 2. `d_z rl = (1/2) z^{-1} log - (1/2)(log z - log w) delta`
/// 3. `d_w d_z rl = -(1/2)(log z - log w) d_w delta`
/// 4. `d_z d_w t = -(1/6)(log z - log w) z^{-1} delta + (1/2)(zw)^{-1} log
///                - (1/6)(log^2 z - 3 log z log w + log^2 w) d_w delta`
pub fn check_kernel_identities(w: Window) -> Result<Vec<VerificationReport>, CoreError> {
    if w.n < 4 || w.l != 3 {
        return Err(CoreError::WindowTooSmall(String::from(
            "identity suite needs N >= 4 and log-degree 3",
        )));
    }
    let del = delta(w);
    let log = log_kernel(w)?;
    let rl = rl_kernel(w)?;
    let t = t_kernel(w)?;
    let mut reports = Vec::new();

    // (1)
    reports.push(compare("kernels-dz-log-is-delta", &log.d_z(), &del));
    reports.push(compare(
        "kernels-dw-log-is-minus-delta",
        &log.d_w().scale(&scalar::int(-1)),
        &del,
    ));

    // (2)
    let zinv = vec![(-1i64, 0i64, 0u8, 0u8, scalar::frac(1, 2))];
    let rhs2 = log
        .mul_laurent(&zinv)?
        .add(&del.mul_laurent(&log_z_minus_log_w())?.scale(&scalar::frac(-1, 2)));
    reports.push(compare("kernels-dz-rl", &rl.d_z(), &rhs2));

    // (3)
    let rhs3 = del
        .d_w()
        .mul_laurent(&log_z_minus_log_w())?
        .scale(&scalar::frac(-1, 2));
    reports.push(compare("kernels-dwdz-rl", &rl.d_z().d_w(), &rhs3));

    // (4)
    let term_a = del
        .mul_laurent(&vec![(-1i64, 0i64, 1u8, 0u8, scalar::one()), (-1, 0, 0, 1, scalar::int(-1))])?
        .scale(&scalar::frac(-1, 6));
    let term_b = log
        .mul_laurent(&vec![(-1i64, -1i64, 0u8, 0u8, scalar::one())])?
        .scale(&scalar::frac(1, 2));
    let term_c = del
        .d_w()
        .mul_laurent(&quadratic_log_poly())?
        .scale(&scalar::frac(-1, 6));
    let rhs4 = term_a.add(&term_b).add(&term_c);
    reports.push(compare("kernels-dzdw-t", &t.d_w().d_z(), &rhs4));

    Ok(reports)
}

/// Negative control: identity (3) with the log kernel in place of `rl` must
/// fail, and the report carries the first differing coefficient.
pub fn check_negative_control(w: Window) -> Result<VerificationReport, CoreError> {
    let del = delta(w);
    let log = log_kernel(w)?;
    let rhs3 = del
        .d_w()
        .mul_laurent(&log_z_minus_log_w())?
        .scale(&scalar::frac(-1, 2));
    let report = compare("kernels-negative-control", &log.d_z().d_w(), &rhs3);
    Ok(match report.status {
        crate::report::CheckStatus::Fail => {
            // The mismatch is the expected outcome.
            let cx = report.counterexample.clone().unwrap();
            VerificationReport::pass("kernels-negative-control").note(format!(
                "substituting log for rl breaks the identity at {} (lhs {}, rhs {})",
                cx.location, cx.actual, cx.expected
            ))
        }
        _ => VerificationReport::fail(
            "kernels-negative-control",
            Counterexample {
                location: String::from("whole safe window"),
                expected: String::from("a differing coefficient"),
                actual: String::from("no difference found"),
            },
        ),
    })
}

/// Symmetry suite: `delta` is swap-invariant, `rl` symmetric, `t` antisymmetric.
pub fn check_kernel_symmetries(w: Window) -> Result<Vec<VerificationReport>, CoreError> {
    let del = delta(w);
    let rl = rl_kernel(w)?;
    let t = t_kernel(w)?;
    Ok(vec![
        compare("kernels-delta-swap", &del.swap_zw(), &del),
        compare("kernels-rl-symmetric", &rl.swap_zw(), &rl),
        compare("kernels-t-antisymmetric", &t.swap_zw(), &t.scale(&scalar::int(-1))),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn w8() -> Window {
        Window::new(8, 3)
    }

    #[test]
    fn delta_cells() {
        let d = delta(w8());
        assert_eq!(d.coefficient((5, -6, 0, 0)), int(1));
        assert_eq!(d.coefficient((3, -3, 0, 0)), int(0));
    }

    #[test]
    fn log_cells() {
        let log = log_kernel(w8()).unwrap();
        assert_eq!(log.coefficient((0, 0, 1, 0)), int(1));
        assert_eq!(log.coefficient((0, 0, 0, 1)), int(-1));
        assert_eq!(log.coefficient((3, -3, 0, 0)), frac(1, 3));
        assert_eq!(log.coefficient((-2, 2, 0, 0)), frac(-1, 2));
        assert!(log_kernel(Window::new(4, 0)).is_err());
        assert!(rl_kernel(Window::new(4, 1)).is_err());
        assert!(t_kernel(Window::new(4, 2)).is_err());
        assert!(check_kernel_identities(Window::new(3, 3)).is_err());
    }

    #[test]
    fn rl_cells() {
        let rl = rl_kernel(w8()).unwrap();
        // pure Laurent diagonal carries the Li2 coefficients
        assert_eq!(rl.coefficient((2, -2, 0, 0)), frac(1, 4));
        for n in 1..=8i64 {
            assert_eq!(rl.coefficient((n, -n, 0, 0)), frac(1, n * n));
            assert_eq!(rl.coefficient((-n, n, 0, 0)), frac(1, n * n));
        }
        // all pure-log cells cancel
        assert_eq!(rl.coefficient((0, 0, 2, 0)), int(0));
        assert_eq!(rl.coefficient((0, 0, 1, 1)), int(0));
        assert_eq!(rl.coefficient((0, 0, 0, 2)), int(0));
        // the mixed log-Laurent diagonal
        assert_eq!(rl.coefficient((3, -3, 1, 0)), frac(-1, 6));
        assert_eq!(rl.coefficient((3, -3, 0, 1)), frac(1, 6));
    }

    #[test]
    fn t_cells() {
        let t = t_kernel(w8()).unwrap();
        // -2/n^3 on the log-free diagonal; the quadratic-log tail of the
        // definition contributes nothing log-free
        assert_eq!(t.coefficient((4, -4, 0, 0)), frac(-1, 32));
        for n in 1..=8i64 {
            assert_eq!(t.coefficient((n, -n, 0, 0)), frac(-2, n * n * n));
            assert_eq!(t.coefficient((-n, n, 0, 0)), frac(2, n * n * n));
        }
        assert_eq!(t.coefficient((0, 0, 2, 1)), frac(1, 6));
        assert_eq!(t.coefficient((0, 0, 1, 2)), frac(-1, 6));
        assert_eq!(t.coefficient((0, 0, 3, 0)), int(0));
    }

    #[test]
    fn symmetries() {
        for r in check_kernel_symmetries(w8()).unwrap() {
            assert!(r.passed(), "{}", r.check);
        }
    }

    #[test]
    fn derivative_identities() {
        for n in [4, 8, 12, 16] {
            let w = Window::new(n, 3);
            for r in check_kernel_identities(w).unwrap() {
                assert!(r.passed(), "{} at N={}", r.check, n);
            }
        }
    }

    #[test]
    fn negative_control_fails_as_expected() {
        let r = check_negative_control(w8()).unwrap();
        assert!(r.passed());
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn derivative_rules() {
        // d_z (log z) = z^{-1}
        let mut k = Kernel::zero(w8());
        k.insert((0, 0, 1, 0), int(1));
        let d = k.d_z();
        assert_eq!(d.coefficient((-1, 0, 0, 0)), int(1));
        // d_z z^n = n z^{n-1}
        let mut k = Kernel::zero(w8());
        k.insert((5, 0, 0, 0), int(1));
        assert_eq!(k.d_z().coefficient((4, 0, 0, 0)), int(5));
    }

    #[test]
    fn delta_annihilates_z_minus_w() {
        let d = delta(w8());
        let zmw = vec![
            (1i64, 0i64, 0u8, 0u8, int(1)),
            (0, 1, 0, 0, int(-1)),
        ];
        let prod = d.mul_laurent(&zmw).unwrap();
        assert_eq!(prod.first_difference(&Kernel::zero(w8())), None);
        assert_eq!(prod.margin, 7);
    }

    #[test]
    fn dump_is_sorted_and_exact() {
        let log = log_kernel(Window::new(2, 3)).unwrap();
        let dump = log.dump();
        let mut lines: Vec<&str> = dump.lines().collect();
        let sorted = {
            let mut s = lines.clone();
            s.sort_unstable();
            s
        };
        // numeric ordering of the BTreeMap is stable; content is exact
        assert!(lines.contains(&"1 -1 0 0 1"));
        assert!(lines.contains(&"-2 2 0 0 -1/2"));
        assert_eq!(lines.len(), 6);
        lines.sort_unstable();
        assert_eq!(lines, sorted);
    }
}
