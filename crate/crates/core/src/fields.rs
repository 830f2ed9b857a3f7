//! Logarithmic fields with mode-element coefficients: the coordinate fields,
//! the current fields, two-variable commutators, and the commutator-table
//! verification.
//!
//! A `LogField` is kept symbolically as a sum of terms
//! `c * log^a z * z^s * (series atoms) * (fixed generators)`, where a series
//! atom is a (possibly differentiated) basic mode series `sum_n g_n z^{-n}`.
//! This representation is exact at every power: products are term products
//! of commuting atoms, and coefficient extraction at a power produces a
//! `ModeElement` whose infinite sums are convolution terms.
//!
//! Two-variable objects (`BiDist`) hold mode-element coefficients per cell
//! `(p_z, p_w, l_z, l_w)`. The commutator of two fields is computed cell by
//! cell from the mode bracket; the expected side is assembled from scalar
//! kernels in diagonal-family form times field factors.

use crate::error::CoreError;
use crate::kernels::{Kernel, Window};
use crate::lie::Params;
use crate::modes::{
    self, Affine, GTerm, GenKind, GenRef, Generator, ModeElement, WFactor, Weight,
};
use crate::scalar::{self, Scalar};
use crate::Variant;
use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

// ---------------------------------------------------------------------------
// Symbolic log-fields
// ---------------------------------------------------------------------------

/// A basic mode series `sum_n g_n z^{-n}` (kind `X` or `Y`, index `1..=3`),
/// differentiated `deriv` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub kind: GenKind,
    pub idx: u8,
    pub deriv: u8,
}

/// One symbolic term of a logarithmic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTerm {
    pub coef: Scalar,
    pub logp: u8,
    pub shift: i64,
    pub atoms: Vec<Atom>,
    pub spect: Vec<Generator>,
}

impl FieldTerm {
    fn key(&self) -> (u8, i64, Vec<Atom>, Vec<Generator>) {
        (self.logp, self.shift, self.atoms.clone(), self.spect.clone())
    }
}

/// An exact logarithmic field: a canonicalized sum of `FieldTerm`s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogField {
    terms: Vec<FieldTerm>,
}

impl LogField {
    pub fn zero() -> Self {
        LogField::default()
    }

    pub fn constant(c: Scalar) -> Self {
        LogField::from_terms(vec![FieldTerm {
            coef: c,
            logp: 0,
            shift: 0,
            atoms: Vec::new(),
            spect: Vec::new(),
        }])
    }

    pub fn one() -> Self {
        LogField::constant(scalar::one())
    }

    pub fn series(kind: GenKind, idx: u8) -> Self {
        LogField::from_terms(vec![FieldTerm {
            coef: scalar::one(),
            logp: 0,
            shift: 0,
            atoms: vec![Atom { kind, idx, deriv: 0 }],
            spect: Vec::new(),
        }])
    }

    pub fn spectator(g: Generator) -> Self {
        LogField::from_terms(vec![FieldTerm {
            coef: scalar::one(),
            logp: 0,
            shift: 0,
            atoms: Vec::new(),
            spect: vec![g],
        }])
    }

    fn from_terms(terms: Vec<FieldTerm>) -> Self {
        let mut f = LogField { terms };
        f.canonicalize();
        f
    }

    fn canonicalize(&mut self) {
        let mut map: BTreeMap<(u8, i64, Vec<Atom>, Vec<Generator>), Scalar> = BTreeMap::new();
        for mut t in self.terms.drain(..) {
            t.atoms.sort_unstable();
            t.spect.sort_unstable();
            let entry = map.entry(t.key()).or_insert_with(scalar::zero);
            *entry += t.coef;
        }
        self.terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((logp, shift, atoms, spect), coef)| FieldTerm {
                coef,
                logp,
                shift,
                atoms,
                spect,
            })
            .collect();
    }

    pub fn terms(&self) -> &[FieldTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest log degree appearing.
    pub fn log_degree(&self) -> u8 {
        self.terms.iter().map(|t| t.logp).max().unwrap_or(0)
    }

    pub fn add(&self, other: &LogField) -> LogField {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        LogField::from_terms(terms)
    }

    pub fn sub(&self, other: &LogField) -> LogField {
        self.add(&other.scale(&scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> LogField {
        if c.is_zero() {
            return LogField::zero();
        }
        LogField {
            terms: self
                .terms
                .iter()
                .map(|t| FieldTerm { coef: t.coef.clone() * c.clone(), ..t.clone() })
                .collect(),
        }
    }

    /// Multiply by `log z`.
    pub fn mul_log(&self) -> Result<LogField, CoreError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.logp >= 3 {
                return Err(CoreError::LogDegreeOverflow);
            }
            terms.push(FieldTerm { logp: t.logp + 1, ..t.clone() });
        }
        Ok(LogField::from_terms(terms))
    }

    /// Multiply by `z^d`.
    pub fn mul_zpow(&self, d: i64) -> LogField {
        LogField {
            terms: self
                .terms
                .iter()
                .map(|t| FieldTerm { shift: t.shift + d, ..t.clone() })
                .collect(),
        }
    }

    /// Same-point product. All coefficient generators of the two factors
    /// must commute; this holds for every product the field definitions use
    /// and is asserted here.
    pub fn mul(&self, other: &LogField, p: Params) -> Result<LogField, CoreError> {
        let mut terms = Vec::new();
        for ta in &self.terms {
            for tb in &other.terms {
                let logp = ta.logp + tb.logp;
                if logp > 3 {
                    return Err(CoreError::LogDegreeOverflow);
                }
                if ta.atoms.len() + tb.atoms.len() > 3 {
                    return Err(CoreError::DegreeOverflow);
                }
                let fams_a: Vec<(GenKind, u8)> = ta
                    .atoms
                    .iter()
                    .map(|a| (a.kind, a.idx))
                    .chain(ta.spect.iter().map(|g| (g.kind, g.idx)))
                    .collect();
                let fams_b: Vec<(GenKind, u8)> = tb
                    .atoms
                    .iter()
                    .map(|a| (a.kind, a.idx))
                    .chain(tb.spect.iter().map(|g| (g.kind, g.idx)))
                    .collect();
                for fa in &fams_a {
                    for fb in &fams_b {
                        if !modes::kinds_commute(*fa, *fb, p) {
                            return Err(CoreError::OrderingAmbiguity(format!(
                                "{fa:?} vs {fb:?} in a field product"
                            )));
                        }
                    }
                }
                let mut atoms = ta.atoms.clone();
                atoms.extend(tb.atoms.iter().copied());
                let mut spect = ta.spect.clone();
                spect.extend(tb.spect.iter().copied());
                terms.push(FieldTerm {
                    coef: ta.coef.clone() * tb.coef.clone(),
                    logp,
                    shift: ta.shift + tb.shift,
                    atoms,
                    spect,
                });
            }
        }
        Ok(LogField::from_terms(terms))
    }

    /// `d/dz` with `log z -> z^{-1}`.
    pub fn derive(&self) -> LogField {
        let mut terms = Vec::new();
        for t in &self.terms {
            if t.logp > 0 {
                terms.push(FieldTerm {
                    coef: t.coef.clone() * scalar::int(t.logp as i64),
                    logp: t.logp - 1,
                    shift: t.shift - 1,
                    atoms: t.atoms.clone(),
                    spect: t.spect.clone(),
                });
            }
            if t.shift != 0 {
                terms.push(FieldTerm {
                    coef: t.coef.clone() * scalar::int(t.shift),
                    logp: t.logp,
                    shift: t.shift - 1,
                    atoms: t.atoms.clone(),
                    spect: t.spect.clone(),
                });
            }
            for (i, a) in t.atoms.iter().enumerate() {
                let mut atoms = t.atoms.clone();
                atoms[i] = Atom { deriv: a.deriv + 1, ..*a };
                terms.push(FieldTerm { atoms, ..t.clone() });
            }
        }
        LogField::from_terms(terms)
    }

    /// Projection onto terms without `log z`.
    pub fn hat(&self) -> LogField {
        LogField {
            terms: self.terms.iter().filter(|t| t.logp == 0).cloned().collect(),
        }
    }

    /// Exact coefficient at `(power, logdeg)` as a mode element.
    pub fn coefficient(&self, power: i64, logdeg: u8, p: Params) -> Result<ModeElement, CoreError> {
        let mut out = ModeElement::zero();
        for piece in self.coefficient_pieces(Affine::constant(power), logdeg, false)? {
            piece.push_into(&mut out, p)?;
        }
        Ok(out)
    }

    /// Coefficient at a symbolic power (affine in the ambient index `u`), as
    /// raw pieces. Internal atom splits consume the `v` slot when
    /// `internal_v` is set, else `u` and `v`.
    fn coefficient_pieces(
        &self,
        power: Affine,
        logdeg: u8,
        internal_v: bool,
    ) -> Result<Vec<CoeffPiece>, CoreError> {
        let mut out = Vec::new();
        for t in &self.terms {
            if t.logp != logdeg {
                continue;
            }
            let p0 = power.shift(-t.shift);
            let spect: Vec<GenRef> = t.spect.iter().map(|g| GenRef::concrete(*g)).collect();
            // coefficient of the d-th derivative of `sum g_n z^{-n}` at
            // power q: the mode is n = -q - d with weight prod_{t=1..d}(q+t)
            let atom_ref = |a: &Atom, q: Affine| -> (GenRef, Vec<WFactor>) {
                let mode = q.neg().shift(-(a.deriv as i64));
                let ws = (1..=a.deriv as i64).map(|s| WFactor::Lin(q.shift(s))).collect();
                (GenRef { kind: a.kind, idx: a.idx, mode }, ws)
            };
            match t.atoms.len() {
                0 => out.push(CoeffPiece {
                    coef: t.coef.clone(),
                    weight: Weight::one(),
                    factors: spect,
                    delta: Some(p0),
                    rank: 0,
                }),
                1 => {
                    let (g, ws) = atom_ref(&t.atoms[0], p0);
                    let mut factors = spect;
                    factors.push(g);
                    out.push(CoeffPiece {
                        coef: t.coef.clone(),
                        weight: Weight { factors: ws },
                        factors,
                        delta: None,
                        rank: 0,
                    });
                }
                2 => {
                    let q1 = if internal_v {
                        Affine { c0: 0, cu: 0, cv: 1 }
                    } else {
                        Affine::u()
                    };
                    let q2 = Affine {
                        c0: p0.c0 - q1.c0,
                        cu: p0.cu - q1.cu,
                        cv: p0.cv - q1.cv,
                    };
                    let (g1, mut ws) = atom_ref(&t.atoms[0], q1);
                    let (g2, w2) = atom_ref(&t.atoms[1], q2);
                    ws.extend(w2);
                    let mut factors = spect;
                    factors.push(g1);
                    factors.push(g2);
                    out.push(CoeffPiece {
                        coef: t.coef.clone(),
                        weight: Weight { factors: ws },
                        factors,
                        delta: None,
                        rank: 1,
                    });
                }
                3 => {
                    // three atoms need both slots; only legal without an
                    // ambient index
                    if internal_v {
                        return Err(CoreError::ConvolutionRank);
                    }
                    let q1 = Affine::u();
                    let q2 = Affine { c0: 0, cu: 0, cv: 1 };
                    let q3 = Affine { c0: p0.c0, cu: p0.cu - 1, cv: -1 };
                    let (g1, mut ws) = atom_ref(&t.atoms[0], q1);
                    let (g2, w2) = atom_ref(&t.atoms[1], q2);
                    let (g3, w3) = atom_ref(&t.atoms[2], q3);
                    ws.extend(w2);
                    ws.extend(w3);
                    let mut factors = spect;
                    factors.extend([g1, g2, g3]);
                    out.push(CoeffPiece {
                        coef: t.coef.clone(),
                        weight: Weight { factors: ws },
                        factors,
                        delta: None,
                        rank: 2,
                    });
                }
                _ => return Err(CoreError::DegreeOverflow),
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut s = scalar::to_frac_string(&t.coef);
                if t.logp > 0 {
                    s = format!("{s}*log^{}", t.logp);
                }
                if t.shift != 0 {
                    s = format!("{s}*z^{}", t.shift);
                }
                for a in &t.atoms {
                    let name = match a.kind {
                        GenKind::X => "X",
                        GenKind::Y => "Y",
                        _ => "?",
                    };
                    if a.deriv == 0 {
                        s = format!("{s}*{name}{}", a.idx);
                    } else {
                        s = format!("{s}*d{}({name}{})", a.deriv, a.idx);
                    }
                }
                for g in &t.spect {
                    s = format!("{s}*{g}");
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

/// A raw coefficient piece: factors with affine modes, a weight, an optional
/// support condition, and the number of internal slots consumed.
pub(crate) struct CoeffPiece {
    coef: Scalar,
    weight: Weight,
    factors: Vec<GenRef>,
    delta: Option<Affine>,
    rank: u8,
}

impl CoeffPiece {
    /// Push a fully concrete piece (no ambient index) into an element.
    fn push_into(self, out: &mut ModeElement, p: Params) -> Result<(), CoreError> {
        let mut term = GTerm {
            coef: self.coef,
            weight: self.weight,
            rank: self.rank,
            factors: self.factors,
        };
        if let Some(cond) = self.delta {
            match modes::resolve_delta(term, cond) {
                Some(t) => term = t,
                None => return Ok(()),
            }
        }
        out.push_term(term, p)
    }
}

// ---------------------------------------------------------------------------
// The coordinate and current fields
// ---------------------------------------------------------------------------

/// Field labels in storage order `x1, x2, x3, y1, y2, y3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldName {
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
}

impl FieldName {
    pub fn all() -> [FieldName; 6] {
        [
            FieldName::X1,
            FieldName::X2,
            FieldName::X3,
            FieldName::Y1,
            FieldName::Y2,
            FieldName::Y3,
        ]
    }

    pub fn position(&self) -> usize {
        *self as usize
    }
}

impl core::fmt::Display for FieldName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            FieldName::X1 => "x1",
            FieldName::X2 => "x2",
            FieldName::X3 => "x3",
            FieldName::Y1 => "y1",
            FieldName::Y2 => "y2",
            FieldName::Y3 => "y3",
        };
        write!(f, "{s}")
    }
}

/// The six logarithmic coordinate fields.
///
/// `x_2` and `y_2` carry `(k/2)`, `(j/2)` log tails over
/// `w_3 x_1(z) - w_1 x_3(z)`; `y_1` and `y_3` add `log^2 z` tails and
/// field-valued tails with `kj/6` coefficients.
pub fn coordinate_fields(p: Params) -> Result<[LogField; 6], CoreError> {
    let k2 = scalar::frac(p.k, 2);
    let j2 = scalar::frac(p.j, 2);
    let kj6 = scalar::frac(p.k * p.j, 6);

    let log1 = |g: Generator| LogField::spectator(g).mul_log();
    let x1 = LogField::series(GenKind::X, 1).add(&log1(Generator::w(1))?);
    let x3 = LogField::series(GenKind::X, 3).add(&log1(Generator::w(3))?);
    // v = w3 x1(z) - w1 x3(z); its log parts cancel
    let v = LogField::spectator(Generator::w(3))
        .mul(&x1, p)?
        .sub(&LogField::spectator(Generator::w(1)).mul(&x3, p)?);
    let x2 = LogField::series(GenKind::X, 2)
        .add(&log1(Generator::w(2))?)
        .add(&v.scale(&k2).mul_log()?);
    let y2 = LogField::series(GenKind::Y, 2)
        .add(&log1(Generator::p(2))?)
        .add(&v.scale(&j2).mul_log()?);
    let y1 = LogField::series(GenKind::Y, 1)
        .add(&log1(Generator::p(1))?)
        .add(
            &LogField::spectator(Generator::p(2))
                .mul(&x3, p)?
                .sub(&LogField::spectator(Generator::w(3)).mul(&y2, p)?)
                .scale(&k2)
                .mul_log()?,
        )
        .add(
            &LogField::spectator(Generator::w(2))
                .mul(&x3, p)?
                .sub(&LogField::spectator(Generator::w(3)).mul(&x2, p)?)
                .scale(&j2)
                .mul_log()?,
        )
        .add(
            &LogField::spectator(Generator::w(3))
                .mul(&v, p)?
                .scale(&kj6)
                .mul_log()?
                .mul_log()?,
        )
        .add(&x3.mul(&v, p)?.scale(&kj6).mul_log()?);
    let y3 = LogField::series(GenKind::Y, 3)
        .add(&log1(Generator::p(3))?)
        .add(
            &LogField::spectator(Generator::w(1))
                .mul(&y2, p)?
                .sub(&LogField::spectator(Generator::p(2)).mul(&x1, p)?)
                .scale(&k2)
                .mul_log()?,
        )
        .add(
            &LogField::spectator(Generator::w(1))
                .mul(&x2, p)?
                .sub(&LogField::spectator(Generator::w(2)).mul(&x1, p)?)
                .scale(&j2)
                .mul_log()?,
        )
        .add(
            &LogField::spectator(Generator::w(1))
                .mul(&v, p)?
                .scale(&(-kj6.clone()))
                .mul_log()?
                .mul_log()?,
        )
        .add(&x1.mul(&v, p)?.scale(&(-kj6)).mul_log()?);
    Ok([x1, x2, x3, y1, y2, y3])
}

/// The six current fields built from the coordinate fields per
///
/// ```text
/// a1 = dx1    a2 = dx2 - (k/2) x3 dx1 + (k/2) x1 dx3    a3 = dx3
/// b1 = dy1 + (j/2)(x3 dx2 - x2 dx3) + (k/2)(x3 dy2 - y2 dx3)
///          - (kj/3) x3^2 dx1 + (kj/3) x3 x1 dx3
/// b2 = dy2 - (j/2) x3 dx1 + (j/2) x1 dx3
/// b3 = dy3 + (j/2)(x2 dx1 - x1 dx2) + (k/2)(y2 dx1 - x1 dy2)
///          - (kj/3) x1^2 dx3 + (kj/3) x3 x1 dx1
/// ```
///
/// All `log z` terms cancel; the result is asserted log-free.
pub fn current_fields(p: Params) -> Result<[LogField; 6], CoreError> {
    let [x1, x2, x3, _y1, y2, _y3] = coordinate_fields(p)?;
    let [cx1, cx2, cx3, cy1, cy2, cy3] = coordinate_fields(p)?;
    let k2 = scalar::frac(p.k, 2);
    let j2 = scalar::frac(p.j, 2);
    let kj3 = scalar::frac(p.k * p.j, 3);
    let (dx1, dx2, dx3) = (cx1.derive(), cx2.derive(), cx3.derive());
    let (dy1, dy2, dy3) = (cy1.derive(), cy2.derive(), cy3.derive());

    let a1 = dx1.clone();
    let a3 = dx3.clone();
    let a2 = dx2
        .clone()
        .sub(&x3.mul(&dx1, p)?.scale(&k2))
        .add(&x1.mul(&dx3, p)?.scale(&k2));
    let b2 = dy2
        .clone()
        .sub(&x3.mul(&dx1, p)?.scale(&j2))
        .add(&x1.mul(&dx3, p)?.scale(&j2));
    let b1 = dy1
        .add(&x3.mul(&dx2, p)?.sub(&x2.mul(&dx3, p)?).scale(&j2))
        .add(&x3.mul(&dy2, p)?.sub(&y2.mul(&dx3, p)?).scale(&k2))
        .sub(&x3.mul(&x3, p)?.mul(&dx1, p)?.scale(&kj3))
        .add(&x3.mul(&x1, p)?.mul(&dx3, p)?.scale(&kj3));
    let b3 = dy3
        .add(&x2.mul(&dx1, p)?.sub(&x1.mul(&dx2, p)?).scale(&j2))
        .add(&y2.mul(&dx1, p)?.sub(&x1.mul(&dy2, p)?).scale(&k2))
        .sub(&x1.mul(&x1, p)?.mul(&dx3, p)?.scale(&kj3))
        .add(&x3.mul(&x1, p)?.mul(&dx1, p)?.scale(&kj3));

    let currents = [a1, a2, a3, b1, b2, b3];
    for (i, c) in currents.iter().enumerate() {
        if c.log_degree() > 0 {
            return Err(CoreError::OrderingAmbiguity(format!(
                "current field #{i} carries log terms"
            )));
        }
    }
    Ok(currents)
}

// ---------------------------------------------------------------------------
// Two-variable distributions with mode-element coefficients
// ---------------------------------------------------------------------------

pub type Cell = (i64, i64, u8, u8);

/// A truncated two-variable distribution with `ModeElement` coefficients.
#[derive(Debug, Clone, Default)]
pub struct BiDist {
    pub n: i64,
    pub margin: i64,
    cells: BTreeMap<Cell, ModeElement>,
}

impl BiDist {
    pub fn zero(n: i64) -> Self {
        BiDist { n, margin: n, cells: BTreeMap::new() }
    }

    fn insert(&mut self, cell: Cell, e: ModeElement, p: Params) -> Result<(), CoreError> {
        if e.is_structurally_zero() || cell.0.abs() > self.n || cell.1.abs() > self.n {
            return Ok(());
        }
        match self.cells.get_mut(&cell) {
            Some(slot) => slot.add_assign(&e, p)?,
            None => {
                self.cells.insert(cell, e);
            }
        }
        Ok(())
    }

    pub fn cell(&self, cell: Cell) -> ModeElement {
        self.cells.get(&cell).cloned().unwrap_or_else(ModeElement::zero)
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Cell, &ModeElement)> {
        self.cells.iter()
    }

    pub fn sub(&self, other: &BiDist, p: Params) -> Result<BiDist, CoreError> {
        let mut out = self.clone();
        out.margin = self.margin.min(other.margin);
        for (cell, e) in &other.cells {
            out.insert(*cell, e.scale(&scalar::int(-1)), p)?;
        }
        Ok(out)
    }

    /// Formal `d/dz` on cells; the margin shrinks by one.
    pub fn d_z(&self, p: Params) -> Result<BiDist, CoreError> {
        let mut out = BiDist::zero(self.n);
        out.margin = self.margin - 1;
        for (&(pz, pw, lz, lw), e) in &self.cells {
            out.insert((pz - 1, pw, lz, lw), e.scale(&scalar::int(pz)), p)?;
            if lz > 0 {
                out.insert((pz - 1, pw, lz - 1, lw), e.scale(&scalar::int(lz as i64)), p)?;
            }
        }
        Ok(out)
    }

    pub fn d_w(&self, p: Params) -> Result<BiDist, CoreError> {
        let mut out = BiDist::zero(self.n);
        out.margin = self.margin - 1;
        for (&(pz, pw, lz, lw), e) in &self.cells {
            out.insert((pz, pw - 1, lz, lw), e.scale(&scalar::int(pw)), p)?;
            if lw > 0 {
                out.insert((pz, pw - 1, lz, lw - 1), e.scale(&scalar::int(lw as i64)), p)?;
            }
        }
        Ok(out)
    }

    /// First cell and monomial where the two distributions disagree; cells
    /// range over the common safe margin, monomial modes over the window.
    pub fn first_difference(
        &self,
        other: &BiDist,
        mode_window: i64,
    ) -> Option<(Cell, String, Scalar, Scalar)> {
        let m = self.margin.min(other.margin);
        let mut cells: Vec<Cell> = self
            .cells
            .keys()
            .chain(other.cells.keys())
            .copied()
            .filter(|c| c.0.abs() <= m && c.1.abs() <= m)
            .collect();
        cells.sort_unstable();
        cells.dedup();
        for cell in cells {
            let a = self.cell(cell);
            let b = other.cell(cell);
            if let Some((mono, x, y)) = a.first_difference(&b, mode_window) {
                return Some((cell, mono, x, y));
            }
        }
        None
    }

    /// Line dump: `p_z p_w l_z l_w  monomial=coefficient ...`, sorted,
    /// monomial coefficients evaluated inside the mode window.
    pub fn dump(&self, mode_window: i64) -> String {
        let mut out = String::new();
        for (&(pz, pw, lz, lw), e) in &self.cells {
            let mut entries: Vec<String> = Vec::new();
            if !e.scalar_part.is_zero() {
                entries.push(format!("1={}", scalar::to_frac_string(&e.scalar_part)));
            }
            for mono in e.candidate_monomials(mode_window) {
                let c = e.coefficient_of_monomial(&mono);
                if !c.is_zero() {
                    entries.push(format!(
                        "{}={}",
                        modes::render_monomial(&mono),
                        scalar::to_frac_string(&c)
                    ));
                }
            }
            if entries.is_empty() {
                continue;
            }
            out.push_str(&format!("{pz} {pw} {lz} {lw}  {}\n", entries.join("  ")));
        }
        out
    }
}

/// Commutator of two fields as a `BiDist`: the cell at
/// `(p_z, p_w, l_z, l_w)` is the mode bracket of the matching coefficients.
pub fn field_commutator(
    f: &LogField,
    g: &LogField,
    p: Params,
    variant: Variant,
    win: Window,
) -> Result<BiDist, CoreError> {
    let mut out = BiDist::zero(win.n);
    let lf = f.log_degree().min(win.l);
    let lg = g.log_degree().min(win.l);
    let mut fc: BTreeMap<(i64, u8), ModeElement> = BTreeMap::new();
    let mut gc: BTreeMap<(i64, u8), ModeElement> = BTreeMap::new();
    for q in -win.n..=win.n {
        for l in 0..=lf {
            let e = f.coefficient(q, l, p)?;
            if !e.is_structurally_zero() {
                fc.insert((q, l), e);
            }
        }
        for l in 0..=lg {
            let e = g.coefficient(q, l, p)?;
            if !e.is_structurally_zero() {
                gc.insert((q, l), e);
            }
        }
    }
    for ((pz, lz), ef) in &fc {
        for ((pw, lw), eg) in &gc {
            let br = modes::bracket(ef, eg, p, variant)?;
            out.insert((*pz, *pw, *lz, *lw), br, p)?;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Scalar kernels in diagonal-family form
// ---------------------------------------------------------------------------

/// One diagonal family of cells `(s + zshift, -s + wshift, lz, lw)` with a
/// factored weight in `s`; inverse factors encode excluded values exactly.
#[derive(Debug, Clone)]
pub struct DiagFamily {
    pub zshift: i64,
    pub wshift: i64,
    pub lz: u8,
    pub lw: u8,
    pub weight: Weight,
    pub coef: Scalar,
}

/// A scalar two-variable kernel in closed form: diagonal families plus
/// finitely many isolated cells.
#[derive(Debug, Clone, Default)]
pub struct SymKernel {
    pub families: Vec<DiagFamily>,
    pub isolated: Vec<(Cell, Scalar)>,
}

fn diag(lz: u8, lw: u8, invs: usize, coef: Scalar) -> DiagFamily {
    DiagFamily {
        zshift: 0,
        wshift: 0,
        lz,
        lw,
        weight: Weight {
            factors: (0..invs).map(|_| WFactor::Inv(Affine::u())).collect(),
        },
        coef,
    }
}

impl SymKernel {
    /// `delta(z - w) = sum_s z^s w^{-s-1}`.
    pub fn delta() -> Self {
        SymKernel {
            families: vec![DiagFamily {
                zshift: 0,
                wshift: -1,
                lz: 0,
                lw: 0,
                weight: Weight::one(),
                coef: scalar::one(),
            }],
            isolated: Vec::new(),
        }
    }

    /// `log z - log w + sum_{s != 0} z^s w^{-s} / s`.
    pub fn log() -> Self {
        SymKernel {
            families: vec![diag(0, 0, 1, scalar::one())],
            isolated: vec![
                ((0, 0, 1, 0), scalar::one()),
                ((0, 0, 0, 1), scalar::int(-1)),
            ],
        }
    }

    /// The symmetric dilogarithmic kernel.
    pub fn rl() -> Self {
        SymKernel {
            families: vec![
                diag(0, 0, 2, scalar::one()),
                diag(1, 0, 1, scalar::frac(-1, 2)),
                diag(0, 1, 1, scalar::frac(1, 2)),
            ],
            isolated: Vec::new(),
        }
    }

    /// The antisymmetric trilogarithmic kernel.
    pub fn t() -> Self {
        SymKernel {
            families: vec![
                diag(0, 0, 3, scalar::int(-2)),
                diag(1, 0, 2, scalar::one()),
                diag(0, 1, 2, scalar::int(-1)),
                diag(2, 0, 1, scalar::frac(-1, 6)),
                diag(1, 1, 1, scalar::frac(1, 2)),
                diag(0, 2, 1, scalar::frac(-1, 6)),
            ],
            isolated: vec![
                ((0, 0, 2, 1), scalar::frac(1, 6)),
                ((0, 0, 1, 2), scalar::frac(-1, 6)),
            ],
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymKernel {
        SymKernel {
            families: self
                .families
                .iter()
                .map(|f| DiagFamily { coef: f.coef.clone() * c.clone(), ..f.clone() })
                .collect(),
            isolated: self
                .isolated
                .iter()
                .map(|(cell, v)| (*cell, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `d/dw` in closed form.
    pub fn d_w(&self) -> SymKernel {
        let mut families = Vec::new();
        let mut isolated = Vec::new();
        for f in &self.families {
            let mut w = f.weight.clone();
            w.push(WFactor::Lin(Affine { c0: f.wshift, cu: -1, cv: 0 }));
            families.push(DiagFamily { wshift: f.wshift - 1, weight: w, ..f.clone() });
            if f.lw > 0 {
                families.push(DiagFamily {
                    wshift: f.wshift - 1,
                    lw: f.lw - 1,
                    coef: f.coef.clone() * scalar::int(f.lw as i64),
                    ..f.clone()
                });
            }
        }
        for ((pz, pw, lz, lw), v) in &self.isolated {
            if *pw != 0 {
                isolated.push(((*pz, pw - 1, *lz, *lw), v.clone() * scalar::int(*pw)));
            }
            if *lw > 0 {
                isolated.push(((*pz, pw - 1, *lz, lw - 1), v.clone() * scalar::int(*lw as i64)));
            }
        }
        SymKernel { families, isolated }
    }

    /// Multiply by `z^a w^b`.
    pub fn mul_zw(&self, a: i64, b: i64) -> SymKernel {
        SymKernel {
            families: self
                .families
                .iter()
                .map(|f| DiagFamily {
                    zshift: f.zshift + a,
                    wshift: f.wshift + b,
                    ..f.clone()
                })
                .collect(),
            isolated: self
                .isolated
                .iter()
                .map(|((pz, pw, lz, lw), v)| ((pz + a, pw + b, *lz, *lw), v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &SymKernel) -> SymKernel {
        let mut out = self.clone();
        out.families.extend(other.families.iter().cloned());
        out.isolated.extend(other.isolated.iter().cloned());
        out
    }

    /// Mirror `z <-> w` (reparametrizing the family index `s -> -s`).
    pub fn swap_zw(&self) -> SymKernel {
        SymKernel {
            families: self
                .families
                .iter()
                .map(|f| DiagFamily {
                    zshift: f.wshift,
                    wshift: f.zshift,
                    lz: f.lw,
                    lw: f.lz,
                    weight: Weight {
                        factors: f
                            .weight
                            .factors
                            .iter()
                            .map(|w| match w {
                                WFactor::Inv(a) => {
                                    WFactor::Inv(Affine { c0: a.c0, cu: -a.cu, cv: a.cv })
                                }
                                WFactor::Lin(a) => {
                                    WFactor::Lin(Affine { c0: a.c0, cu: -a.cu, cv: a.cv })
                                }
                            })
                            .collect(),
                    },
                    coef: f.coef.clone(),
                })
                .collect(),
            isolated: self
                .isolated
                .iter()
                .map(|((pz, pw, lz, lw), v)| ((*pw, *pz, *lw, *lz), v.clone()))
                .collect(),
        }
    }

    /// Instantiate as a truncated scalar `Kernel`, for cross-checking
    /// against the series-expansion constructions.
    pub fn to_kernel(&self, win: Window) -> Kernel {
        let mut out = Kernel::zero(win);
        for f in &self.families {
            for s in -(2 * win.n)..=(2 * win.n) {
                let (pz, pw) = (s + f.zshift, -s + f.wshift);
                if pz.abs() > win.n || pw.abs() > win.n || f.lz > win.l || f.lw > win.l {
                    continue;
                }
                if let Some(w) = f.weight.eval(s, 0) {
                    out.add_cell((pz, pw, f.lz, f.lw), f.coef.clone() * w);
                }
            }
        }
        for (cell, v) in &self.isolated {
            if cell.0.abs() <= win.n && cell.1.abs() <= win.n {
                out.add_cell(*cell, v.clone());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Expected commutators
// ---------------------------------------------------------------------------

/// One term of an expected commutator: `coef * zfac(z) * wfac(w) * kern`.
#[derive(Debug, Clone)]
pub struct ExpTerm {
    pub coef: Scalar,
    pub zfac: LogField,
    pub wfac: LogField,
    pub kern: SymKernel,
}

impl ExpTerm {
    pub fn new(coef: Scalar, zfac: LogField, wfac: LogField, kern: SymKernel) -> Self {
        ExpTerm { coef, zfac, wfac, kern }
    }

    pub fn negate_swap(&self) -> ExpTerm {
        ExpTerm {
            coef: -self.coef.clone(),
            zfac: self.wfac.clone(),
            wfac: self.zfac.clone(),
            kern: self.kern.swap_zw(),
        }
    }
}

/// Assemble the cells of `sum coef * zfac * wfac * kern` exactly.
pub fn expected_bidist(terms: &[ExpTerm], p: Params, win: Window) -> Result<BiDist, CoreError> {
    let mut out = BiDist::zero(win.n);
    for pz in -win.n..=win.n {
        for pw in -win.n..=win.n {
            for lz in 0..=win.l {
                for lw in 0..=win.l {
                    let mut cell = ModeElement::zero();
                    for t in terms {
                        expected_cell(t, (pz, pw, lz, lw), p, &mut cell)?;
                    }
                    out.insert((pz, pw, lz, lw), cell, p)?;
                }
            }
        }
    }
    Ok(out)
}

fn expected_cell(
    t: &ExpTerm,
    cell: Cell,
    p: Params,
    out: &mut ModeElement,
) -> Result<(), CoreError> {
    let (pz, pw, lz, lw) = cell;
    // isolated kernel cells: both factor powers concrete
    for ((kz, kw, klz, klw), v) in &t.kern.isolated {
        if *klz > lz || *klw > lw {
            continue;
        }
        let zp = t
            .zfac
            .coefficient_pieces(Affine::constant(pz - kz), lz - klz, false)?;
        let wp = t
            .wfac
            .coefficient_pieces(Affine::constant(pw - kw), lw - klw, true)?;
        combine_pieces(out, &zp, &wp, &Weight::one(), &(t.coef.clone() * v.clone()), 0, p)?;
    }
    // diagonal families: the family index is the ambient slot u
    for f in &t.kern.families {
        if f.lz > lz || f.lw > lw {
            continue;
        }
        let zpow = Affine { c0: pz - f.zshift, cu: -1, cv: 0 };
        let wpow = Affine { c0: pw - f.wshift, cu: 1, cv: 0 };
        let zp = t.zfac.coefficient_pieces(zpow, lz - f.lz, true)?;
        let wp = t.wfac.coefficient_pieces(wpow, lw - f.lw, true)?;
        combine_pieces(out, &zp, &wp, &f.weight, &(t.coef.clone() * f.coef.clone()), 1, p)?;
    }
    Ok(())
}

/// Merge a z-side piece, a w-side piece, the family weight and the ambient
/// rank into stored terms.
fn combine_pieces(
    out: &mut ModeElement,
    zp: &[CoeffPiece],
    wp: &[CoeffPiece],
    fam_weight: &Weight,
    coef: &Scalar,
    ambient_rank: u8,
    p: Params,
) -> Result<(), CoreError> {
    for a in zp {
        for b in wp {
            // the internal slot v can only be consumed once
            let internal = a.rank + b.rank;
            if internal + ambient_rank > 2 {
                return Err(CoreError::ConvolutionRank);
            }
            let mut weight = fam_weight.clone();
            weight.factors.extend(a.weight.factors.iter().cloned());
            weight.factors.extend(b.weight.factors.iter().cloned());
            let mut factors = a.factors.clone();
            factors.extend(b.factors.iter().cloned());
            let rank = ambient_rank + internal;
            let term = GTerm {
                coef: coef.clone() * a.coef.clone() * b.coef.clone(),
                weight,
                rank,
                factors,
            };
            let conds: Vec<Affine> = [a.delta, b.delta].into_iter().flatten().collect();
            if let Some(term) = modes::resolve_delta_multi(term, &conds) {
                out.push_term(term, p)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn p11() -> Params {
        Params::new(1, 1)
    }

    #[test]
    fn coordinate_field_shapes() {
        // k = j = 0: y_1(z) = p_1 log z + sum y^1_n z^{-n}
        let p = Params::new(0, 0);
        let fs = coordinate_fields(p).unwrap();
        let y1 = &fs[FieldName::Y1.position()];
        assert_eq!(y1.terms().len(), 2);
        let c = y1.coefficient(0, 1, p).unwrap();
        assert_eq!(c.coefficient_of_monomial(&[Generator::p(1)]), int(1));
        let c = y1.coefficient(5, 0, p).unwrap();
        assert_eq!(c.coefficient_of_monomial(&[Generator::y(1, -5)]), int(1));
    }

    #[test]
    fn x2_log_coefficient() {
        // coefficient of (power 0, logdeg 1) in x_2 at (k, j) = (1, 0):
        // w_2 + (1/2)(w_3 x^1_0 - w_1 x^3_0)
        let p = Params::new(1, 0);
        let fs = coordinate_fields(p).unwrap();
        let c = fs[FieldName::X2.position()].coefficient(0, 1, p).unwrap();
        assert_eq!(c.coefficient_of_monomial(&[Generator::w(2)]), int(1));
        assert_eq!(
            c.coefficient_of_monomial(&[Generator::w(3), Generator::x(1, 0)]),
            frac(1, 2)
        );
        assert_eq!(
            c.coefficient_of_monomial(&[Generator::w(1), Generator::x(3, 0)]),
            frac(-1, 2)
        );
    }

    #[test]
    fn derive_and_hat() {
        let p = p11();
        let fs = coordinate_fields(p).unwrap();
        let x1 = &fs[0];
        // alpha_1 = d(x_1): w_1 sits at exponent -1, and the series part
        // contributes -n x^1_n at exponent -n-1
        let a1 = x1.derive();
        let c = a1.coefficient(-1, 0, p).unwrap();
        assert_eq!(c.coefficient_of_monomial(&[Generator::w(1)]), int(1));
        let c = a1.coefficient(3, 0, p).unwrap();
        assert_eq!(c.coefficient_of_monomial(&[Generator::x(1, -4)]), int(4));
        assert_eq!(a1.log_degree(), 0);
        // hat drops exactly the log terms, idempotently
        let h = x1.hat();
        assert_eq!(h.terms().len(), 1);
        assert_eq!(h.hat(), h);
        let wlog = LogField::spectator(Generator::w(1)).mul_log().unwrap();
        assert!(wlog.hat().is_zero());
    }

    #[test]
    fn currents_are_log_free() {
        for (k, j) in [(0i64, 0i64), (0, 1), (1, 0), (1, 1), (2, 3)] {
            let p = Params::new(k, j);
            let cs = current_fields(p).unwrap();
            for c in &cs {
                assert_eq!(c.log_degree(), 0);
            }
        }
    }

    #[test]
    fn product_is_commutative_on_commuting_fields() {
        let p = p11();
        let fs = coordinate_fields(p).unwrap();
        let a = fs[0].mul(&fs[2], p).unwrap();
        let b = fs[2].mul(&fs[0], p).unwrap();
        assert_eq!(a, b);
        assert_eq!(LogField::one().mul(&fs[3], p).unwrap(), fs[3]);
    }

    #[test]
    fn sym_kernels_match_expansions() {
        let win = Window::new(8, 3);
        assert_eq!(SymKernel::delta().to_kernel(win), crate::kernels::delta(win));
        assert_eq!(
            SymKernel::log().to_kernel(win),
            crate::kernels::log_kernel(win).unwrap()
        );
        assert_eq!(
            SymKernel::rl().to_kernel(win),
            crate::kernels::rl_kernel(win).unwrap()
        );
        assert_eq!(
            SymKernel::t().to_kernel(win),
            crate::kernels::t_kernel(win).unwrap()
        );
    }

    #[test]
    fn torus_commutator_is_log() {
        // [x_1(z), y_1(w)] = log(z - w) at k = j = 0, and [x_1, x_3] = 0
        let p = Params::new(0, 0);
        let win = Window::new(5, 3);
        let fs = coordinate_fields(p).unwrap();
        let got = field_commutator(&fs[0], &fs[3], p, Variant::Corrected, win).unwrap();
        let want = expected_bidist(
            &[ExpTerm::new(int(1), LogField::one(), LogField::one(), SymKernel::log())],
            p,
            win,
        )
        .unwrap();
        assert!(got.first_difference(&want, 12).is_none());
        let zero = field_commutator(&fs[0], &fs[2], p, Variant::Corrected, win).unwrap();
        assert!(zero.first_difference(&BiDist::zero(win.n), 12).is_none());
    }
}
