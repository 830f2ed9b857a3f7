//! Structured verification outcomes.

use crate::lie::Params;
use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of one check.
///
/// `Reported` is for adjudication checks whose outcome is informative but
/// intentionally never asserted (variant comparisons, lemma form checks).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Reported,
}

impl core::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Reported => write!(f, "reported"),
        }
    }
}

/// First point of disagreement of a failed comparison, exact on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Where the disagreement lives (basis triple, cell, monomial, ...).
    pub location: String,
    /// Exact expected value, `numerator/denominator`.
    pub expected: String,
    /// Exact actual value.
    pub actual: String,
}

/// Result of a single named check at fixed parameters.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub check: String,
    pub params: Option<Params>,
    pub variant: Option<&'static str>,
    pub status: CheckStatus,
    pub counterexample: Option<Counterexample>,
    /// Free-form detail lines (variant diffs, adjudication notes).
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn pass(check: &str) -> Self {
        VerificationReport {
            check: String::from(check),
            params: None,
            variant: None,
            status: CheckStatus::Pass,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(check: &str, cx: Counterexample) -> Self {
        VerificationReport {
            check: String::from(check),
            params: None,
            variant: None,
            status: CheckStatus::Fail,
            counterexample: Some(cx),
            notes: Vec::new(),
        }
    }

    pub fn with_params(mut self, p: Params) -> Self {
        self.params = Some(p);
        self
    }

    pub fn with_variant(mut self, v: &'static str) -> Self {
        self.variant = Some(v);
        self
    }

    pub fn reported(mut self) -> Self {
        self.status = CheckStatus::Reported;
        self
    }

    pub fn note(mut self, line: String) -> Self {
        self.notes.push(line);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}
