//! Engine errors. Failures of *checks* are reported, not raised; errors here
//! signal misuse of an operation or a modeling bug.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Two elements with different `(k, j)` parameters were combined.
    IncompatibleParameters,
    /// A truncation window too small for the requested kernel.
    WindowTooSmall(String),
    /// Log-degree of a result would exceed the window cap.
    LogDegreeOverflow,
    /// A bracket of degree <= 2 elements produced a degree 3 monomial.
    /// The mode algebra of the double closes in degree 2; this is a bug trap.
    CubicTerm,
    /// A stored monomial would exceed the global degree cap (3).
    DegreeOverflow,
    /// A product was requested between non-commuting mode coefficients.
    OrderingAmbiguity(String),
    /// More than two free summation indices in a convolution term.
    ConvolutionRank,
}

impl core::fmt::Display for CoreError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoreError::IncompatibleParameters => write!(f, "incompatible parameters"),
            CoreError::WindowTooSmall(what) => write!(f, "window too small: {what}"),
            CoreError::LogDegreeOverflow => write!(f, "log-degree overflow"),
            CoreError::CubicTerm => write!(f, "cubic term encountered"),
            CoreError::DegreeOverflow => write!(f, "monomial degree overflow"),
            CoreError::OrderingAmbiguity(what) => write!(f, "ordering ambiguity: {what}"),
            CoreError::ConvolutionRank => write!(f, "convolution term with more than two indices"),
        }
    }
}
