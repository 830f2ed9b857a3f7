//! Exact-arithmetic verification engine for the algebra of a six dimensional
//! nilmanifold double: the nilpotent Lie algebras `h(k,j)`, their group law,
//! the left-invariant form calculus, formal two-variable distribution kernels
//! (delta, log, dilogarithmic `rl`, trilogarithmic `t`), the non-linear Lie
//! algebra of field modes, and the logarithmic coordinate/current fields.
//!
//! Every scalar is an arbitrary-precision rational; every check is exact.
//! There is no floating point anywhere in this crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cartan;
pub mod error;
pub mod fields;
pub mod forms;
pub mod group;
pub mod kernels;
pub mod lie;
pub mod modes;
pub mod poly;
pub mod report;
pub mod sample;
pub mod verify;
pub mod scalar;

pub use error::CoreError;
pub use lie::Params;
pub use report::{CheckStatus, Counterexample, VerificationReport};
pub use scalar::Scalar;

/// Table variant selector for the mode algebra.
///
/// `AsWritten` reproduces the published bracket table verbatim (closing
/// unlisted entries by skew-symmetry). `Corrected` replaces the zero-mode
/// entries that are inconsistent with the field commutators; the verifier
/// reports which variant passes which check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    AsWritten,
    Corrected,
}

impl core::fmt::Display for Variant {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Variant::AsWritten => write!(f, "as-written"),
            Variant::Corrected => write!(f, "corrected"),
        }
    }
}
