//! The one numeric type: arbitrary-precision rationals.

use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. All coefficients in the engine are of this type.
pub type Scalar = BigRational;

/// `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as a scalar. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reciprocal with the mode-algebra convention: `1/0` is `0`.
pub fn inv_or_zero(n: i64) -> Scalar {
    if n == 0 {
        Scalar::zero()
    } else {
        frac(1, n)
    }
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// Canonical `numerator/denominator` rendering, `-3/2`, `5`, `0`.
pub fn to_frac_string(s: &Scalar) -> String {
    use alloc::format;
    if s.denom().is_one() {
        format!("{}", s.numer())
    } else if s.denom().is_negative() {
        // BigRational keeps denominators positive, but be safe.
        format!("{}/{}", -s.numer(), -s.denom())
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_string_is_reduced() {
        assert_eq!(to_frac_string(&frac(2, 4)), "1/2");
        assert_eq!(to_frac_string(&frac(-6, 4)), "-3/2");
        assert_eq!(to_frac_string(&int(7)), "7");
        assert_eq!(to_frac_string(&zero()), "0");
    }

    #[test]
    fn inv_convention() {
        assert_eq!(inv_or_zero(0), zero());
        assert_eq!(inv_or_zero(-2), frac(-1, 2));
    }
}
