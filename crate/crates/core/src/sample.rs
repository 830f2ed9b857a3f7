//! Deterministic sampling of small rational points for the sampled checks.

use crate::scalar::{frac, Scalar};
use rand_core::{RngCore, SeedableRng};

/// Seeded generator of small rationals, reproducible across runs and
/// platforms.
pub struct SampleRng {
    inner: rand_chacha::ChaCha8Rng,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng {
            inner: rand_chacha::ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A rational with numerator in `[-12, 12]` and denominator in `[1, 6]`.
    pub fn rational(&mut self) -> Scalar {
        let n = (self.inner.next_u32() % 25) as i64 - 12;
        let d = (self.inner.next_u32() % 6) as i64 + 1;
        frac(n, d)
    }

    /// An integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.inner.next_u64() % span) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let mut a = SampleRng::new(9);
        let mut b = SampleRng::new(9);
        for _ in 0..32 {
            assert_eq!(a.rational(), b.rational());
            assert_eq!(a.int_in(-4, 4), b.int_in(-4, 4));
        }
    }
}
