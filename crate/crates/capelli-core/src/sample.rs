//! Deterministic rational sample points for evaluate-and-reconstruct.
//!
//! Every invocation that needs generic points owns its own `PointSource`;
//! there is no global state, so runs are reproducible and concurrent
//! callers cannot interleave draws.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};

use crate::scalar::Rat;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 42;

/// Stream of pseudo-random rationals with a fixed seed.
pub struct PointSource {
    rng: rand_chacha::ChaCha8Rng,
}

// Prime denominators keep differences of sampled coordinates away from
// integers, which is where the rational coefficient functions have poles.
const DENOMS: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

impl PointSource {
    pub fn new(seed: u64) -> Self {
        PointSource {
            rng: rand_chacha::ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Derive an independent source, e.g. one per work item.
    pub fn fork(seed: u64, stream: u64) -> Self {
        Self::new(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn rat(&mut self) -> Rat {
        let num = (self.rng.next_u64() % 199) as i64 - 99;
        let den = DENOMS[(self.rng.next_u64() % DENOMS.len() as u64) as usize];
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    /// Evaluation point whose coordinate `i` has the fixed denominator
    /// `DENOMS[i]` and a numerator prime to it. Distinct prime
    /// denominators keep differences of coordinates non-integral, so the
    /// root factors in coefficient denominators cannot vanish, and a
    /// shared denominator pattern across points keeps the cleared
    /// collocation integers small.
    pub fn point(&mut self, n: usize) -> Vec<Rat> {
        assert!(n <= DENOMS.len());
        (0..n)
            .map(|i| {
                let den = DENOMS[i];
                loop {
                    let num = (self.rng.next_u64() % 121) as i64 - 60;
                    if num % den != 0 {
                        return Rat::new(BigInt::from(num), BigInt::from(den));
                    }
                }
            })
            .collect()
    }

    /// Arbitrary-length vector of generic rationals.
    pub fn vector(&mut self, len: usize) -> Vec<Rat> {
        (0..len).map(|_| self.rat()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = PointSource::new(1);
        let mut b = PointSource::new(1);
        for _ in 0..32 {
            assert_eq!(a.rat(), b.rat());
        }
    }

    #[test]
    fn forks_are_independent_of_draw_order() {
        let mut a = PointSource::fork(5, 1);
        let _ = PointSource::fork(5, 2).rat();
        let mut b = PointSource::fork(5, 1);
        assert_eq!(a.point(4), b.point(4));
    }
}
