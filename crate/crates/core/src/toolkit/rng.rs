//! The instance PRNG: SplitMix64 with the seed as initial state.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Seeded generator used by every random model.
#[derive(Debug, Clone)]
pub struct InstanceRng(SplitMix64);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// The top bit of the next output.
    pub fn bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform in `[0, 1)` from the top 53 bits of the next output.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound`: outputs at or above the largest multiple of
    /// `bound` are rejected, the rest reduced mod `bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Fisher-Yates shuffle from the last position down.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
