//! Deterministic random source. All randomness in reports and suites flows
//! from a single `u64` seed through this generator, so fixed-seed runs are
//! reproducible byte for byte.

use crate::scalar::{rat, Rational};

/// SplitMix64. Small state, full 64-bit period, deterministic across
/// platforms.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + self.below(span) as i64
    }

    /// Small rational with numerator in `lo..=hi` and denominator in `1..=max_den`.
    pub fn rational(&mut self, lo: i64, hi: i64, max_den: u64) -> Rational {
        let n = self.int_in(lo, hi);
        let d = 1 + self.below(max_den) as i64;
        rat(n, d)
    }

    /// Rational strictly between 0 and 1.
    pub fn unit_interval(&mut self) -> Rational {
        let d = 2 + self.below(13) as i64;
        let n = 1 + self.below((d - 1) as u64) as i64;
        rat(n, d)
    }

    /// Pick an index below `len`.
    pub fn index(&mut self, len: usize) -> usize {
        self.below(len as u64) as usize
    }
}
