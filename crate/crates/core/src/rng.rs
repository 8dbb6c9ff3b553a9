//! Seeded pseudo-random source shared by every randomized search.
//!
//! The generator is SplitMix64: the state advances by the golden-ratio
//! increment and each output is the standard SplitMix64 finalizer. Random
//! rationals are integers in [-9, 9] drawn as `next_u64 % 19 - 9`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::exact::Rational;

#[derive(Clone, Debug)]
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `[-9, 9]` as a rational.
    pub fn rational(&mut self) -> Rational {
        Rational::from((self.next_u64() % 19) as i64 - 9)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    /// A vector that is not identically zero.
    pub fn nonzero_vector(&mut self, len: usize) -> Vec<Rational> {
        loop {
            let v = self.vector(len);
            if len == 0 || v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}
