//! Seeded scalar draws.
//!
//! All randomness goes through SplitMix64 (increment `0x9e3779b97f4a7c15`,
//! finalizer multipliers `0xbf58476d1ce4e5b9` and `0x94d049bb133111eb`, shifts
//! 30/27/31), seeded directly with the user's integer seed. A field scalar is
//! `next_u64() mod p`, so draws are comparable across implementations.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::coeff::{Coeff, CoeffField};
use crate::error::{Error, Result};

/// Redraws allowed when a scalar is required to be nonzero.
pub const MAX_REDRAWS: usize = 100;

pub struct ScalarSource {
    rng: SplitMix64,
    modulus: u64,
    field: CoeffField,
}

impl ScalarSource {
    /// Scalars of the prime field `field`, seeded with `seed`.
    pub fn new(seed: u64, field: CoeffField) -> Result<Self> {
        let modulus = field.characteristic();
        if modulus == 0 {
            return Err(Error::invalid("seeded scalars need a prime field"));
        }
        Ok(ScalarSource {
            rng: SplitMix64::seed_from_u64(seed),
            modulus,
            field,
        })
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.rng.next_u64() % bound
    }

    pub fn scalar(&mut self) -> Coeff {
        let r = self.rng.next_u64() % self.modulus;
        self.field.from_i64(r as i64)
    }

    pub fn nonzero_scalar(&mut self) -> Result<Coeff> {
        for _ in 0..MAX_REDRAWS {
            let c = self.scalar();
            if !c.is_zero() {
                return Ok(c);
            }
        }
        Err(Error::Randomness(format!(
            "no nonzero scalar in {MAX_REDRAWS} draws over {}",
            self.field
        )))
    }
}
