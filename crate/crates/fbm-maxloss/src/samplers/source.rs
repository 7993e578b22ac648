//! Reproducible Gaussian variates.
//!
//! Variates come from the inverse normal CDF applied to a counter-based
//! uniform stream (ChaCha8). The `(master_seed, stream_index)` pair fully
//! determines the sequence, bit-identically across platforms and runs;
//! the stream index is mixed into the block counter, so opening replication
//! `k` costs O(1) instead of fast-forwarding.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::math::inverse_normal_cdf;

/// Identifies one Gaussian stream: a master seed plus a replication index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        SeedSpec {
            master_seed,
            stream_index,
        }
    }
}

/// Deterministic stream of i.i.d. standard normal variates.
///
/// Single-threaded by design: parallel replications each construct their own
/// source from a distinct `stream_index`.
#[derive(Debug, Clone)]
pub struct GaussianSource {
    rng: ChaCha8Rng,
    seed: SeedSpec,
    position: u64,
}

impl GaussianSource {
    pub fn new(seed: SeedSpec) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.master_seed);
        rng.set_stream(seed.stream_index);
        GaussianSource {
            rng,
            seed,
            position: 0,
        }
    }

    pub fn seed(&self) -> SeedSpec {
        self.seed
    }

    /// Count of variates consumed so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    /// One uniform in the open interval (0, 1), from the top 53 bits.
    fn next_open_uniform(&mut self) -> f64 {
        let bits = self.rng.next_u64() >> 11;
        (bits as f64 + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// One standard normal variate.
    pub fn next_normal(&mut self) -> f64 {
        self.position += 1;
        inverse_normal_cdf(self.next_open_uniform())
    }

    /// Fill a slice with standard normal variates.
    pub fn fill_normal(&mut self, out: &mut [f64]) {
        for v in out.iter_mut() {
            *v = self.next_normal();
        }
    }
}
