//! Per-run RNG stream derivation.
//!
//! Each Monte Carlo run gets its own ChaCha8 stream seeded from
//! `(master_seed, run_index)`, so runs are reproducible individually and
//! independent of execution order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; full-period bijection on u64.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the seed for one run from the master seed and the run index.
pub fn derive_seed(master_seed: u64, run_index: u64) -> u64 {
    splitmix64(splitmix64(master_seed) ^ splitmix64(run_index.wrapping_add(1)))
}

/// A fresh ChaCha8 stream for the given run.
pub fn run_stream(master_seed: u64, run_index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master_seed, run_index))
}
