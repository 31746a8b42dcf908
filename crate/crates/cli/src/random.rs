//! Deterministic generation of solvable instances for tests, benchmarks,
//! and the `random` subcommand.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Magnitude bound for generated values.
pub const VALUE_BOUND: i64 = 1_000_000_000;

/// A seeded generator; the same seed always yields the same stream.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws `n - 1` values uniformly from `[-VALUE_BOUND, VALUE_BOUND]`, then
/// appends a balancing value making the total ≡ 0 (mod n), shifted by a
/// uniform multiple of `n` so the last entry is not confined to `[0, n)`.
pub fn random_values(n: usize, rng: &mut impl Rng) -> Vec<i64> {
    assert!(n >= 1, "n must be positive");
    let mut values: Vec<i64> =
        (1..n).map(|_| rng.gen_range(-VALUE_BOUND..=VALUE_BOUND)).collect();
    let total: i128 = values.iter().map(|&v| v as i128).sum();
    let balance = (-total).rem_euclid(n as i128) as i64;
    let span = VALUE_BOUND / n as i64;
    values.push(balance + n as i64 * rng.gen_range(-span..=span));
    values
}
