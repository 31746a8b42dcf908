//! Full-strength congruence solver for odd prime-power lengths.
//!
//! For `n = p^α` with `p` an odd prime, [`solve_prime_power`] constructs a
//! permutation `σ` with `Σ k·a_σ(k) ≡ 0 (mod p^α)` whenever the input
//! satisfies one of two hypotheses: the value sum is not divisible by `p`
//! (solved by a cyclic shift), or all values are congruent mod `p`
//! (solved by descent through a residue-controlled partition).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::numtheory::{is_prime, least_positive_residue, mod_inverse, residue_class_count};
use crate::partition::partition_blocks;
use crate::permutation::Permutation;

/// Error for [`solve_prime_power`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimePowerError {
    /// The length/prime/exponent triple is malformed.
    InvalidShape { detail: &'static str },
    /// Neither solvable case applies: the sum is divisible by `p` yet the
    /// values occupy several residue classes mod `p`. Callers arrange the
    /// hypothesis via `partition_blocks` before calling.
    HypothesisViolated,
}

impl fmt::Display for PrimePowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimePowerError::InvalidShape { detail } => write!(f, "invalid shape: {detail}"),
            PrimePowerError::HypothesisViolated => write!(
                f,
                "sum divisible by p but values span several residue classes mod p"
            ),
        }
    }
}

impl core::error::Error for PrimePowerError {}

const fn invalid(detail: &'static str) -> PrimePowerError {
    PrimePowerError::InvalidShape { detail }
}

/// The cyclic shift `σ(k) = least positive residue of (k - l) mod n`.
///
/// `l = n` gives the identity.
///
/// ```
/// use zerosum_core::primepower::shift_permutation;
///
/// assert_eq!(shift_permutation(2, 3).image(), &[2, 3, 1]);
/// assert_eq!(shift_permutation(1, 4).image(), &[4, 1, 2, 3]);
/// ```
///
/// # Panics
///
/// Panics unless `1 ≤ l ≤ n`.
pub fn shift_permutation(l: usize, n: usize) -> Permutation {
    assert!(l >= 1 && l <= n, "shift offset must lie in [1, n]");
    let image = (1..=n)
        .map(|k| least_positive_residue(k as i64 - l as i64, n as u64) as usize)
        .collect();
    Permutation::from_image(image).expect("a shift is a bijection")
}

/// Constructs `σ` with `Σ k·values[σ(k)] ≡ 0 (mod p^α)` for an odd prime
/// `p`, given `p^α` values such that either `Σ values ≢ 0 (mod p)` or all
/// values are congruent mod `p`.
///
/// Branch 1 (sum not divisible by `p`, preferred when both apply): the
/// total `a` is invertible mod `p^α`, so the shift by
/// `l ≡ -(Σ k·values_k)·a⁻¹` cancels the weighted sum.
///
/// Branch 2 (all values congruent mod `p`): for `α = 1` the identity works
/// since `p` divides `Σ k = p(p+1)/2` for odd `p`. For `α > 1`, the scaled
/// differences `b_k = (values_k - values_1)/p` are split into `p` blocks of
/// size `p^(α-1)` whose construction re-establishes the hypothesis, each
/// block is solved recursively, and block solutions are concatenated.
pub fn solve_prime_power(
    values: &[i64],
    p: u64,
    alpha: u32,
) -> Result<Permutation, PrimePowerError> {
    if alpha < 1 {
        return Err(invalid("exponent must be at least 1"));
    }
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(invalid("p must be an odd prime"));
    }
    let modulus = p
        .checked_pow(alpha)
        .filter(|&m| m <= usize::MAX as u64)
        .ok_or(invalid("p^alpha overflows"))?;
    let n = modulus as usize;
    if values.len() != n {
        return Err(invalid("length must equal p^alpha"));
    }

    let reduced: Vec<u64> = values
        .iter()
        .map(|v| v.rem_euclid(modulus as i64) as u64)
        .collect();

    let sigma = if reduced.iter().fold(0u64, |acc, r| (acc + r) % p) != 0 {
        solve_by_shift(&reduced, modulus, n)
    } else if residue_class_count(values, p) == 1 {
        solve_by_descent(&reduced, p, alpha, modulus, n)
    } else {
        return Err(PrimePowerError::HypothesisViolated);
    };

    let weighted = weighted_sum_mod(&reduced, &sigma, modulus);
    assert!(
        weighted == 0,
        "prime-power construction missed the congruence (bug)"
    );
    Ok(sigma)
}

/// Branch 1: `Σ values ≢ 0 (mod p)`.
fn solve_by_shift(reduced: &[u64], modulus: u64, n: usize) -> Permutation {
    let total = reduced.iter().fold(0u64, |acc, r| (acc + r) % modulus);
    let weighted = reduced
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &r)| {
            (acc + ((i as u64 + 1) as u128 * r as u128 % modulus as u128) as u64) % modulus
        });
    let inv = mod_inverse(total as i64, modulus)
        .expect("sum is coprime to p, hence invertible mod p^alpha");
    let t = (weighted as u128 * inv as u128 % modulus as u128) as u64;
    let l = if t == 0 { modulus } else { modulus - t };
    shift_permutation(l as usize, n)
}

/// Branch 2: all values congruent mod `p`.
fn solve_by_descent(reduced: &[u64], p: u64, alpha: u32, modulus: u64, n: usize) -> Permutation {
    if alpha == 1 {
        return Permutation::identity(n);
    }
    // b_k = (values_k - values_1)/p, computed on residues in [0, p^alpha);
    // congruences mod p^(alpha-1) are preserved.
    let scaled: Vec<i64> = reduced
        .iter()
        .map(|&r| (((r + modulus - reduced[0]) % modulus) / p) as i64)
        .collect();
    let q = (modulus / p) as usize;
    let partition = partition_blocks(&scaled, p as usize, q, p)
        .expect("valid shape; partition is guaranteed to exist");

    let mut image = vec![0usize; n];
    for (s, block) in partition.blocks().iter().enumerate() {
        let sub = block.gather(&scaled);
        let sub_sigma = solve_prime_power(&sub, p, alpha - 1)
            .expect("each block satisfies the hypothesis by the partition property");
        for t in 1..=q {
            image[q * s + t - 1] = block.indices()[sub_sigma.apply(t) - 1];
        }
    }
    Permutation::from_image(image).expect("blocks partition the index range")
}

/// `Σ k·reduced[σ(k)] mod modulus`.
fn weighted_sum_mod(reduced: &[u64], sigma: &Permutation, modulus: u64) -> u64 {
    (1..=reduced.len()).fold(0u64, |acc, k| {
        let term = k as u128 * reduced[sigma.apply(k) - 1] as u128 % modulus as u128;
        (acc + term as u64) % modulus
    })
}
