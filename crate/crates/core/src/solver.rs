//! The main recursion: for even `n` and values summing to `0 (mod n)`,
//! constructs `σ` with `Σ k·a_σ(k) ≡ 0 (mod n/2)`, and derives weighted
//! certificates for arithmetic-progression weights with even difference.
//!
//! Induction on the number of prime factors of `n`:
//!
//! * `n = 2`: any permutation works (modulus 1); the identity is returned.
//! * `n = 2^α`: a zero-sum half is split off with [`find_zero_sum_subset`],
//!   both halves are solved recursively, and the sub-permutations are woven
//!   together by parity ([`interleave_even`]).
//! * otherwise: with `p` the smallest odd prime factor and `n = p^α·m`, the
//!   positions are partitioned into `m` blocks of size `p^α` (each solvable
//!   by [`solve_prime_power`]), the block sums form a smaller instance of
//!   size `m` solved recursively, and everything is assembled through a CRT
//!   indexing of positions ([`interleave_crt`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::egz::find_zero_sum_subset;
use crate::numtheory::{factorize, gcd, least_positive_residue, mod_inverse};
use crate::partition::partition_blocks;
use crate::permutation::Permutation;
use crate::primepower::solve_prime_power;

/// A solvable problem instance: `n` even, `n` values, sum ≡ 0 (mod n).
/// Construction validates the invariants, so a held `Instance` is always
/// solvable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    values: Vec<i64>,
}

/// Error for [`Instance::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvalidInstance {
    /// `n` is odd or zero.
    OddLength { n: usize },
    /// `values` does not have length `n`.
    LengthMismatch { n: usize, len: usize },
    /// The value sum is not divisible by `n`.
    SumNotDivisible { n: usize },
}

impl fmt::Display for InvalidInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidInstance::OddLength { n } => write!(f, "n must be even and positive (got {n})"),
            InvalidInstance::LengthMismatch { n, len } => {
                write!(f, "expected {n} values, got {len}")
            }
            InvalidInstance::SumNotDivisible { n } => {
                write!(f, "values must sum to 0 mod n = {n}")
            }
        }
    }
}

impl core::error::Error for InvalidInstance {}

impl Instance {
    /// Validates and builds an instance: `n` even and positive, exactly
    /// `n` values, and `Σ values ≡ 0 (mod n)`.
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self, InvalidInstance> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(InvalidInstance::OddLength { n });
        }
        if values.len() != n {
            return Err(InvalidInstance::LengthMismatch { n, len: values.len() });
        }
        let sum: i128 = values.iter().map(|&v| v as i128).sum();
        if sum.rem_euclid(n as i128) != 0 {
            return Err(InvalidInstance::SumNotDivisible { n });
        }
        Ok(Instance { n, values })
    }

    /// Number of values (always even).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The values.
    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Weight sequence selector for [`solve_weighted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    /// `w_k = k`; target modulus `n/2`.
    Natural,
    /// `w_k = first + (k-1)·common_difference` with even difference;
    /// target modulus `n`.
    ArithmeticProgression { first: i64, common_difference: i64 },
}

impl WeightSpec {
    /// The modulus the weighted sum is guaranteed to vanish under.
    pub fn modulus(&self, n: usize) -> u64 {
        match self {
            WeightSpec::Natural => (n / 2).max(1) as u64,
            WeightSpec::ArithmeticProgression { .. } => n as u64,
        }
    }

    /// `w_k` as an exact integer.
    pub fn weight(&self, k: usize) -> BigInt {
        match self {
            WeightSpec::Natural => BigInt::from(k),
            WeightSpec::ArithmeticProgression { first, common_difference } => {
                BigInt::from(*first) + BigInt::from(k as u64 - 1) * BigInt::from(*common_difference)
            }
        }
    }
}

/// Error for [`solve_weighted`]: an arithmetic-progression weight spec
/// with odd common difference (the guarantee only holds for even ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddCommonDifference {
    pub common_difference: i64,
}

impl fmt::Display for OddCommonDifference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight common difference must be even (got {})",
            self.common_difference
        )
    }
}

impl core::error::Error for OddCommonDifference {}

/// A solved instance: the permutation plus the exactly evaluated weighted
/// sum and the modulus it vanishes under. `sigma`, `achieved_sum`, and
/// `modulus` are plain data so external verifiers can check (and tests can
/// tamper with) them freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub instance: Instance,
    pub weights: WeightSpec,
    /// Claimed permutation as the image list `[σ(1), ..., σ(n)]`.
    pub sigma: Vec<usize>,
    /// Claimed value of `Σ w_k·values[σ(k)]`, exact.
    pub achieved_sum: BigInt,
    /// Claimed modulus dividing `achieved_sum`.
    pub modulus: u64,
}

/// Evaluates `Σ w_k·values[σ(k)]` exactly.
///
/// # Panics
///
/// Panics if `sigma` contains an index outside `[1, values.len()]`.
pub fn weighted_sum(values: &[i64], sigma: &[usize], weights: &WeightSpec) -> BigInt {
    sigma
        .iter()
        .enumerate()
        .map(|(i, &target)| weights.weight(i + 1) * BigInt::from(values[target - 1]))
        .sum()
}

/// Constructs `σ` with `Σ k·values[σ(k)] ≡ 0 (mod n/2)`.
///
/// ```
/// use zerosum_core::solver::{solve_half, Instance};
///
/// let instance = Instance::new(6, vec![0, 1, 2, 3, 4, 2]).unwrap();
/// let sigma = solve_half(&instance);
/// let weighted: i64 = (1..=6).map(|k| k as i64 * instance.values()[sigma.apply(k) - 1]).sum();
/// assert_eq!(weighted % 3, 0);
/// ```
pub fn solve_half(instance: &Instance) -> Permutation {
    let sigma = solve_rec(&reduce(instance.values(), instance.n));
    // The headline congruence, re-checked on every solve.
    let half = (instance.n / 2).max(1) as u64;
    let achieved = (1..=instance.n).fold(0u64, |acc, k| {
        let v = instance.values[sigma.apply(k) - 1].rem_euclid(half as i64) as u64;
        (acc + k as u64 % half * v) % half
    });
    assert!(achieved == 0, "solver missed the target congruence (bug)");
    sigma
}

/// Reduces values into `[0, 2n)`; every modulus consulted anywhere in the
/// recursion divides `2n`, so congruences are preserved while magnitudes
/// stay bounded.
fn reduce(values: &[i64], n: usize) -> Vec<i64> {
    let modulus = 2 * n as i64;
    values.iter().map(|v| v.rem_euclid(modulus)).collect()
}

/// Recursive core. `values.len()` is even and the sum is ≡ 0 (mod len);
/// both hold for the validated entry instance and are re-established for
/// every recursive call.
fn solve_rec(values: &[i64]) -> Permutation {
    let n = values.len();
    debug_assert!(n >= 2 && n.is_multiple_of(2));
    debug_assert_eq!(values.iter().map(|&v| v as i128).sum::<i128>().rem_euclid(n as i128), 0);
    if n == 2 {
        return Permutation::identity(2);
    }

    let values = reduce(values, n);
    match factorize(n as u64).smallest_odd_prime() {
        None => solve_power_of_two(&values, n),
        Some((p, alpha)) => solve_with_odd_prime(&values, n, p, alpha),
    }
}

/// `n = 2^α ≥ 4`: split off a zero-sum half and interleave by parity.
fn solve_power_of_two(values: &[i64], n: usize) -> Permutation {
    let q = n / 2;
    let half_block = find_zero_sum_subset(values, q).expect("n = 2q values suffice");
    let co_block = half_block.complement();

    // Both halves inherit sum ≡ 0 (mod q): the chosen half by
    // construction, the complement because the total is ≡ 0 (mod 2q).
    let sum_mod_q = |vals: &[i64]| {
        vals.iter()
            .fold(0u64, |acc, &v| (acc + v.rem_euclid(q as i64) as u64) % q as u64)
    };
    let half_values = half_block.gather(values);
    let co_values = co_block.gather(values);
    assert!(sum_mod_q(&half_values) == 0, "zero-sum half lost its sum (bug)");
    assert!(sum_mod_q(&co_values) == 0, "complement half must inherit the zero sum (bug)");

    let sigma_half = solve_rec(&half_values);
    let sigma_co = solve_rec(&co_values);
    let embed = |block: &crate::egz::IndexSet, sigma: &Permutation| -> Vec<usize> {
        (1..=q).map(|t| block.indices()[sigma.apply(t) - 1]).collect()
    };
    // Even positions 2k land in the zero-sum half, odd positions 2k-1 in
    // the complement.
    interleave_even(&embed(&half_block, &sigma_half), &embed(&co_block, &sigma_co))
        .expect("the two halves partition the positions")
}

/// `n = p^α·m` with `p` the smallest odd prime factor: per-block
/// prime-power solutions knitted together by a recursive solve on the
/// block sums.
fn solve_with_odd_prime(values: &[i64], n: usize, p: u64, alpha: u32) -> Permutation {
    let prime_power = p.pow(alpha) as usize;
    let m = n / prime_power;
    debug_assert!(m.is_multiple_of(2), "n even and p odd force an even cofactor");

    let partition = partition_blocks(values, m, prime_power, p)
        .expect("shape is exact and the block property is guaranteed");

    let mut block_maps: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut block_sums: Vec<i64> = Vec::with_capacity(m);
    for block in partition.blocks() {
        let sub = block.gather(values);
        let sub_sigma = solve_prime_power(&sub, p, alpha)
            .expect("every partition block satisfies the prime-power hypothesis");
        block_maps.push(
            (1..=prime_power)
                .map(|t| block.indices()[sub_sigma.apply(t) - 1])
                .collect(),
        );
        block_sums.push(sub.iter().sum());
    }

    let total: i128 = block_sums.iter().map(|&b| b as i128).sum();
    assert!(
        total.rem_euclid(m as i128) == 0,
        "block sums must form a valid sub-instance (bug)"
    );
    let tau = solve_rec(&block_sums);

    interleave_crt(&tau, &block_maps, prime_power as u64, m)
        .expect("coprime sides and a full partition")
}

/// Error for [`interleave_even`] and [`interleave_crt`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterleaveError {
    /// Input lengths disagree, or the images fail to cover every position
    /// exactly once.
    ShapeMismatch { detail: &'static str },
    /// `interleave_crt` requires `gcd(prime_power, m) = 1`.
    NotCoprime,
}

impl fmt::Display for InterleaveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterleaveError::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            InterleaveError::NotCoprime => write!(f, "prime_power and m must be coprime"),
        }
    }
}

impl core::error::Error for InterleaveError {}

/// Weaves two half-solutions by parity: `σ(2k) = even_targets[k-1]` and
/// `σ(2k-1) = odd_targets[k-1]`. The two target lists must jointly cover
/// `{1, ..., n}` exactly once.
///
/// ```
/// use zerosum_core::solver::interleave_even;
///
/// let sigma = interleave_even(&[1, 2], &[3, 4]).unwrap();
/// assert_eq!(sigma.image(), &[3, 1, 4, 2]);
/// ```
pub fn interleave_even(
    even_targets: &[usize],
    odd_targets: &[usize],
) -> Result<Permutation, InterleaveError> {
    if even_targets.len() != odd_targets.len() {
        return Err(InterleaveError::ShapeMismatch { detail: "halves must have equal length" });
    }
    let n = even_targets.len() * 2;
    let mut image = vec![0usize; n];
    for k in 1..=even_targets.len() {
        image[2 * k - 2] = odd_targets[k - 1];
        image[2 * k - 1] = even_targets[k - 1];
    }
    Permutation::from_image(image).map_err(|_| InterleaveError::ShapeMismatch {
        detail: "halves must jointly cover every position exactly once",
    })
}

/// Splits `k ∈ [1, prime_power·m]` into the unique `(s, t)` with
/// `s ∈ [1, m]`, `t ∈ [1, prime_power]`, and
/// `k ≡ prime_power·s + m·t (mod prime_power·m)`.
///
/// Requires `gcd(prime_power, m) = 1`. Inverts by CRT:
/// `s ≡ k·prime_power⁻¹ (mod m)` and `t ≡ k·m⁻¹ (mod prime_power)`,
/// both as least positive residues.
pub fn crt_pair(k: usize, prime_power: u64, m: usize) -> (usize, usize) {
    let s = match m {
        1 => 1,
        _ => {
            let inv = mod_inverse(prime_power as i64, m as u64).expect("coprime sides");
            least_positive_residue((k as u64 % m as u64 * inv % m as u64) as i64, m as u64) as usize
        }
    };
    let t = match prime_power {
        1 => 1,
        _ => {
            let inv = mod_inverse(m as i64, prime_power).expect("coprime sides");
            least_positive_residue(
                (k as u64 % prime_power * inv % prime_power) as i64,
                prime_power,
            ) as usize
        }
    };
    (s, t)
}

/// Weaves `m` block-solutions together through the CRT position indexing:
/// position `k` splits into `(s, t)` per [`crt_pair`] and receives
/// `block_maps[τ(s)-1][t-1]`. The block maps must jointly cover
/// `{1, ..., n}` exactly once.
pub fn interleave_crt(
    tau: &Permutation,
    block_maps: &[Vec<usize>],
    prime_power: u64,
    m: usize,
) -> Result<Permutation, InterleaveError> {
    if prime_power == 0 || m == 0 {
        return Err(InterleaveError::ShapeMismatch { detail: "sides must be positive" });
    }
    if gcd(prime_power, m as u64) != 1 {
        return Err(InterleaveError::NotCoprime);
    }
    if tau.n() != m || block_maps.len() != m {
        return Err(InterleaveError::ShapeMismatch { detail: "need one block map per block" });
    }
    if block_maps.iter().any(|map| map.len() as u64 != prime_power) {
        return Err(InterleaveError::ShapeMismatch { detail: "each block map must have prime_power entries" });
    }
    let n = prime_power as usize * m;
    let mut image = vec![0usize; n];
    for (k, slot) in image.iter_mut().enumerate() {
        let (s, t) = crt_pair(k + 1, prime_power, m);
        *slot = block_maps[tau.apply(s) - 1][t - 1];
    }
    Permutation::from_image(image).map_err(|_| InterleaveError::ShapeMismatch {
        detail: "block maps must jointly cover every position exactly once",
    })
}

/// Solves the instance and wraps the result in a self-describing
/// certificate. Natural weights use `σ` from [`solve_half`] directly with
/// modulus `n/2`; arithmetic-progression weights reuse the same `σ`, whose
/// guarantee transfers because
/// `Σ w_k·a_σ(k) = first·Σa + diff·(Σ k·a_σ(k) - Σa)` and each term
/// vanishes mod `n` when the difference is even.
pub fn solve_weighted(
    instance: &Instance,
    weights: &WeightSpec,
) -> Result<Certificate, OddCommonDifference> {
    if let WeightSpec::ArithmeticProgression { common_difference, .. } = weights {
        if common_difference % 2 != 0 {
            return Err(OddCommonDifference { common_difference: *common_difference });
        }
    }
    let sigma = solve_half(instance).into_image();
    let achieved_sum = weighted_sum(instance.values(), &sigma, weights);
    let modulus = weights.modulus(instance.n());
    assert!(
        (&achieved_sum % BigInt::from(modulus)) == BigInt::ZERO,
        "weighted certificate failed its own congruence (bug)"
    );
    Ok(Certificate {
        instance: instance.clone(),
        weights: weights.clone(),
        sigma,
        achieved_sum,
        modulus,
    })
}
