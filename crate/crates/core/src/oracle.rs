//! Ground truth by brute force: an exact permutation-existence decision
//! procedure, enumeration of zero-sum multisets, exhaustive sweeps of
//! Bialostocki's conjecture for small `n`, and certificate re-verification.
//!
//! Everything here is independent of the constructive solver so the two
//! can check each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigInt;

use crate::numtheory::gcd;
use crate::permutation::{is_bijection, Permutation};
use crate::solver::{weighted_sum, Certificate};

/// Default cap for [`exists_assignment`]: the bitmask DP is
/// `O(2^n·n·modulus)` in time and `O(2^n·modulus)` in memory.
pub const DEFAULT_ASSIGNMENT_CAP: usize = 20;

/// Cap for [`enumerate_zero_sum_sequences`]; beyond this the multiset
/// space explodes combinatorially.
pub const ENUMERATION_CAP: usize = 10;

/// Cap for a full [`check_conjecture`] sweep.
pub const SWEEP_CAP: usize = 8;

/// Sweep cap when affine symmetry reduction shrinks the value side.
pub const SWEEP_CAP_WITH_SYMMETRY: usize = 10;

/// Error for the brute-force entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The requested `n` exceeds the brute-force capacity `cap`.
    TooLarge { n: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, cap } => {
                write!(f, "n = {n} exceeds the brute-force cap {cap}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Per-position contribution table: entry `c·n + v` is
/// `w[c]·a[v] mod modulus`.
fn contribution_table(a: &[i64], w: &[i64], modulus: u64) -> Vec<u64> {
    let n = a.len();
    let mut table = vec![0u64; n * n];
    for (c, &weight) in w.iter().enumerate() {
        for (v, &value) in a.iter().enumerate() {
            table[c * n + v] = (weight as i128 * value as i128).rem_euclid(modulus as i128) as u64;
        }
    }
    table
}

/// Suffix feasibility table: entry `mask·modulus + r` is true iff the
/// values NOT in `mask` can be assigned to weight positions
/// `popcount(mask)+1, ..., n` with weighted sum ≡ r (mod modulus).
fn suffix_table(contrib: &[u64], n: usize, modulus: u64) -> Vec<bool> {
    let m = modulus as usize;
    let full = 1usize << n;
    let mut table = vec![false; full * m];
    table[(full - 1) * m] = true;
    for mask in (0..full - 1).rev() {
        let c = mask.count_ones() as usize;
        for v in 0..n {
            if mask & (1 << v) != 0 {
                continue;
            }
            let shift = contrib[c * n + v] as usize;
            let child = (mask | (1 << v)) * m;
            for r in 0..m {
                if table[child + (r + m - shift) % m] {
                    table[mask * m + r] = true;
                }
            }
        }
    }
    table
}

/// Decides whether some permutation `σ` achieves
/// `Σ w_k·a[σ(k)] ≡ 0 (mod modulus)`, by exhaustive bitmask DP, and
/// returns the lexicographically smallest witness image if one exists.
/// `None` means NO permutation works.
///
/// ```
/// use zerosum_core::oracle::exists_assignment;
///
/// assert!(exists_assignment(&[0, 1, 2], &[0, 1, 2], 3).unwrap().is_none());
/// let sigma = exists_assignment(&[0, 1, 2, 1], &[1, 2, 3, 4], 2).unwrap().unwrap();
/// assert_eq!(sigma.image(), &[1, 2, 3, 4]);
/// ```
pub fn exists_assignment(
    a: &[i64],
    w: &[i64],
    modulus: u64,
) -> Result<Option<Permutation>, OracleError> {
    exists_assignment_capped(a, w, modulus, DEFAULT_ASSIGNMENT_CAP)
}

/// [`exists_assignment`] with an explicit capacity cap. Also refuses
/// inputs whose DP table (`2^n·modulus` cells) would exceed a fixed
/// memory budget.
pub fn exists_assignment_capped(
    a: &[i64],
    w: &[i64],
    modulus: u64,
    cap: usize,
) -> Result<Option<Permutation>, OracleError> {
    assert_eq!(a.len(), w.len(), "value and weight lists must have equal length");
    assert!(modulus >= 1, "modulus must be positive");
    let n = a.len();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    const CELL_BUDGET: u128 = 1 << 31;
    if (1u128 << n) * modulus as u128 > CELL_BUDGET {
        return Err(OracleError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok(Some(Permutation::identity(0)));
    }

    let m = modulus as usize;
    let contrib = contribution_table(a, w, modulus);
    let table = suffix_table(&contrib, n, modulus);
    if !table[0] {
        return Ok(None);
    }

    // Greedy forward reconstruction: taking the smallest feasible value at
    // each position yields the lexicographically smallest witness image.
    let mut image = Vec::with_capacity(n);
    let mut mask = 0usize;
    let mut target = 0usize;
    for c in 0..n {
        let v = (0..n)
            .find(|&v| {
                if mask & (1 << v) != 0 {
                    return false;
                }
                let next_target = (target + m - contrib[c * n + v] as usize % m) % m;
                table[(mask | (1 << v)) * m + next_target]
            })
            .expect("suffix table guarantees a feasible choice");
        target = (target + m - contrib[c * n + v] as usize % m) % m;
        mask |= 1 << v;
        image.push(v + 1);
    }
    let sigma = Permutation::from_image(image).expect("greedy scan uses each value once");
    Ok(Some(sigma))
}

/// Reusable scratch space for the fast existence-only check that powers
/// conjecture sweeps.
///
/// Requires `modulus ≤ 64` and `n ≤ 24`: each DP row packs the achievable
/// residue set into one `u64`, and adding a value rotates the set.
#[derive(Debug, Default)]
pub struct AssignmentDp {
    rows: Vec<u64>,
    contrib: Vec<u8>,
}

impl AssignmentDp {
    pub fn new() -> Self {
        Self::default()
    }

    /// True iff some permutation achieves `Σ w_k·a[σ(k)] ≡ 0 (mod modulus)`.
    /// Same verdict as [`exists_assignment`], no witness.
    pub fn admits(&mut self, a: &[i64], w: &[i64], modulus: u64) -> bool {
        assert_eq!(a.len(), w.len(), "value and weight lists must have equal length");
        assert!((1..=64).contains(&modulus), "fast path requires 1 <= modulus <= 64");
        let n = a.len();
        assert!(n <= 24, "fast path requires n <= 24");
        let m = modulus as u32;
        if n == 0 {
            return true;
        }

        self.contrib.clear();
        for &weight in w {
            for &value in a {
                self.contrib
                    .push((weight as i128 * value as i128).rem_euclid(modulus as i128) as u8);
            }
        }

        // Cheap sound pre-check: cyclic assignments of a (and of reversed
        // a) are permutations, so a zero among them settles the question.
        for flip in [false, true] {
            for r in 0..n {
                let sum: u64 = (0..n)
                    .map(|k| {
                        let v = if flip { n - 1 - (k + r) % n } else { (k + r) % n };
                        self.contrib[k * n + v] as u64
                    })
                    .sum();
                if sum.is_multiple_of(modulus) {
                    return true;
                }
            }
        }

        let full = 1usize << n;
        self.rows.resize(full, 0);
        self.rows[0] = 1;
        for mask in 1..full {
            let c = mask.count_ones() as usize;
            let mut row = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let shift = self.contrib[(c - 1) * n + v] as u32;
                row |= rotate_residues(self.rows[mask ^ (1 << v)], shift, m);
            }
            self.rows[mask] = row;
        }
        self.rows[full - 1] & 1 == 1
    }
}

/// Rotates a residue bitset left by `shift` within the low `m` bits:
/// bit `r` moves to bit `(r + shift) mod m`.
fn rotate_residues(x: u64, shift: u32, m: u32) -> u64 {
    debug_assert!(shift < m && m <= 64);
    if shift == 0 {
        return x;
    }
    let keep = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    ((x << shift) | (x >> (m - shift))) & keep
}

/// Iterator over the canonical (nondecreasing) zero-sum multisets of size
/// `n` over `{0, ..., n-1}`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct ZeroSumSequences {
    n: usize,
    next: Option<Vec<i64>>,
}

impl Iterator for ZeroSumSequences {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            let current = self.next.take()?;
            self.next = nondecreasing_successor(&current, self.n);
            if current.iter().sum::<i64>() % self.n as i64 == 0 {
                return Some(current);
            }
        }
    }
}

/// The lexicographic successor among nondecreasing sequences over
/// `[0, n-1]`, or `None` after the last one.
fn nondecreasing_successor(seq: &[i64], n: usize) -> Option<Vec<i64>> {
    let limit = n as i64 - 1;
    let bump = seq.iter().rposition(|&v| v < limit)?;
    let mut next = seq.to_vec();
    next[bump] += 1;
    let floor = next[bump];
    for slot in next.iter_mut().skip(bump + 1) {
        *slot = floor;
    }
    Some(next)
}

/// Streams every size-`n` multiset over `{0, ..., n-1}` whose sum is
/// ≡ 0 (mod n), as nondecreasing sequences in lexicographic order, each
/// exactly once.
pub fn enumerate_zero_sum_sequences(n: usize) -> Result<ZeroSumSequences, OracleError> {
    assert!(n >= 1, "n must be positive");
    if n > ENUMERATION_CAP {
        return Err(OracleError::TooLarge { n, cap: ENUMERATION_CAP });
    }
    Ok(ZeroSumSequences { n, next: Some(vec![0; n]) })
}

/// [`enumerate_zero_sum_sequences`], materialized.
pub fn zero_sum_multisets(n: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    Ok(enumerate_zero_sum_sequences(n)?.collect())
}

/// Keeps one representative per orbit of the affine maps
/// `x ↦ u·x + c (mod n)` with `u` a unit: the representative is the
/// orbit's lexicographically smallest canonical form, so exactly the
/// inputs that equal their own orbit minimum survive.
///
/// Sound for sweeping the value side of a pair `(a, w)` with `Σw ≡ 0`:
/// `Σ w_k·(u·a + c)[σ(k)] = u·Σ w_k·a[σ(k)] + c·Σw`, so permutation
/// existence mod `n` is orbit-invariant.
pub fn reduce_by_affine_symmetry(seqs: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    assert!(n >= 1, "n must be positive");
    let units: Vec<i64> =
        (1..=n as u64).filter(|&u| gcd(u, n as u64) == 1).map(|u| u as i64).collect();
    seqs.iter()
        .filter(|seq| {
            let mut transformed = vec![0i64; seq.len()];
            for &u in &units {
                for c in 0..n as i64 {
                    for (slot, &x) in transformed.iter_mut().zip(seq.iter()) {
                        *slot = (u * x + c).rem_euclid(n as i64);
                    }
                    transformed.sort_unstable();
                    if transformed[..] < seq[..] {
                        return false;
                    }
                }
            }
            true
        })
        .cloned()
        .collect()
}

/// Outcome of a conjecture sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjectureStatus {
    /// Every zero-sum pair admitted a permutation.
    Verified,
    /// The first pair (in canonical enumeration order) admitting none.
    Counterexample { a: Vec<i64>, w: Vec<i64> },
}

/// Result of [`check_conjecture`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub status: ConjectureStatus,
    /// Size of the (possibly symmetry-reduced) pair space.
    pub pairs_reduced: u64,
    /// Pairs actually examined; on a counterexample this is its 1-based
    /// canonical index, since the sweep stops there.
    pub pairs_examined: u64,
    /// This crate has no clock; the sweep reports zero and callers with a
    /// timer stamp the true duration.
    pub elapsed: Duration,
}

/// Exhaustively tests whether every pair of zero-sum multisets `(a, w)`
/// of size `n` over `Z_n` admits a permutation with
/// `Σ w_k·a[σ(k)] ≡ 0 (mod n)`, sweeping pairs in canonical order and
/// stopping at the first failure.
///
/// With `symmetry_reduction` the value side keeps one representative per
/// affine orbit (see [`reduce_by_affine_symmetry`]), which also raises the
/// size cap from 8 to 10.
pub fn check_conjecture(
    n: usize,
    symmetry_reduction: bool,
) -> Result<ConjectureReport, OracleError> {
    assert!(n >= 1, "n must be positive");
    let cap = if symmetry_reduction { SWEEP_CAP_WITH_SYMMETRY } else { SWEEP_CAP };
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }

    let w_list = zero_sum_multisets(n)?;
    let a_list = if symmetry_reduction {
        reduce_by_affine_symmetry(&w_list, n)
    } else {
        w_list.clone()
    };

    let pairs_reduced = (a_list.len() * w_list.len()) as u64;
    let mut dp = AssignmentDp::new();
    let mut examined = 0u64;
    for a in &a_list {
        for w in &w_list {
            examined += 1;
            if !dp.admits(a, w, n as u64) {
                return Ok(ConjectureReport {
                    n,
                    status: ConjectureStatus::Counterexample { a: a.clone(), w: w.clone() },
                    pairs_reduced,
                    pairs_examined: examined,
                    elapsed: Duration::ZERO,
                });
            }
        }
    }
    Ok(ConjectureReport {
        n,
        status: ConjectureStatus::Verified,
        pairs_reduced,
        pairs_examined: examined,
        elapsed: Duration::ZERO,
    })
}

/// Reason a certificate failed verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateError {
    /// `sigma` is not a permutation of `{1, ..., n}`.
    NotBijection,
    /// The stated modulus is not the one the weight spec guarantees.
    WrongModulus { expected: u64, got: u64 },
    /// The stated sum differs from the recomputed one, or is not
    /// divisible by the modulus.
    WrongSum,
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::NotBijection => write!(f, "sigma is not a bijection"),
            CertificateError::WrongModulus { expected, got } => {
                write!(f, "modulus should be {expected}, certificate says {got}")
            }
            CertificateError::WrongSum => write!(f, "achieved sum fails re-evaluation"),
        }
    }
}

impl core::error::Error for CertificateError {}

/// Re-verifies a certificate from scratch with exact integer arithmetic:
/// `sigma` must be a bijection, the modulus must match the weight spec,
/// and the recomputed `Σ w_k·values[σ(k)]` must equal the stated sum and
/// be divisible by the modulus.
pub fn verify_certificate(certificate: &Certificate) -> Result<(), CertificateError> {
    let n = certificate.instance.n();
    if certificate.sigma.len() != n || !is_bijection(&certificate.sigma) {
        return Err(CertificateError::NotBijection);
    }
    let expected = certificate.weights.modulus(n);
    if certificate.modulus != expected {
        return Err(CertificateError::WrongModulus { expected, got: certificate.modulus });
    }
    let recomputed =
        weighted_sum(certificate.instance.values(), &certificate.sigma, &certificate.weights);
    if recomputed != certificate.achieved_sum
        || (&recomputed % BigInt::from(expected)) != BigInt::ZERO
    {
        return Err(CertificateError::WrongSum);
    }
    Ok(())
}
