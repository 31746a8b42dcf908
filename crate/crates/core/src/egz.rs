//! Constructive Erdős–Ginzburg–Ziv extraction.
//!
//! Among any `2q - 1` integers there exist exactly `q` whose sum is
//! divisible by `q`. [`find_zero_sum_subset`] finds the lexicographically
//! smallest such index set by dynamic programming over
//! (suffix position, count still needed, residue still needed).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set of 1-based indices into a host sequence, stored strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    indices: Vec<usize>,
    host_len: usize,
}

/// Error for [`IndexSet::new`]: indices not strictly increasing or out of
/// `[1, host_len]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvalidIndexSet;

impl fmt::Display for InvalidIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "indices must be strictly increasing and within [1, host_len]")
    }
}

impl core::error::Error for InvalidIndexSet {}

impl IndexSet {
    /// Builds an index set from strictly increasing 1-based indices into a
    /// host sequence of length `host_len`.
    pub fn new(indices: Vec<usize>, host_len: usize) -> Result<Self, InvalidIndexSet> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&i| i >= 1 && i <= host_len);
        if increasing && in_range {
            Ok(IndexSet { indices, host_len })
        } else {
            Err(InvalidIndexSet)
        }
    }

    /// The indices, strictly increasing and 1-based.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Length of the host sequence this set indexes into.
    pub fn host_len(&self) -> usize {
        self.host_len
    }

    /// Number of indices in the set.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// Returns whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Returns whether `index` (1-based) is in the set.
    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// The complementary set of indices within the same host.
    pub fn complement(&self) -> IndexSet {
        let indices = (1..=self.host_len)
            .filter(|&i| !self.contains(i))
            .collect();
        IndexSet {
            indices,
            host_len: self.host_len,
        }
    }

    /// Extracts the host values this set selects, in index order.
    ///
    /// # Panics
    ///
    /// Panics if `host` is shorter than `host_len`.
    pub fn gather<T: Copy>(&self, host: &[T]) -> Vec<T> {
        self.indices.iter().map(|&i| host[i - 1]).collect()
    }
}

/// Error for [`find_zero_sum_subset`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgzError {
    /// Fewer than `2q - 1` values were supplied; existence of a zero-sum
    /// `q`-subset is not guaranteed below that length.
    InsufficientLength { len: usize, q: usize },
    /// The guaranteed subset was not found; this signals an implementation
    /// bug, not bad input.
    InternalContradiction,
}

impl fmt::Display for EgzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgzError::InsufficientLength { len, q } => write!(
                f,
                "need at least 2q-1 = {} values for q = {q}, got {len}",
                2 * q - 1
            ),
            EgzError::InternalContradiction => {
                write!(f, "zero-sum subset search failed on valid input (bug)")
            }
        }
    }
}

impl core::error::Error for EgzError {}

/// Finds the lexicographically smallest set of exactly `q` indices whose
/// values sum to `0 (mod q)`, given at least `2q - 1` values.
///
/// Runs in `O(len · q²)` time and space. Values are reduced modulo `q` on
/// entry, so magnitudes and signs of the inputs are irrelevant.
///
/// ```
/// use zerosum_core::egz::find_zero_sum_subset;
///
/// let witness = find_zero_sum_subset(&[1, 1, 1, 2, 0], 3).unwrap();
/// assert_eq!(witness.indices(), &[1, 2, 3]);
/// ```
///
/// # Panics
///
/// Panics if `q == 0`.
pub fn find_zero_sum_subset(values: &[i64], q: usize) -> Result<IndexSet, EgzError> {
    assert!(q >= 1, "find_zero_sum_subset requires q >= 1");
    let len = values.len();
    if len < 2 * q - 1 {
        return Err(EgzError::InsufficientLength { len, q });
    }

    let residues: Vec<usize> = values
        .iter()
        .map(|v| v.rem_euclid(q as i64) as usize)
        .collect();

    // feasible[i][c][r]: from the suffix starting at 0-based item i, some
    // choice of exactly c items sums to r (mod q).
    let idx = |i: usize, c: usize, r: usize| (i * (q + 1) + c) * q + r;
    let mut feasible = vec![false; (len + 1) * (q + 1) * q];
    feasible[idx(len, 0, 0)] = true;
    for i in (0..len).rev() {
        for c in 0..=q {
            for r in 0..q {
                let skip = feasible[idx(i + 1, c, r)];
                let take = c > 0 && feasible[idx(i + 1, c - 1, (r + q - residues[i]) % q)];
                feasible[idx(i, c, r)] = skip || take;
            }
        }
    }
    if !feasible[idx(0, q, 0)] {
        return Err(EgzError::InternalContradiction);
    }

    // Take each item greedily whenever the remainder is still completable;
    // earliest-possible inclusion yields the lexicographically smallest set.
    let mut chosen = Vec::with_capacity(q);
    let (mut need, mut residue) = (q, 0usize);
    for i in 0..len {
        if need > 0 {
            let after = (residue + q - residues[i]) % q;
            if feasible[idx(i + 1, need - 1, after)] {
                chosen.push(i + 1);
                need -= 1;
                residue = after;
            }
        }
    }
    if need != 0 || residue != 0 {
        return Err(EgzError::InternalContradiction);
    }
    let sum: i64 = chosen.iter().map(|&i| values[i - 1].rem_euclid(q as i64)).sum();
    if sum % q as i64 != 0 {
        return Err(EgzError::InternalContradiction);
    }
    IndexSet::new(chosen, len).map_err(|_| EgzError::InternalContradiction)
}
