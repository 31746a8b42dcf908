//! Residue-controlled block partitions.
//!
//! For `n = m·q` and any divisor `d` of `q`, [`partition_blocks`] splits
//! `{1, ..., n}` into `m` blocks of size `q` such that every block whose
//! value-sum is divisible by `d` consists of a single residue class mod `d`.
//! The construction peels off one valid block at a time ([`peel_block`])
//! and recurses on the complement.

use alloc::vec::Vec;
use core::fmt;

use crate::egz::{find_zero_sum_subset, IndexSet};
use crate::numtheory::residue_class_count;

/// An ordered partition of `{1, ..., n}` into equally sized blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    n: usize,
    block_size: usize,
    blocks: Vec<IndexSet>,
}

impl BlockPartition {
    /// Length of the partitioned index range.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Common size of every block.
    pub fn block_size(&self) -> usize {
        self.block_size
    }

    /// The blocks, each an [`IndexSet`] into the original sequence.
    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    /// Checks the defining property against `values`: blocks are disjoint,
    /// cover `[1, n]`, have equal size, and any block whose sum is
    /// divisible by `d` lies in a single residue class mod `d`.
    pub fn property_holds(&self, values: &[i64], d: u64) -> bool {
        if values.len() != self.n || self.blocks.len() * self.block_size != self.n {
            return false;
        }
        let mut seen = alloc::vec![false; self.n + 1];
        for block in &self.blocks {
            if block.len() != self.block_size || block.host_len() != self.n {
                return false;
            }
            for &i in block.indices() {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
            if !block_admissible(values, block, d) {
                return false;
            }
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// Returns whether one block satisfies "sum ≢ 0 (mod d), or a single
/// residue class mod d".
fn block_admissible(values: &[i64], block: &IndexSet, d: u64) -> bool {
    let chosen = block.gather(values);
    sum_mod(&chosen, d) != 0 || residue_class_count(&chosen, d) == 1
}

fn sum_mod(values: &[i64], d: u64) -> u64 {
    values
        .iter()
        .fold(0u64, |acc, v| (acc + v.rem_euclid(d as i64) as u64) % d)
}

/// Error for [`partition_blocks`] and [`peel_block`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// The inputs do not describe a valid partition shape.
    InvalidShape { detail: &'static str },
    /// Self-verification failed; the construction guarantees success, so
    /// this signals an implementation bug, not bad input.
    PropertyViolation,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::InvalidShape { detail } => write!(f, "invalid shape: {detail}"),
            PartitionError::PropertyViolation => {
                write!(f, "constructed blocks violate the partition property (bug)")
            }
        }
    }
}

impl core::error::Error for PartitionError {}

const fn invalid(detail: &'static str) -> PartitionError {
    PartitionError::InvalidShape { detail }
}

/// Extracts one admissible block: returns `(I, complement)` where BOTH
/// sides either lie in a single residue class mod `d` or have sum ≢ 0
/// (mod `d`). Requires `d | q` and at least `2q` values.
///
/// The three construction cases, dispatched on the number of residue
/// classes mod `d` present in `values`:
///
/// 1. one class: the first `q` indices work;
/// 2. two classes: take the `q` lowest indices of the majority class; if
///    the complement sum is divisible by `d`, swap the lowest chosen index
///    for the lowest complement index of the other class, which makes both
///    sums nonzero mod `d`;
/// 3. three or more classes: extract a zero-sum `q`-subset (mod `q`, hence
///    mod `d`), then swap the lexicographically first pair `(i0, j0)` whose
///    value difference is ≢ 0 and ≢ total (mod `d`), making both sums
///    nonzero mod `d`.
pub fn peel_block(values: &[i64], q: usize, d: u64) -> Result<(IndexSet, IndexSet), PartitionError> {
    check_divides(d, q)?;
    let n = values.len();
    if n < 2 * q {
        return Err(invalid("need at least 2q values to peel a block of size q"));
    }

    let residues: Vec<u64> = values
        .iter()
        .map(|v| v.rem_euclid(d as i64) as u64)
        .collect();
    let classes = residue_class_count(values, d);

    let block = match classes {
        1 => IndexSet::new((1..=q).collect(), n).expect("consecutive prefix is valid"),
        2 => peel_two_classes(&residues, q, d, n),
        _ => peel_many_classes(values, &residues, q, d, n)?,
    };

    let complement = block.complement();
    for side in [&block, &complement] {
        if !block_admissible(values, side, d) {
            return Err(PartitionError::PropertyViolation);
        }
    }
    Ok((block, complement))
}

/// Case 2: exactly two residue classes mod `d` present.
fn peel_two_classes(residues: &[u64], q: usize, d: u64, n: usize) -> IndexSet {
    // Majority residue: most occurrences, ties broken by smaller residue.
    let mut counts: Vec<(u64, usize)> = Vec::new();
    for &r in residues {
        match counts.iter_mut().find(|(c, _)| *c == r) {
            Some((_, k)) => *k += 1,
            None => counts.push((r, 1)),
        }
    }
    counts.sort_unstable();
    let (major, _) = counts
        .iter()
        .copied()
        .max_by_key(|&(r, k)| (k, core::cmp::Reverse(r)))
        .expect("two classes present");
    let minor = counts.iter().find(|&&(r, _)| r != major).expect("two classes").0;

    // The q lowest indices of the majority class; with two classes and
    // n >= 2q the majority has at least ceil(n/2) >= q members.
    let chosen: Vec<usize> = (1..=n)
        .filter(|&i| residues[i - 1] == major)
        .take(q)
        .collect();
    debug_assert_eq!(chosen.len(), q);

    let complement_sum = (1..=n)
        .filter(|i| !chosen.contains(i))
        .fold(0u64, |acc, i| (acc + residues[i - 1]) % d);
    if complement_sum != 0 {
        // The chosen block is a single class; the complement sum is
        // already nonzero mod d. No swap needed.
        return IndexSet::new(chosen, n).expect("sorted by construction");
    }

    // Swap the lowest chosen index for the lowest minority-class index
    // outside the block. Since d | q the block sum was ≡ 0, so both sides
    // end up ≡ ±(minor - major) ≢ 0 (mod d).
    let i0 = chosen[0];
    let j0 = (1..=n)
        .find(|&j| residues[j - 1] == minor && !chosen.contains(&j))
        .expect("minority class lies outside the majority block");
    let mut swapped: Vec<usize> = chosen.into_iter().skip(1).chain([j0]).collect();
    swapped.sort_unstable();
    debug_assert!(!swapped.contains(&i0));
    IndexSet::new(swapped, n).expect("sorted distinct indices")
}

/// Case 3: at least three residue classes mod `d` present.
fn peel_many_classes(
    values: &[i64],
    residues: &[u64],
    q: usize,
    d: u64,
    n: usize,
) -> Result<IndexSet, PartitionError> {
    let base = find_zero_sum_subset(values, q)
        .map_err(|_| PartitionError::PropertyViolation)?;
    let total: u64 = residues.iter().fold(0u64, |acc, &r| (acc + r) % d);

    // Lexicographically first pair (i0 in the subset, j0 outside) whose
    // difference is ≢ 0 and ≢ total (mod d); with three classes around,
    // such a pair must exist. Swapping it moves the subset sum from 0 to
    // the difference and the complement sum from `total` away from 0.
    for &i0 in base.indices() {
        for j0 in 1..=n {
            if base.contains(j0) {
                continue;
            }
            let diff = (residues[j0 - 1] + d - residues[i0 - 1]) % d;
            if diff != 0 && diff != total {
                let mut swapped: Vec<usize> = base
                    .indices()
                    .iter()
                    .copied()
                    .filter(|&i| i != i0)
                    .chain([j0])
                    .collect();
                swapped.sort_unstable();
                return IndexSet::new(swapped, n).map_err(|_| PartitionError::PropertyViolation);
            }
        }
    }
    Err(PartitionError::PropertyViolation)
}

fn check_divides(d: u64, q: usize) -> Result<(), PartitionError> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    if q == 0 {
        return Err(invalid("q must be positive"));
    }
    if !(q as u64).is_multiple_of(d) {
        return Err(invalid("d must divide q"));
    }
    Ok(())
}

/// Partitions `{1, ..., m·q}` into `m` blocks of size `q` such that every
/// block with sum ≡ 0 (mod `d`) is a single residue class mod `d`.
/// Requires `d | q` and `m ≥ 2`.
///
/// Peels one block, recurses on the complement with `m - 1`, and returns
/// both sides of the final peel when `m = 2`. The result is self-verified;
/// [`PartitionError::PropertyViolation`] signals a bug rather than bad
/// input.
///
/// ```
/// use zerosum_core::partition::partition_blocks;
///
/// let p = partition_blocks(&[5, 5, 5, 5, 5, 5], 3, 2, 2).unwrap();
/// let blocks: Vec<_> = p.blocks().iter().map(|b| b.indices().to_vec()).collect();
/// assert_eq!(blocks, vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
/// ```
pub fn partition_blocks(
    values: &[i64],
    m: usize,
    q: usize,
    d: u64,
) -> Result<BlockPartition, PartitionError> {
    check_divides(d, q)?;
    if m < 2 {
        return Err(invalid("m must be at least 2"));
    }
    let n = values.len();
    if n != m * q {
        return Err(invalid("length must equal m*q"));
    }

    // Peel blocks off the shrinking complement, mapping local indices back
    // to the original host through `global`.
    let mut blocks: Vec<IndexSet> = Vec::with_capacity(m);
    let mut global: Vec<usize> = (1..=n).collect();
    let mut current: Vec<i64> = values.to_vec();
    for remaining in (2..=m).rev() {
        let (block, complement) = peel_block(&current, q, d)?;
        let to_global = |set: &IndexSet| -> Result<IndexSet, PartitionError> {
            let mapped: Vec<usize> = set.indices().iter().map(|&i| global[i - 1]).collect();
            IndexSet::new(mapped, n).map_err(|_| PartitionError::PropertyViolation)
        };
        blocks.push(to_global(&block)?);
        if remaining == 2 {
            blocks.push(to_global(&complement)?);
        } else {
            global = complement.indices().iter().map(|&i| global[i - 1]).collect();
            current = complement.gather(&current);
        }
    }

    let partition = BlockPartition { n, block_size: q, blocks };
    if !partition.property_holds(values, d) {
        return Err(PartitionError::PropertyViolation);
    }
    Ok(partition)
}
