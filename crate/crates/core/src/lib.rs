//! Constructive solver for zero-sum permutation congruences.
//!
//! Given an even `n` and integers `a_1, ..., a_n` with `a_1 + ... + a_n ≡ 0
//! (mod n)`, this crate constructs a permutation `σ` of `{1, ..., n}` such
//! that
//!
//! ```text
//! 1·a_σ(1) + 2·a_σ(2) + ... + n·a_σ(n) ≡ 0  (mod n/2)
//! ```
//!
//! and, as a corollary, makes `w_1·a_σ(1) + ... + w_n·a_σ(n) ≡ 0 (mod n)`
//! whenever the weights `w_k` form an arithmetic progression with even
//! common difference. Every solve returns a [`solver::Certificate`] that can
//! be re-checked independently with exact integer arithmetic.
//!
//! The construction is fully deterministic and built from four ingredients:
//!
//! * [`egz`] — a constructive Erdős–Ginzburg–Ziv subroutine: from at least
//!   `2q - 1` integers it extracts exactly `q` whose sum is divisible by `q`;
//! * [`partition`] — splits `{1, ..., mq}` into `m` blocks of size `q` so
//!   that any block with sum divisible by `d` is constant modulo `d`
//!   (for any `d | q`);
//! * [`primepower`] — solves the full-strength congruence `Σ k·a_σ(k) ≡ 0
//!   (mod p^α)` for odd prime powers under a hypothesis the partition
//!   guarantees;
//! * [`solver`] — ties the pieces together by induction on the number of
//!   prime factors of `n`, interleaving sub-solutions either by parity or
//!   through a CRT indexing of positions.
//!
//! The [`oracle`] module provides independent brute-force machinery: a
//! bitmask-DP existence check over all `n!` assignments, enumeration of
//! zero-sum sequences, certificate verification, and an exhaustive check of
//! Bialostocki's conjecture for small `n` (verified for `n = 2, 4, 6, 8`;
//! refuted by counterexample for odd `n`).
//!
//! The crate is `no_std` (it allocates, so it requires `alloc`); binaries
//! and anything needing IO or wall-clock time live in companion crates.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod egz;
pub mod numtheory;
pub mod oracle;
pub mod partition;
pub mod permutation;
pub mod primepower;
pub mod solver;

pub use egz::IndexSet;
pub use partition::BlockPartition;
pub use permutation::Permutation;
pub use solver::{Certificate, Instance, WeightSpec};
