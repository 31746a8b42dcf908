//! Command-line companion to `zerosum-core`: JSON instance and
//! certificate formats, deterministic instance generation, a parallel
//! conjecture sweep driver, and solver benchmarks. The binary is
//! `zerosum`; everything it does is reachable through these modules.

pub mod bench;
pub mod commands;
pub mod json;
pub mod random;
pub mod schema;
pub mod sweep;
