//! Wall-clock timing of the solver across instance sizes.

use std::time::Instant;

use zerosum_core::solver::{solve_half, Instance};

use crate::random::{random_values, seeded_rng};

/// Default size ceiling. Pure powers of two are the memory-heavy case
/// (the zero-sum-half search table grows with the cube of the level
/// size), and 512 keeps that comfortably in tens of megabytes.
pub const DEFAULT_MAX_N: usize = 512;

#[derive(Clone, Copy, Debug)]
pub struct BenchRow {
    pub n: usize,
    /// Mean seconds per solve.
    pub seconds: f64,
}

/// Even sizes mixing powers of two with composite ladders.
fn sizes(max_n: usize) -> Vec<usize> {
    [2, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024]
        .into_iter()
        .filter(|&n| n <= max_n)
        .collect()
}

/// Times `per_n` seeded random solves at each size up to `max_n` and
/// reports the mean. Generation happens outside the timed region.
pub fn run_bench(max_n: usize, per_n: usize, seed: u64) -> Vec<BenchRow> {
    assert!(per_n >= 1, "per_n must be positive");
    let mut rng = seeded_rng(seed);
    let mut rows = Vec::new();
    for n in sizes(max_n) {
        let instances: Vec<Instance> = (0..per_n)
            .map(|_| Instance::new(n, random_values(n, &mut rng)).expect("balanced by construction"))
            .collect();
        let start = Instant::now();
        for instance in &instances {
            let sigma = solve_half(instance);
            std::hint::black_box(sigma);
        }
        rows.push(BenchRow { n, seconds: start.elapsed().as_secs_f64() / per_n as f64 });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bench_produces_rows() {
        let rows = run_bench(16, 2, 1);
        let ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, [2, 4, 6, 8, 12, 16]);
        assert!(rows.iter().all(|r| r.seconds >= 0.0));
    }
}
