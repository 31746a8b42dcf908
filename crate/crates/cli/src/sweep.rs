//! Conjecture sweep driver: wall-clock stamping, optional worker-pool
//! parallelism across pairs, and CSV reporting.

use std::io::{self, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use zerosum_core::oracle::{
    check_conjecture, reduce_by_affine_symmetry, zero_sum_multisets, AssignmentDp,
    ConjectureReport, ConjectureStatus, OracleError, SWEEP_CAP, SWEEP_CAP_WITH_SYMMETRY,
};

/// Runs the exhaustive sweep for `n`, distributing pairs over `jobs`
/// workers, and stamps the elapsed wall time. The outcome is identical to
/// the sequential sweep regardless of `jobs`: workers race but the merge
/// keeps the canonically smallest failing pair.
pub fn run_sweep(n: usize, symmetry: bool, jobs: usize) -> Result<ConjectureReport, OracleError> {
    let start = Instant::now();
    let mut report =
        if jobs <= 1 { check_conjecture(n, symmetry)? } else { parallel_sweep(n, symmetry, jobs)? };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn parallel_sweep(n: usize, symmetry: bool, jobs: usize) -> Result<ConjectureReport, OracleError> {
    assert!(n >= 1, "n must be positive");
    let cap = if symmetry { SWEEP_CAP_WITH_SYMMETRY } else { SWEEP_CAP };
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }

    let w_list = zero_sum_multisets(n)?;
    let a_list =
        if symmetry { reduce_by_affine_symmetry(&w_list, n) } else { w_list.clone() };
    let stride = w_list.len() as u64;
    let total = a_list.len() as u64 * stride;

    // 0-based canonical pair index of the first failure, or MAX if none.
    // A worker may skip an index only when a strictly smaller failing
    // index is already recorded, so the final minimum is exact.
    let first_fail = AtomicU64::new(u64::MAX);
    std::thread::scope(|scope| {
        for worker in 0..jobs as u64 {
            let (a_list, w_list, first_fail) = (&a_list, &w_list, &first_fail);
            scope.spawn(move || {
                let mut dp = AssignmentDp::new();
                let mut index = worker;
                while index < total && index < first_fail.load(Ordering::Relaxed) {
                    let a = &a_list[(index / stride) as usize];
                    let w = &w_list[(index % stride) as usize];
                    if !dp.admits(a, w, n as u64) {
                        first_fail.fetch_min(index, Ordering::Relaxed);
                        break;
                    }
                    index += jobs as u64;
                }
            });
        }
    });

    let fail = first_fail.load(Ordering::Acquire);
    let (status, pairs_examined) = if fail == u64::MAX {
        (ConjectureStatus::Verified, total)
    } else {
        let a = a_list[(fail / stride) as usize].clone();
        let w = w_list[(fail % stride) as usize].clone();
        (ConjectureStatus::Counterexample { a, w }, fail + 1)
    };
    Ok(ConjectureReport {
        n,
        status,
        pairs_reduced: total,
        pairs_examined,
        elapsed: std::time::Duration::ZERO,
    })
}

/// Writes reports as `n,status,pairs_examined,seconds` rows.
pub fn write_csv(path: &Path, reports: &[ConjectureReport]) -> io::Result<()> {
    let mut out = std::fs::File::create(path)?;
    writeln!(out, "n,status,pairs_examined,seconds")?;
    for report in reports {
        let status = match report.status {
            ConjectureStatus::Verified => "verified",
            ConjectureStatus::Counterexample { .. } => "counterexample",
        };
        writeln!(
            out,
            "{},{},{},{:.3}",
            report.n,
            status,
            report.pairs_examined,
            report.elapsed.as_secs_f64()
        )?;
    }
    Ok(())
}
