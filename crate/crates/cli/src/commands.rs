//! Argument parsing and subcommand handlers.
//!
//! Exit-code contract: 0 success, 1 a certificate or construction failed
//! re-verification, 2 invalid input, 3 a brute-force search found a
//! counterexample (or no witness).

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use zerosum_core::egz::find_zero_sum_subset;
use zerosum_core::oracle::{exists_assignment_capped, verify_certificate, DEFAULT_ASSIGNMENT_CAP};
use zerosum_core::partition::{partition_blocks, PartitionError};
use zerosum_core::solver::solve_weighted;

use crate::json::JsonBig;
use crate::schema::{CertificateFile, InstanceFile};
use crate::{bench, random, sweep};

/// Environment variable overriding the `oracle` subcommand's size cap.
pub const ORACLE_CAP_ENV: &str = "ZS_MAX_ORACLE_N";

#[derive(Debug)]
pub enum CliError {
    /// Exit 2: unreadable, malformed, or precondition-violating input.
    Invalid(String),
    /// Exit 1: a result failed exact re-verification.
    Verification(String),
    /// Exit 3: an exhaustive search found a counterexample or no witness.
    Counterexample(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Counterexample(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg)
            | CliError::Verification(msg)
            | CliError::Counterexample(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Parser)]
#[command(
    name = "zerosum",
    version,
    about = "Constructive zero-sum permutation solver with brute-force oracles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance file and emit a self-verifying certificate.
    Solve {
        /// Instance JSON: {"n", "values", "weights"?}.
        input: PathBuf,
        /// Certificate destination; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate file with exact arithmetic.
    Verify {
        certificate: PathBuf,
    },
    /// Extract q values with sum divisible by q from at least 2q-1 values.
    Egz {
        #[arg(long)]
        q: usize,
        /// The values, as trailing integers.
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<i64>,
    },
    /// Partition m*q values into m blocks of q so every block with sum
    /// divisible by d lies in one residue class mod d.
    Partition {
        /// Number of blocks.
        #[arg(long)]
        m: usize,
        /// Block size.
        #[arg(long)]
        q: usize,
        /// Divisor of q to test block sums against.
        #[arg(long)]
        d: u64,
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<i64>,
    },
    /// Brute-force search for a permutation with zero weighted sum.
    /// Exits 3 when provably none exists.
    Oracle {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        #[arg(long)]
        modulus: u64,
    },
    /// Exhaustively test the even-n permutation conjecture for small n.
    /// Exits 3 if a counterexample turns up.
    CheckConjecture {
        #[arg(required = true)]
        n: Vec<usize>,
        /// Sweep one representative per affine orbit of the value side
        /// (raises the size cap from 8 to 10).
        #[arg(long)]
        symmetry: bool,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write rows n,status,pairs_examined,seconds to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Generate deterministic solvable instances.
    Random {
        /// Instance size (even).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Time the solver across sizes; prints CSV n,seconds.
    Bench {
        #[arg(long, default_value_t = bench::DEFAULT_MAX_N)]
        max_n: usize,
        /// Instances averaged per size.
        #[arg(long, default_value_t = 3)]
        per_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { input, output } => cmd_solve(&input, output.as_deref()),
        Command::Verify { certificate } => cmd_verify(&certificate),
        Command::Egz { q, values } => cmd_egz(q, &values),
        Command::Partition { m, q, d, values } => cmd_partition(m, q, d, &values),
        Command::Oracle { values, weights, modulus } => cmd_oracle(&values, &weights, modulus),
        Command::CheckConjecture { n, symmetry, jobs, csv } => {
            cmd_check_conjecture(&n, symmetry, jobs, csv.as_deref())
        }
        Command::Random { n, seed, count, out_dir } => cmd_random(n, seed, count, &out_dir),
        Command::Bench { max_n, per_n, seed } => cmd_bench(max_n, per_n, seed),
    }
}

/// Writes `text` plus a newline to stdout. When the reader has gone away
/// (e.g. output piped into `head`), exits with the conventional SIGPIPE
/// status instead of panicking mid-write.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|()| out.write_all(b"\n")).is_err() {
        std::process::exit(141);
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn cmd_solve(input: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let file: InstanceFile = parse_json(input, &read_file(input)?)?;
    let (instance, weights) = file.into_core().map_err(CliError::Invalid)?;
    let certificate = solve_weighted(&instance, &weights).map_err(|e| CliError::Invalid(e.to_string()))?;
    verify_certificate(&certificate)
        .map_err(|e| CliError::Verification(format!("solver output failed re-verification: {e}")))?;
    let text = serde_json::to_string_pretty(&CertificateFile::from_core(&certificate))
        .expect("certificate serialization is infallible");
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
        None => emit(&text),
    }
    Ok(())
}

fn cmd_verify(path: &Path) -> Result<(), CliError> {
    let file: CertificateFile = parse_json(path, &read_file(path)?)?;
    let certificate = file.into_core().map_err(CliError::Invalid)?;
    verify_certificate(&certificate).map_err(|e| CliError::Verification(e.to_string()))?;
    emit(&format!(
        "certificate valid: sum {} is divisible by {}",
        certificate.achieved_sum, certificate.modulus
    ));
    Ok(())
}

fn cmd_egz(q: usize, values: &[i64]) -> Result<(), CliError> {
    if q == 0 {
        return Err(CliError::Invalid("q must be positive".into()));
    }
    let subset =
        find_zero_sum_subset(values, q).map_err(|e| CliError::Invalid(e.to_string()))?;
    let sum: i128 = subset.indices().iter().map(|&i| values[i - 1] as i128).sum();
    let doc = json!({
        "q": q,
        "indices": subset.indices(),
        "sum": JsonBig(sum.into()),
    });
    emit(&serde_json::to_string_pretty(&doc).expect("serialization is infallible"));
    Ok(())
}

fn cmd_partition(m: usize, q: usize, d: u64, values: &[i64]) -> Result<(), CliError> {
    let partition = partition_blocks(values, m, q, d).map_err(|e| match e {
        PartitionError::InvalidShape { .. } => CliError::Invalid(e.to_string()),
        PartitionError::PropertyViolation => CliError::Verification(e.to_string()),
    })?;
    let blocks: Vec<&[usize]> = partition.blocks().iter().map(|b| b.indices()).collect();
    let doc = json!({ "m": m, "q": q, "d": d, "blocks": blocks });
    emit(&serde_json::to_string_pretty(&doc).expect("serialization is infallible"));
    Ok(())
}

fn cmd_oracle(values: &[i64], weights: &[i64], modulus: u64) -> Result<(), CliError> {
    if values.len() != weights.len() {
        return Err(CliError::Invalid(format!(
            "values and weights must have the same length (got {} and {})",
            values.len(),
            weights.len()
        )));
    }
    if modulus == 0 {
        return Err(CliError::Invalid("modulus must be positive".into()));
    }
    let cap = match std::env::var(ORACLE_CAP_ENV) {
        Ok(raw) => raw
            .parse()
            .map_err(|_| CliError::Invalid(format!("{ORACLE_CAP_ENV} must be an integer, got {raw:?}")))?,
        Err(_) => DEFAULT_ASSIGNMENT_CAP,
    };
    let witness = exists_assignment_capped(values, weights, modulus, cap)
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    match witness {
        Some(sigma) => {
            emit(&json!({ "witness": sigma.image() }).to_string());
            Ok(())
        }
        None => {
            emit(&json!({ "witness": null }).to_string());
            Err(CliError::Counterexample(
                "no permutation attains the target sum (search was exhaustive)".into(),
            ))
        }
    }
}

fn cmd_check_conjecture(
    sizes: &[usize],
    symmetry: bool,
    jobs: Option<usize>,
    csv: Option<&Path>,
) -> Result<(), CliError> {
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map(std::num::NonZeroUsize::get).unwrap_or(1)
    });
    if jobs == 0 {
        return Err(CliError::Invalid("--jobs must be positive".into()));
    }
    for &n in sizes {
        if n == 0 {
            return Err(CliError::Invalid("n must be positive".into()));
        }
    }

    let mut reports = Vec::new();
    let mut failed = None;
    for &n in sizes {
        if n >= 8 {
            eprintln!("note: n={n} sweeps hundreds of thousands of pairs; this can take a while");
        }
        let report = sweep::run_sweep(n, symmetry, jobs)
            .map_err(|e| CliError::Invalid(e.to_string()))?;
        let seconds = report.elapsed.as_secs_f64();
        match &report.status {
            zerosum_core::oracle::ConjectureStatus::Verified => {
                emit(&format!(
                    "n={n}: verified ({} pairs in {seconds:.3}s)",
                    report.pairs_examined
                ));
            }
            zerosum_core::oracle::ConjectureStatus::Counterexample { a, w } => {
                emit(&format!(
                    "n={n}: counterexample a={a:?} w={w:?} (pair {} of {}, {seconds:.3}s)",
                    report.pairs_examined, report.pairs_reduced
                ));
                failed.get_or_insert(n);
            }
        }
        reports.push(report);
    }
    if let Some(path) = csv {
        sweep::write_csv(path, &reports)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    }
    match failed {
        Some(n) => Err(CliError::Counterexample(format!("conjecture fails for n={n}"))),
        None => Ok(()),
    }
}

fn cmd_random(n: usize, seed: u64, count: usize, out_dir: &Path) -> Result<(), CliError> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(CliError::Invalid(format!("n must be even and positive (got {n})")));
    }
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", out_dir.display())))?;
    let mut rng = random::seeded_rng(seed);
    for index in 0..count {
        let values = random::random_values(n, &mut rng);
        let file = InstanceFile::new(n, &values, &zerosum_core::solver::WeightSpec::Natural);
        let mut text =
            serde_json::to_string_pretty(&file).expect("serialization is infallible");
        text.push('\n');
        let path = out_dir.join(format!("instance-n{n}-seed{seed}-{index:04}.json"));
        fs::write(&path, text)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
        emit(&path.display().to_string());
    }
    Ok(())
}

fn cmd_bench(max_n: usize, per_n: usize, seed: u64) -> Result<(), CliError> {
    if max_n < 2 {
        return Err(CliError::Invalid("--max-n must be at least 2".into()));
    }
    if per_n == 0 {
        return Err(CliError::Invalid("--per-n must be positive".into()));
    }
    emit("n,seconds");
    for row in bench::run_bench(max_n, per_n, seed) {
        emit(&format!("{},{:.6}", row.n, row.seconds));
    }
    Ok(())
}
