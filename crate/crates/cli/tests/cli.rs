//! End-to-end tests of the `zerosum` binary: JSON round trips, exit
//! codes, and determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use zerosum_cli::schema::{CertificateFile, InstanceFile};

fn zerosum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).expect("temp dir is writable");
}

#[test]
fn solve_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.json");
    let certificate = dir.path().join("certificate.json");
    write(&instance, r#"{"n": 4, "values": [0, 1, 2, 1], "weights": {"kind": "natural"}}"#);

    let out = zerosum(&["solve", instance.to_str().unwrap(), "-o", certificate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let parsed: CertificateFile =
        serde_json::from_str(&fs::read_to_string(&certificate).unwrap()).unwrap();
    assert_eq!(parsed.n, 4);
    assert_eq!(parsed.modulus, 2);
    let mut sorted = parsed.sigma.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, [1, 2, 3, 4]);

    let out = zerosum(&["verify", certificate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("certificate valid"));
}

#[test]
fn solve_without_output_prints_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.json");
    write(&instance, r#"{"n": 2, "values": [1, 1]}"#);
    let out = zerosum(&["solve", instance.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: CertificateFile = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.sigma, [1, 2]);
    assert_eq!(parsed.modulus, 1);
}

#[test]
fn solve_rejects_odd_n_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("odd.json");
    write(&instance, r#"{"n": 3, "values": [0, 1, 2]}"#);
    let out = zerosum(&["solve", instance.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n must be even"), "stderr: {}", stderr(&out));
}

#[test]
fn solve_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();

    let garbled = dir.path().join("garbled.json");
    write(&garbled, "{not json");
    let out = zerosum(&["solve", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("garbled.json"));

    let missing = dir.path().join("does-not-exist.json");
    let out = zerosum(&["solve", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let odd_diff = dir.path().join("odd-diff.json");
    write(
        &odd_diff,
        r#"{"n": 4, "values": [0, 1, 2, 1], "weights": {"kind": "ap", "first": 0, "diff": 3}}"#,
    );
    let out = zerosum(&["solve", odd_diff.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("must be even"));

    let bad_sum = dir.path().join("bad-sum.json");
    write(&bad_sum, r#"{"n": 4, "values": [0, 1, 2, 2]}"#);
    let out = zerosum(&["solve", bad_sum.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sum"));
}

#[test]
fn solve_handles_ap_weights() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("ap.json");
    write(
        &instance,
        r#"{"n": 6, "values": [0, 1, 2, 3, 4, 2], "weights": {"kind": "ap", "first": -3, "diff": 4}}"#,
    );
    let certificate = dir.path().join("ap-cert.json");
    let out = zerosum(&["solve", instance.to_str().unwrap(), "-o", certificate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let parsed: CertificateFile =
        serde_json::from_str(&fs::read_to_string(&certificate).unwrap()).unwrap();
    assert_eq!(parsed.modulus, 6);
    let out = zerosum(&["verify", certificate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_flags_tampering_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.json");
    let certificate = dir.path().join("certificate.json");
    write(&instance, r#"{"n": 4, "values": [0, 1, 2, 1]}"#);
    let out = zerosum(&["solve", instance.to_str().unwrap(), "-o", certificate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let good: CertificateFile =
        serde_json::from_str(&fs::read_to_string(&certificate).unwrap()).unwrap();

    let mut bad_sum = good.clone();
    bad_sum.achieved_sum = zerosum_cli::json::JsonBig(bad_sum.achieved_sum.0 + 1);
    let tampered = dir.path().join("bad-sum.json");
    write(&tampered, &serde_json::to_string(&bad_sum).unwrap());
    let out = zerosum(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("sum"));

    let mut bad_sigma = good.clone();
    bad_sigma.sigma[0] = bad_sigma.sigma[1];
    let tampered = dir.path().join("bad-sigma.json");
    write(&tampered, &serde_json::to_string(&bad_sigma).unwrap());
    let out = zerosum(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bijection"));

    let mut bad_modulus = good;
    bad_modulus.modulus = 4;
    let tampered = dir.path().join("bad-modulus.json");
    write(&tampered, &serde_json::to_string(&bad_modulus).unwrap());
    let out = zerosum(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("modulus"));
}

#[test]
fn check_conjecture_exit_codes_and_csv() {
    let out = zerosum(&["check-conjecture", "4"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("n=4: verified"));

    let out = zerosum(&["check-conjecture", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("a=[0, 1, 2] w=[0, 1, 2]"), "stdout: {}", stdout(&out));

    let out = zerosum(&["check-conjecture", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));

    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let out = zerosum(&["check-conjecture", "2", "4", "--jobs", "3", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,status,pairs_examined,seconds"));
    assert!(lines.next().unwrap().starts_with("2,verified,4,"));
    assert!(lines.next().unwrap().starts_with("4,verified,100,"));
}

#[test]
fn oracle_witness_and_counterexample_exits() {
    let out = zerosum(&["oracle", "--values", "0,0,0,0", "--weights", "3,1,4,1", "--modulus", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), r#"{"witness":[1,2,3,4]}"#);

    let out = zerosum(&["oracle", "--values", "0,1,2", "--weights", "0,1,2", "--modulus", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout(&out).trim(), r#"{"witness":null}"#);

    let out = zerosum(&["oracle", "--values", "0,1", "--weights", "1", "--modulus", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("same length"));

    let out = zerosum(&["oracle", "--values", "-1,1,0,0", "--weights", "1,2,3,4", "--modulus", "2"]);
    assert_eq!(out.status.code(), Some(0), "negative values parse");
}

#[test]
fn oracle_cap_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args(["oracle", "--values", "0,0,0,0", "--weights", "1,2,3,4", "--modulus", "2"])
        .env("ZS_MAX_ORACLE_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap 3"), "stderr: {}", stderr(&out));

    let out = Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args(["oracle", "--values", "0,0,0,0", "--weights", "1,2,3,4", "--modulus", "2"])
        .env("ZS_MAX_ORACLE_N", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ZS_MAX_ORACLE_N"));
}

#[test]
fn random_is_deterministic_and_balanced() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a");
    let second = dir.path().join("b");
    for out_dir in [&first, &second] {
        let out = zerosum(&[
            "random", "--n", "6", "--seed", "1", "--count", "2", "--out-dir",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    for name in ["instance-n6-seed1-0000.json", "instance-n6-seed1-0001.json"] {
        let a = fs::read(first.join(name)).unwrap();
        let b = fs::read(second.join(name)).unwrap();
        assert_eq!(a, b, "same seed must be byte-identical");
        let parsed: InstanceFile = serde_json::from_slice(&a).unwrap();
        let sum: i128 = parsed.values.iter().map(|v| v.0 as i128).sum();
        assert_eq!(sum.rem_euclid(6), 0);
        // Every generated instance must solve.
        let out = zerosum(&["solve", first.join(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }

    let out = zerosum(&["random", "--n", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n must be even"));
}

#[test]
fn egz_subcommand() {
    let out = zerosum(&["egz", "--q", "3", "1", "1", "1", "2", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(doc["sum"], serde_json::json!(3));

    let out = zerosum(&["egz", "--q", "3", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = zerosum(&["egz", "--q", "2", "-5", "3", "7"]);
    assert_eq!(out.status.code(), Some(0), "negative trailing values parse");
}

#[test]
fn partition_subcommand() {
    let out = zerosum(&["partition", "--m", "2", "--q", "3", "--d", "3", "0", "1", "2", "0", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);

    let out = zerosum(&["partition", "--m", "2", "--q", "3", "--d", "2", "0", "1", "2", "0", "1", "2"]);
    assert_eq!(out.status.code(), Some(2), "d must divide q");
}

#[test]
fn bench_prints_csv() {
    let out = zerosum(&["bench", "--max-n", "8", "--per-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,seconds"));
    let ns: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, ["2", "4", "6", "8"]);
}

#[test]
fn closed_stdout_pipe_exits_without_panicking() {
    // A certificate for n = 6000 is far larger than a pipe buffer, so the
    // child must block writing it; closing our read end mid-write must
    // yield the conventional SIGPIPE exit status, not a panic.
    let dir = tempfile::tempdir().unwrap();
    let out = zerosum(&["random", "--n", "6000", "--seed", "3", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let instance = dir.path().join("instance-n6000-seed3-0000.json");

    let mut child = Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args(["solve", instance.to_str().unwrap()])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary should spawn");
    drop(child.stdout.take());
    let status = child.wait().expect("child should exit");
    assert_eq!(status.code(), Some(141), "expected quiet SIGPIPE exit");

    let mut err = String::new();
    std::io::Read::read_to_string(child.stderr.as_mut().unwrap(), &mut err).unwrap();
    assert!(!err.contains("panicked"), "stderr: {err}");
}
