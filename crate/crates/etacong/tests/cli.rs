//! End-to-end checks of the command-line front end: exit codes and
//! byte-level determinism of machine-readable output.

use std::fs;
use std::process::{Command, Output};

fn etacong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etacong"))
        .args(args)
        .env_remove("ETACONG_CONFIG")
        .output()
        .expect("spawn etacong")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn selftest_passes() {
    let out = etacong(&["selftest"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn modeq_verification_exit_zero() {
    let out = etacong(&["verify-modeq", "--ell", "5", "--prec", "80"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verified"));
}

#[test]
fn theta_row_output() {
    let out = etacong(&["theta", "--ell", "5"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("0,1,1,0,0"));
}

#[test]
fn theta_export_writes_csv() {
    let dir = std::env::temp_dir().join("etacong-test-theta");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("theta17.csv");
    let out = etacong(&["theta", "--ell", "17", "--export", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("ell,lambda,mu,theta\n"));
    assert_eq!(text.lines().count(), 1 + 4 * 17);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&etacong(&["verify"])), 2);
    assert_eq!(code(&etacong(&["s-poly", "--ell", "5", "--r", "0"])), 2);
    assert_eq!(code(&etacong(&["frobnicate"])), 2);
    assert_eq!(code(&etacong(&["theta", "--ell", "19"])), 2);
}

#[test]
fn violated_claims_exit_one() {
    let dir = std::env::temp_dir().join("etacong-test-claims");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.claims");
    // p(5n + 4) is not divisible by 25
    fs::write(&path, "classical 5 0 0 1 2 congruence\n").unwrap();
    let out = etacong(&[
        "verify",
        "--claims",
        path.to_str().unwrap(),
        "--bound",
        "20",
    ]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("Violated"));
}

#[test]
fn cap_exhaustion_exits_three() {
    let dir = std::env::temp_dir().join("etacong-test-caps");
    fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("tiny.cfg");
    fs::write(&cfg, "oracle_index_cap = 50\n").unwrap();
    let path = dir.join("big.claims");
    fs::write(&path, "classical 5 0 0 2 2 congruence\n").unwrap();
    let out = etacong(&[
        "verify",
        "--claims",
        path.to_str().unwrap(),
        "--bound",
        "100",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn good_claims_exit_zero() {
    let dir = std::env::temp_dir().join("etacong-test-claims-ok");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ok.claims");
    fs::write(
        &path,
        "# Ramanujan ladder\nclassical 5 0 0 1 1 congruence\nclassical 7 0 0 1 1 congruence\ncore 17 0 0 1 1 incongruence\n",
    )
    .unwrap();
    let out = etacong(&[
        "verify",
        "--claims",
        path.to_str().unwrap(),
        "--bound",
        "30",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn json_output_is_deterministic() {
    let run = || {
        let out = etacong(&["verify", "--corollary", "regular", "--format", "json"]);
        assert_eq!(code(&out), 0);
        out.stdout
    };
    let a = run();
    let b = run();
    assert!(!a.is_empty());
    assert_eq!(a, b, "two identical invocations must emit identical bytes");
}

#[test]
fn table_audits_accept_expected_findings() {
    let out = etacong(&["table", "--which", "regular"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("146/4"));
    let out = etacong(&["table", "--which", "alpha17"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}
