use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jacobi-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

const SPECTRA_DOUBLED: &str = r#"{"N": 3, "site": 2,
  "lambda": [-1.4142135623730951, 0.0, 1.4142135623730951],
  "mu": [{"value": 0.0, "sigma": 0.0}, {"value": 0.0, "sigma": 0.0}]}"#;

#[test]
fn forward_two_by_two() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"b": [0, 0], "a": [1]}"#);
    let out = run(&["forward", &m, "--site", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["N"], 2);
    assert_eq!(v["site"], 1);
    let lambda = floats(&v["lambda"]);
    assert!((lambda[0] + 1.0).abs() < 1e-12 && (lambda[1] - 1.0).abs() < 1e-12);
    assert_eq!(v["mu"][0]["value"].as_f64().unwrap(), 0.0);
    assert_eq!(v["mu"][0]["sigma"].as_f64().unwrap(), 1.0);
}

#[test]
fn forward_scalar() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"b": [5], "a": []}"#);
    let out = run(&["forward", &m, "--site", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["N"], 1);
    assert_eq!(floats(&v["lambda"]), vec![5.0]);
    assert!(v["mu"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let neg = write(dir.path(), "neg.json", r#"{"b": [0, 0], "a": [-1]}"#);
    assert_eq!(code(&run(&["forward", &neg, "--site", "1"])), 2);
    let junk = write(dir.path(), "junk.json", "{not json");
    assert_eq!(code(&run(&["forward", &junk, "--site", "1"])), 2);
    assert_eq!(code(&run(&["inverse", &junk])), 2);
    assert_eq!(
        code(&run(&["forward", "/nonexistent/file", "--site", "1"])),
        2
    );
}

#[test]
fn bad_site_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"b": [0, 0], "a": [1]}"#);
    let out = run(&["forward", &m, "--site", "3"]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&run(&["roundtrip", "--size", "4", "--site", "9"])), 3);
}

#[test]
fn inverse_doubled_example() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", SPECTRA_DOUBLED);
    let out = run(&["inverse", &s]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for (x, y) in floats(&v["b"]).iter().zip([0.0; 3]) {
        assert!((x - y).abs() < 1e-12);
    }
    for (x, y) in floats(&v["a"]).iter().zip([1.0; 2]) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn inverse_single_eigenvalue() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(
        dir.path(),
        "s.json",
        r#"{"N": 1, "site": 1, "lambda": [7], "mu": []}"#,
    );
    let out = run(&["inverse", &s]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(floats(&v["b"]), vec![7.0]);
    assert!(v["a"].as_array().unwrap().is_empty());
}

#[test]
fn inverse_rejects_invalid_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(
        dir.path(),
        "s.json",
        r#"{"N": 2, "site": 1, "lambda": [-1, 1], "mu": [{"value": 1.5, "sigma": 1}]}"#,
    );
    let out = run(&["inverse", &s]);
    assert_eq!(code(&out), 4);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("rule b"), "{err}");
}

#[test]
fn inverse_breakdown_exit_5() {
    // three left-block values, two of them 1e-15 apart
    let dir = tempfile::tempdir().unwrap();
    let s = write(
        dir.path(),
        "s.json",
        r#"{"N": 4, "site": 4, "lambda": [-1, 5e-16, 0.5, 2],
            "mu": [{"value": 0, "sigma": -1}, {"value": 1e-15, "sigma": -1}, {"value": 1, "sigma": -1}]}"#,
    );
    assert_eq!(code(&run(&["validate", &s])), 0);
    let out = run(&["inverse", &s]);
    assert_eq!(code(&out), 5, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn validate_reports() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "ok.json", SPECTRA_DOUBLED);
    let out = run(&["validate", &ok]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"N": 3, "site": 2, "lambda": [-1.4142135623730951, 0.0, 1.4142135623730951],
            "mu": [{"value": 0.0, "sigma": -1}, {"value": 0.5, "sigma": 1}]}"#,
    );
    let out = run(&["validate", &bad]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stdout).contains("rule d"));
}

#[test]
fn eig_and_measure() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"b": [0, 0, 0], "a": [1, 1]}"#);
    let out = run(&["eig", &m]);
    assert_eq!(code(&out), 0);
    let e = floats(&json(&out)["eigenvalues"]);
    let want = [-std::f64::consts::SQRT_2, 0.0, std::f64::consts::SQRT_2];
    assert!(e.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-12));

    let out = run(&["eig", &m, "--anchor", "first"]);
    assert_eq!(code(&out), 0);
    let w = floats(&json(&out)["weights"]);
    assert!(w
        .iter()
        .zip([0.25, 0.5, 0.25])
        .all(|(x, y)| (x - y).abs() < 1e-12));
}

#[test]
fn roundtrip_harness() {
    let out = run(&[
        "roundtrip",
        "--size",
        "8",
        "--site",
        "all",
        "--trials",
        "100",
        "--tol",
        "1e-8",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("summary: trials 100 max"));

    let out = run(&[
        "roundtrip",
        "--size",
        "1",
        "--trials",
        "1",
        "--tol",
        "1e-12",
    ]);
    assert_eq!(code(&out), 0);

    let out = run(&["roundtrip", "--size", "8", "--trials", "3", "--tol", "0"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL seed 0 trial"));
}

#[test]
fn roundtrip_is_deterministic() {
    let args = [
        "roundtrip",
        "--size",
        "6",
        "--trials",
        "10",
        "--seed",
        "99",
        "--site",
        "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn files_are_byte_identical_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"b": [0.3, -0.2, 0.5, 0.1, -0.7], "a": [1.0, 0.7, 1.4, 0.9]}"#,
    );
    let s1 = dir.path().join("s1.json");
    let s2 = dir.path().join("s2.json");
    let back = dir.path().join("back.json");
    for s in [&s1, &s2] {
        let out = run(&["forward", &m, "--site", "3", "-o", s.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&s1).unwrap(), fs::read(&s2).unwrap());

    let out = run(&[
        "inverse",
        s1.to_str().unwrap(),
        "--output",
        back.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let orig: Value = serde_json::from_str(&fs::read_to_string(&m).unwrap()).unwrap();
    let got: Value = serde_json::from_str(&fs::read_to_string(&back).unwrap()).unwrap();
    for key in ["b", "a"] {
        for (x, y) in floats(&orig[key]).iter().zip(floats(&got[key])) {
            assert!((x - y).abs() < 1e-10, "{key}: {x} vs {y}");
        }
    }
}
