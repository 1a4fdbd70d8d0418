//! End-to-end checks of the command surface: file formats, reports, exit
//! codes, and determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_statemap"))
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const ORTHONORMAL: &str = r#"{"dimension": 2, "a": [[1,0],[0,0]], "b": [[0,0],[1,0]]}"#;
const PHASE: &str = r#"{"dimension": 2, "a": [[1,0],[0,0]], "b": [[0,1],[0,0]]}"#;
const REAL: &str = r#"{"dimension": 2, "a": [[1,0],[0,0]], "b": [[3,0],[0,0]]}"#;

#[test]
fn map_orthonormal_pair() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let out = run(&["map", pair.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["case_tag"], "generic");
    assert!((v["theta_prime"].as_f64().unwrap() - 1.5707963267948966).abs() < 1e-12);
    assert!((v["scale"][0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v["residual_map"].as_f64().unwrap() <= 1e-12);
    assert!(v["unitarity_residual"].as_f64().unwrap() <= 1e-12);
    assert!(v["oracle_frobenius_distance"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn map_real_collinear_pair() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", REAL);
    let out = run(&["map", pair.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["case_tag"], "real_collinear");
    assert_eq!(v["theta_prime"].as_f64().unwrap(), 0.0);
    assert!((v["scale"][0].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn map_phase_collinear_pair() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", PHASE);
    let out = run(&["map", pair.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["case_tag"], "phase_collinear");
    assert!((v["theta_prime"].as_f64().unwrap() + 0.7853981633974483).abs() < 1e-12);
}

#[test]
fn map_emit_matrix_is_square() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let out = run(&["map", pair.to_str().unwrap(), "--emit-matrix"]);
    let v = stdout_json(&out);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 2);
    assert!((m[1][0][0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((m[0][1][0].as_f64().unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn map_rejects_zero_vector() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        r#"{"dimension": 2, "a": [[0,0],[0,0]], "b": [[1,0],[0,0]]}"#,
    );
    let out = run(&["map", pair.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("zero input vector"), "stderr: {msg}");
}

#[test]
fn map_rejects_dimension_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        r#"{"dimension": 2, "a": [[1,0],[0,0]], "b": [[1,0]]}"#,
    );
    let out = run(&["map", pair.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn map_exit_2_when_tolerance_unmeetable() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let out = run(&["--tolerance", "0", "map", pair.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_solved_angle_lands_on_target() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let vec = write(dir.path(), "c.json", "[[1,0],[0,0]]");
    let out = run(&["apply", pair.to_str().unwrap(), vec.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v[0][0].as_f64().unwrap().abs() < 1e-12);
    assert!((v[1][0].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn apply_theta_zero_echoes_input() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let vec = write(dir.path(), "c.json", "[[0.25,-0.5],[0.75,0.125]]");
    let out = run(&[
        "apply",
        pair.to_str().unwrap(),
        vec.to_str().unwrap(),
        "--theta",
        "0",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "[[0.25,-0.5],[0.75,0.125]]"
    );
}

#[test]
fn apply_fixed_subspace_echoes_orthogonal_vector() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        r#"{"dimension": 3, "a": [[1,0],[0,0],[0,0]], "b": [[0,0],[1,0],[0,0]]}"#,
    );
    let vec = write(dir.path(), "c.json", "[[0.0,0.0],[0.0,0.0],[0.5,-0.5]]");
    let out = run(&[
        "apply",
        pair.to_str().unwrap(),
        vec.to_str().unwrap(),
        "--theta",
        "1.3",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "[[0.0,0.0],[0.0,0.0],[0.5,-0.5]]"
    );
}

#[test]
fn apply_rejects_dimension_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let vec = write(dir.path(), "c.json", "[[1,0],[0,0],[0,0]]");
    let out = run(&["apply", pair.to_str().unwrap(), vec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_random_passes_and_is_deterministic() {
    let out1 = run(&["--seed", "7", "verify", "--random", "2,4,8", "--trials", "25"]);
    assert!(out1.status.success(), "{}", String::from_utf8_lossy(&out1.stderr));
    let out2 = run(&["--seed", "7", "verify", "--random", "2,4,8", "--trials", "25"]);
    assert_eq!(out1.stdout, out2.stdout);
    let v = stdout_json(&out1);
    assert_eq!(v["pass"], true);
    assert!(v["properties"].as_array().unwrap().len() >= 10);
}

#[test]
fn verify_phase_collinear_file_passes() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", PHASE);
    let out = run(&["verify", pair.to_str().unwrap(), "--trials", "25"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_zero_vector_file_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        r#"{"dimension": 2, "a": [[0,0],[0,0]], "b": [[1,0],[0,0]]}"#,
    );
    let out = run(&["verify", pair.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero input vector"));
}

#[test]
fn bench_smoke_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let out = run(&[
        "bench",
        "--dims",
        "2,4",
        "--trials",
        "3",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    for rec in v["records"].as_array().unwrap() {
        assert!(rec["closed_form_construct_ns"].as_u64().unwrap() > 0);
        assert!(rec["closed_form_apply_ns"].as_u64().unwrap() > 0);
        assert!(rec["dense_expm_ns"].as_u64().unwrap() > 0);
        assert!(rec["gram_schmidt_ns"].as_u64().unwrap() > 0);
    }
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with(
        "dimension,closed_form_construct_ns,closed_form_apply_ns,dense_expm_ns,gram_schmidt_ns,speedup_apply"
    ));
    assert_eq!(csv_text.lines().count(), 3);
}

#[test]
fn bench_rejects_empty_and_undersized_dims() {
    let out = run(&["bench", "--dims", ""]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["bench", "--dims", "1,4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_output_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.json", ORTHONORMAL);
    let report = dir.path().join("report.json");
    let out = run(&[
        "map",
        pair.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["branch"], "short");
}
