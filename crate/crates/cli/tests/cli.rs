// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use serde_json::Value;

const FAST: &[&str] = &["--samples", "200", "--orientations", "4", "--circle-samples", "256"];

fn qcskew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcskew"))
        .args(args)
        .env_remove("QCSKEW_THREADS")
        .output()
        .expect("spawn qcskew")
}

fn json(args: &[&str]) -> Value {
    let out = qcskew(args);
    assert!(
        out.status.success(),
        "{args:?}: {}\n{}",
        String::from_utf8_lossy(&out.stderr),
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fast(args: &[&str]) -> Vec<&'static str> {
    let mut v: Vec<&'static str> = FAST.to_vec();
    v.extend(
        args.iter()
            .map(|s| -> &'static str { Box::leak(s.to_string().into_boxed_str()) }),
    );
    v
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn report_envelope() {
    let v = json(&["linear", "--mu", "0.5", "--oracle-grid", "1000"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool"]["name"], "qcskew");
    assert_eq!(v["command"], "linear");
    assert_eq!(v["passed"], true);
    assert!(v["failures"].as_array().unwrap().is_empty());
    assert!(v["timings"]["total_seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(v["config"]["common"]["seed"], 1);
    let tau = v["results"]["linear"]["tau"].as_f64().unwrap();
    assert!((tau - 2.6822257700311987).abs() < 1e-12);
}

#[test]
fn linear_from_tau() {
    let v = json(&["linear", "--tau", "2", "--oracle-grid", "1000"]);
    let mu = v["results"]["linear"]["mu"].as_f64().unwrap();
    assert!((mu - 0.3728246932726952).abs() < 1e-12);
    assert!(!qcskew(&["linear", "--mu", "0.5", "--tau", "2"]).status.success());
}

#[test]
fn lattice_small_and_pq() {
    let v = json(&["lattice", "--k", "1"]);
    assert_eq!(v["results"]["triangles"], 4);
    assert_eq!(v["results"]["edges"], 9);
    let v = json(&["lattice", "--k", "9", "--check-pq"]);
    assert_eq!(v["results"]["p"], serde_json::json!([171, 170]));
    assert_eq!(v["results"]["q"], serde_json::json!([172, 170]));
    assert_eq!(v["passed"], true);
}

#[test]
fn lattice_chain_for_affine() {
    let v = json(&["lattice", "--k", "3", "--map", "affine:0.5", "--pairs", "200"]);
    let chain = &v["results"]["chain"];
    assert_eq!(chain["pairs"], 200);
    assert!((chain["sigma_measured"].as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn constants_render() {
    let v = json(&["constants"]);
    assert_eq!(v["results"]["constants"]["h"], "5.566277615616e12");
    let v = json(&["constants", "--N", "1", "--verify-geometry"]);
    let log_h = v["results"]["constants"]["log_h"].as_f64().unwrap();
    assert!((log_h - 81f64.ln()).abs() < 1e-12);
}

#[test]
fn highdim_construct_b() {
    let v = json(&["highdim", "--construct-b", "--a", "0,1"]);
    let b: Vec<f64> = serde_json::from_value(v["results"]["b"].clone()).unwrap();
    assert!((b[0] - 0.5).abs() < 1e-12);
    assert!((b[1] - 0.5).abs() < 1e-12);
    assert!((b[2] - 0.5f64.sqrt()).abs() < 1e-12);
    let out = qcskew(&["highdim", "--construct-b", "--a", "-0.9,0.43588989435406733"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn highdim_diag() {
    let v = json(&fast(&["highdim", "--map", "diag:1,1,0.5"]));
    let h = v["results"]["h_hat"].as_f64().unwrap();
    assert!((h - 2.0).abs() < 0.05, "{h}");
}

#[test]
fn failing_check_exits_two() {
    let out = qcskew(&fast(&["highdim", "--map", "diag:1,1,0.5", "--tol=-0.9"]));
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAILED"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(qcskew(&["nonsense"]).status.code(), Some(1));
    assert_eq!(qcskew(&["skew-scan", "--map", "circle"]).status.code(), Some(1));
    assert_eq!(
        qcskew(&["skew-scan", "--map", "grid:/no/such/file.json"]).status.code(),
        Some(1)
    );
    assert_eq!(qcskew(&["highdim", "--map", "identity"]).status.code(), Some(1));
    assert_eq!(qcskew(&["lattice", "--k", "40"]).status.code(), Some(1));
}

#[test]
fn grid_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("affine.json");
    let p = path.to_str().unwrap();
    json(&[
        "sample-grid",
        "--map",
        "affine:0.5",
        "--domain",
        "-1,-1,1,1",
        "--nx",
        "9",
        "--ny",
        "9",
        "--to",
        p,
    ]);
    let spec = format!("grid:{p}");
    let region = ["--region", "disk:0,0,0.5"];
    let g = json(&fast(&[&["skew-scan", "--map", &spec][..], &region[..]].concat()));
    let a = json(&fast(
        &[&["skew-scan", "--map", "affine:0.5"][..], &region[..]].concat(),
    ));
    let (g, a) = (
        g["results"]["skew"]["estimate"].as_f64().unwrap(),
        a["results"]["skew"]["estimate"].as_f64().unwrap(),
    );
    assert!((g - a).abs() < 1e-9, "{g} vs {a}");
    let d = json(&fast(&["dilatation", "--map", &spec]));
    assert!(d["results"]["orientation"].is_object());
}

#[test]
fn csv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.csv");
    let out = qcskew(&fast(&[
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
        "dilatation",
        "--map",
        "affine:0.5",
    ]));
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("table,radius,value,samples,unreliable"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().any(|r| r.starts_with("h,")) && rows.iter().any(|r| r.starts_with("kf,")));
}

#[test]
fn thread_count_does_not_change_results() {
    let base = fast(&["skew-scan", "--map", "square"]);
    let one = json(&[&["--threads", "1"][..], &base[..]].concat());
    let four = json(&[&["--threads", "4"][..], &base[..]].concat());
    assert_eq!(without_timings(one.clone()), without_timings(four));
    let out = Command::new(env!("CARGO_BIN_EXE_qcskew"))
        .args(&base)
        .env("QCSKEW_THREADS", "3")
        .output()
        .unwrap();
    let env: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(without_timings(one), without_timings(env));
}

#[test]
fn seed_changes_the_sample() {
    let a = json(&fast(&["--seed", "1", "skew-scan", "--map", "square"]));
    let b = json(&fast(&["--seed", "2", "skew-scan", "--map", "square"]));
    assert_ne!(a["results"]["skew"]["estimate"], b["results"]["skew"]["estimate"]);
}
