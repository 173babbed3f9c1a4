// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

fn lgkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgkit")).args(args).env_remove("LGKIT_NMAX").output().expect("spawn lgkit")
}

fn csv_rows(out: &Output) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    (header, rows)
}

fn at_origin(rows: &[Vec<f64>]) -> &[f64] {
    rows.iter().find(|r| r[0] == 0.0 && r[1] == 0.0).expect("grid has an origin node")
}

#[test]
fn mode_examples() {
    let out = lgkit(&["mode", "--n", "0", "--l", "0", "--plane", "eta", "--extent", "3", "--res", "8"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["x", "y", "re", "im", "abs2"]);
    assert_eq!(rows.len(), 64);
    assert_eq!(at_origin(&rows)[2], 1.0);
    // row-major, y fastest
    assert_eq!((rows[0][0], rows[0][1]), (-3.0, -3.0));
    assert_eq!((rows[1][0], rows[1][1]), (-3.0, -2.25));

    let out = lgkit(&["mode", "--n", "2", "--l", "2", "--plane", "eta", "--res", "8"]);
    let (_, rows) = csv_rows(&out);
    assert_eq!(at_origin(&rows)[4], 0.0);
}

#[test]
fn wigner_examples() {
    let (header, rows) = csv_rows(&lgkit(&["wigner", "--n", "0", "--l", "0", "--res", "8"]));
    assert_eq!(header, ["a", "b", "w"]);
    assert!((at_origin(&rows)[2] - 1.0 / (PI * PI)).abs() < 1e-15);
    let (_, rows) = csv_rows(&lgkit(&["wigner", "--n", "1", "--l", "1", "--res", "8"]));
    assert!((at_origin(&rows)[2] + 1.0 / (PI * PI)).abs() < 1e-15);

    let out = lgkit(&["wigner", "--n", "2", "--l", "0", "--res", "8", "--extent", "1.2", "--oracle"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["a", "b", "w", "w_bruteforce", "delta"]);
    assert_eq!(rows.len(), 64);
    let worst = rows.iter().map(|r| r[4].abs()).fold(0.0, f64::max);
    assert!(worst < 1e-8, "{worst}");
}

#[test]
fn marginal_frft_gwt_examples() {
    let (_, rows) = csv_rows(&lgkit(&["marginal", "--n", "0", "--l", "0"]));
    assert!((at_origin(&rows)[2] - 1.0 / PI).abs() < 1e-15);

    let out = lgkit(&["frft", "--n", "2", "--l", "0", "--alpha", "0.7"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["tau1", "tau2", "re", "im", "residual", "fitted_phase", "expected_phase"]);
    assert!((rows[0][5] + 1.4).abs() < 1e-6);
    assert!(rows.iter().all(|r| r[4] < 1e-5));

    let (_, rows) = csv_rows(&lgkit(&["gwt", "--m", "1", "--n", "3"]));
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r[4] < 1e-6));
}

#[test]
fn marginal_oracle_columns() {
    let out = lgkit(&["marginal", "--n", "2", "--l", "2", "--res", "8", "--extent", "1.5", "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["x", "y", "marginal", "overlap", "quadrature", "delta"]);
    assert!(rows.iter().all(|r| r[5] < 1e-5));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| lgkit(args).status.code().unwrap();
    assert_eq!(code(&["mode", "--n", "1", "--l", "0"]), 2);
    assert_eq!(code(&["mode", "--n", "0", "--l", "0", "--res", "4"]), 2);
    assert_eq!(code(&["gwt", "--m", "3", "--n", "1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["mode", "--n", "0", "--l", "0", "--out", "/nonexistent-dir/x.csv"]), 3);
    assert_eq!(code(&["wigner", "--n", "4", "--l", "0", "--oracle", "--nmax", "6"]), 4);
    assert_eq!(code(&["frft", "--n", "1", "--l", "1", "--alpha", "3.14159"]), 5);
    assert_eq!(code(&["frft", "--n", "1", "--l", "1", "--alpha", "0.01"]), 5);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn nmax_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_lgkit"));
        cmd.args(["wigner", "--n", "4", "--l", "0", "--oracle", "--res", "8", "--extent", "1"]);
        cmd.env_remove("LGKIT_NMAX");
        if let Some(e) = env {
            cmd.env("LGKIT_NMAX", e);
        }
        if let Some(f) = flag {
            cmd.args(["--nmax", f]);
        }
        cmd.output().unwrap().status.code().unwrap()
    };
    // the default cutoff of 32 is enough, 6 is not
    assert_eq!(run(None, None), 0);
    assert_eq!(run(Some("6"), None), 4);
    assert_eq!(run(Some("6"), Some("32")), 0);
    assert_eq!(run(None, Some("6")), 4);
    assert_eq!(run(Some("not-a-number"), None), 2);
}

#[test]
fn json_format() {
    let out = lgkit(&["--format", "json", "mode", "--n", "1", "--l", "1", "--res", "8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 64);
    let keys: Vec<_> = rows[0].as_object().unwrap().keys().cloned().collect();
    for k in ["x", "y", "re", "im", "abs2"] {
        assert!(keys.iter().any(|c| c == k), "{k}");
    }
}

fn check_report_schema(v: &serde_json::Value) {
    let obj = v.as_object().unwrap();
    let mut keys: Vec<_> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["checks", "pass", "suite"]);
    let checks = v["checks"].as_array().unwrap();
    for c in checks {
        let mut keys: Vec<_> = c.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["anchor", "id", "ms", "pass", "residual", "tol"]);
        assert!(c["id"].is_string() && c["anchor"].is_string() && c["pass"].is_boolean());
        assert!(c["tol"].is_number() && c["ms"].is_number());
        assert!(c["residual"].is_number() || c["residual"].is_null());
    }
    let all = checks.iter().all(|c| c["pass"].as_bool().unwrap());
    assert_eq!(v["pass"].as_bool().unwrap(), all);
}

#[test]
fn verify_fock_suite() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = lgkit(&["verify", "--suite", "fock", "--json-out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    check_report_schema(&v);
    assert_eq!(v["suite"], "fock");
    assert!(v["checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn verify_failure_exit_code() {
    // a cutoff below the largest eigen-check photon number makes the fock suite fail
    let out = lgkit(&["--nmax", "4", "verify", "--suite", "fock"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    check_report_schema(&v);
    assert_eq!(v["pass"], false);
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    assert!(lgkit(&full).status.success());
    std::fs::read(path).unwrap()
}

#[test]
fn outputs_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let req: &[&[&str]] = &[
        &["mode", "--n", "3", "--l", "-1", "--plane", "tau", "--res", "16"],
        &["wigner", "--n", "2", "--l", "2", "--axes", "x1x2", "--p1", "0.3", "--res", "16"],
        &["--format", "json", "marginal", "--n", "2", "--l", "0", "--res", "8"],
    ];
    for (i, args) in req.iter().enumerate() {
        let a = run_to(dir.path(), &format!("a{i}"), args);
        let b = run_to(dir.path(), &format!("b{i}"), args);
        assert!(!a.is_empty());
        assert_eq!(a, b, "request {args:?}");
    }
}
