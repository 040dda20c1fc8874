use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurkit")).args(args).env_remove("SCHURKIT_BUDGET").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn probability(report: &Value, lambda: &[u64]) -> f64 {
    report["distribution"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["lambda"] == serde_json::json!(lambda))
        .map_or(0.0, |e| e["p"].as_f64().unwrap())
}

#[test]
fn enumerate_examples() {
    assert_eq!(json(&["enumerate", "syt", "--shape", "2,1"]).as_array().unwrap().len(), 2);
    assert_eq!(json(&["enumerate", "ssyt", "--shape", "2,2", "--content", "2,2"]).as_array().unwrap().len(), 1);
    assert_eq!(json(&["enumerate", "partitions", "--n", "0"]), serde_json::json!([[]]));
    assert_eq!(run(&["enumerate", "syt", "--shape", "1,2"]).status.code(), Some(2));
}

#[test]
fn qft_sn_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let out = run(&["transform", "qft-sn", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let u: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let want = [[h, h], [h, -h]];
    // Row-major list of [re, im] pairs.
    for (k, z) in u["data"].as_array().unwrap().iter().enumerate() {
        assert!((z[0].as_f64().unwrap() - want[k / 2][k % 2]).abs() < 1e-12);
        assert!(z[1].as_f64().unwrap().abs() < 1e-12);
    }
    let sidecar = dir.path().join("f.json.blocks.json");
    let blocks: Value = serde_json::from_str(&std::fs::read_to_string(sidecar).unwrap()).unwrap();
    assert_eq!(blocks["total_dim"], 2);
}

#[test]
fn dual_schur_is_unitary() {
    let v = json(&["transform", "dual-schur", "--n", "2", "--d", "2"]);
    let flat: Vec<(f64, f64)> =
        v["unitary"]["data"].as_array().unwrap().iter().map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap())).collect();
    assert_eq!(flat.len(), 16);
    let data: Vec<&[(f64, f64)]> = flat.chunks(4).collect();
    for i in 0..4 {
        for j in 0..4 {
            let (mut re, mut im) = (0.0, 0.0);
            for k in 0..4 {
                let (a, b) = data[k][i];
                let (c, d) = data[k][j];
                re += a * c + b * d;
                im += a * d - b * c;
            }
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((re - want).abs() < 1e-9 && im.abs() < 1e-9);
        }
    }
}

#[test]
fn budget_error() {
    let out = run(&["transform", "dual-schur", "--n", "10", "--d", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn budget_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(["transform", "dual-schur", "--n", "2", "--d", "2"])
        .env("SCHURKIT_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_basis_states() {
    let dir = tempfile::tempdir().unwrap();
    let state = |name: &str, amps: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, format!(r#"{{"n":2,"d":2,"amps":{amps}}}"#)).unwrap();
        p.to_str().unwrap().to_string()
    };
    let s00 = state("00.json", "[[1,0],[0,0],[0,0],[0,0]]");
    let r = json(&["apply", "--state", &s00, "--n", "2", "--d", "2"]);
    assert!((probability(&r, &[2]) - 1.0).abs() < 1e-12);
    let s01 = state("01.json", "[[0,0],[1,0],[0,0],[0,0]]");
    let r = json(&["apply", "--state", &s01]);
    assert!((probability(&r, &[2]) - 0.5).abs() < 1e-12);
    assert!((probability(&r, &[1, 1]) - 0.5).abs() < 1e-12);
    let bad = state("bad.json", "[[1,0],[1,0],[0,0],[0,0]]");
    assert_eq!(run(&["apply", "--state", &bad]).status.code(), Some(2));
    assert_eq!(run(&["apply", "--state", &s00, "--n", "3"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    for args in [
        ["--suite", "dims", "--n", "6", "--d", "4"],
        ["--suite", "schur-weyl", "--n", "4", "--d", "3"],
        ["--suite", "all", "--n", "1", "--d", "1"],
    ] {
        let mut full = vec!["verify"];
        full.extend(args);
        let r = json(&full);
        assert_eq!(r["pass"], true, "{args:?}");
        assert!(!r["records"].as_array().unwrap().is_empty());
    }
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn impossible_tolerance_fails() {
    let out = run(&["verify", "--suite", "schur-weyl", "--n", "3", "--d", "2", "--tolerance", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--n", "3", "--d", "2", "--seed", "7"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["transform", "dual-schur", "--n", "3", "--d", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
