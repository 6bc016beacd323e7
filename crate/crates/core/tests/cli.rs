use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qrelcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrelcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_code(out: &Output) -> String {
    let line = String::from_utf8_lossy(&out.stderr);
    let v: Value = serde_json::from_str(line.lines().last().unwrap()).unwrap();
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn entropies_of_mixed_pair() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"rho": {"diag": [0.9, 0.1]}, "sigma": {"diag": [0.75, 0.25]}}"#,
    );
    let out = qrelcode(&["entropies", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["result"]["relative_entropy"].as_f64().unwrap() - 0.104538).abs() < 1e-6);
    assert!((v["result"]["s_rho"].as_f64().unwrap() - 0.4689955935892812).abs() < 1e-12);

    let cfg = write(
        dir.path(),
        "m.json",
        r#"{"rho": "maximally_mixed", "sigma": "maximally_mixed"}"#,
    );
    let v = json(&qrelcode(&["entropies", "--config", &cfg]));
    assert_eq!(v["result"]["s_rho"].as_f64(), Some(1.0));
    assert_eq!(v["result"]["relative_entropy"].as_f64(), Some(0.0));
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.json", "{\"rho\": ");
    let out_path = dir.path().join("out.json");
    let out = qrelcode(&[
        "entropies",
        "--config",
        &cfg,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_code(&out), "parse");
    assert!(!out_path.exists());
}

#[test]
fn validation_errors_exit_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.csv");
    let out_arg = out_path.to_str().unwrap();
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["rate", "--n", "21"], "block_too_large"),
        (vec!["fidelity", "--n", "0"], "block_too_large"),
        (vec!["estimate", "--trials", "4"], "sample_too_short"),
        (vec!["identity", "--trials", "0"], "config"),
    ];
    for (args, code) in cases {
        let mut full = args.clone();
        full.extend(["--out", out_arg, "--format", "csv"]);
        let out = qrelcode(&full);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_code(&out), code);
        assert!(!out_path.exists());
    }
    let cfg = write(dir.path(), "psd.json", r#"{"rho": {"diag": [1.2, -0.2]}}"#);
    let out = qrelcode(&["entropies", "--config", &cfg]);
    assert_eq!(stderr_code(&out), "not_psd");
    let cfg = write(dir.path(), "mode.json", r#"{"mode": "rate"}"#);
    let out = qrelcode(&["identity", "--config", &cfg]);
    assert_eq!(stderr_code(&out), "mode_mismatch");
}

#[test]
fn identity_sweep_and_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "r.json",
        r#"{"rho": "random", "sigma": "random", "seed": 7}"#,
    );
    let out = qrelcode(&["identity", "--config", &cfg, "--trials", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["result"]["max_gap"].as_f64().unwrap() < 1e-9);
    assert!(v["result"]["max_overlap_defect"].as_f64().unwrap() < 1e-9);

    let cfg = write(
        dir.path(),
        "same.json",
        r#"{"rho": {"bloch": [0.3, -0.2, 0.5]}, "sigma": {"bloch": [0.3, -0.2, 0.5]}}"#,
    );
    let v = json(&qrelcode(&["identity", "--config", &cfg, "--trials", "1"]));
    assert!(v["result"]["gap"].as_f64().unwrap() < 1e-12);

    let cfg = write(
        dir.path(),
        "inf.json",
        r#"{"rho": "maximally_mixed", "sigma": {"bloch": [0, 0, 1]}}"#,
    );
    let out = qrelcode(&["identity", "--config", &cfg, "--trials", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["lhs"], "inf");
    assert_eq!(v["result"]["rhs"], "inf");
    assert_eq!(v["result"]["infinite_pairs"].as_u64(), Some(1));
}

#[test]
fn rate_flagship_and_matched() {
    let v = json(&qrelcode(&["rate", "--n", "16"]));
    let r = &v["result"];
    assert!((r["target"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(r["block_gap"].as_f64().unwrap() < 0.2);
    assert!(r["arith_gap"].as_f64().unwrap() < 0.02);
    assert!(r["arith_symbols"].as_u64().unwrap() >= 100_000);
    assert_eq!(r["roundtrip"], true);

    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "m.json",
        r#"{"rho": {"diag": [0.9, 0.1]}, "sigma": {"diag": [0.9, 0.1]}, "n": 12}"#,
    );
    let v = json(&qrelcode(&["rate", "--config", &cfg, "--trials", "2"]));
    let target = v["result"]["target"].as_f64().unwrap();
    assert!((target - 0.4689955935892812).abs() < 1e-12);
}

#[test]
fn fidelity_profile() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "f.json",
        r#"{"rho": {"diag": [0.9, 0.1]}, "sigma": {"diag": [0.9, 0.1]}}"#,
    );
    let v = json(&qrelcode(&["fidelity", "--config", &cfg]));
    let r = &v["result"];
    assert_eq!(r["m"].as_u64(), Some(10));
    assert!(r["fidelity"].as_f64().unwrap() >= 0.9);
    let curve: Vec<f64> = r["curve"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(curve.len(), 17);
    assert_eq!(curve[16], 1.0);
    assert!(curve.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn identical_inputs_give_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "r.json",
        r#"{"rho": "random", "sigma": "random", "n": 10, "trials": 4}"#,
    );
    for (cmd, fmt) in [("rate", "csv"), ("rate", "json"), ("identity", "json")] {
        let a = dir.path().join(format!("a.{fmt}"));
        let b = dir.path().join(format!("b.{fmt}"));
        for p in [&a, &b] {
            let out = qrelcode(&[
                cmd,
                "--config",
                &cfg,
                "--seed",
                "99",
                "--format",
                fmt,
                "--out",
                p.to_str().unwrap(),
            ]);
            assert!(out.status.code().unwrap() <= 1);
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
    let c = dir.path().join("c.csv");
    qrelcode(&[
        "rate",
        "--config",
        &cfg,
        "--seed",
        "100",
        "--format",
        "csv",
        "--out",
        c.to_str().unwrap(),
    ]);
    assert_ne!(
        std::fs::read(dir.path().join("a.csv")).unwrap(),
        std::fs::read(&c).unwrap()
    );
}

#[test]
fn json_output_round_trips_as_config() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let out = qrelcode(&[
        "fidelity",
        "--n",
        "8",
        "--seed",
        "5",
        "--out",
        first.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let second = dir.path().join("second.json");
    let out = qrelcode(&[
        "fidelity",
        "--config",
        first.to_str().unwrap(),
        "--out",
        second.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
}

#[test]
fn csv_schema_is_stable() {
    let out = qrelcode(&["rate", "--n", "6", "--trials", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "command,seed,n,trials,block_rate,target,d_plus_h,h_eta,d_eta_chi,block_gap,arith_rate,arith_gap,arith_symbols,roundtrip,passed"
    );
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row.len(), header.split(',').count());
    let target: f64 = row[5].parse().unwrap();
    assert_eq!(target, 1.0);
}

#[test]
fn estimate_separates_sources() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "e.json",
        r#"{"rho": {"diag": [0.9, 0.1]}, "sigma": "maximally_mixed", "n": 16, "trials": 8192}"#,
    );
    let v = json(&qrelcode(&["estimate", "--config", &cfg]));
    let r = &v["result"];
    assert_eq!(r["sample_len"].as_u64(), Some(1 << 17));
    assert!((r["d_true"].as_f64().unwrap() - 0.5310044064107189).abs() < 1e-12);
    assert!(r["d_hat"].as_f64().unwrap() > 0.2);
    assert!((r["s_rho_hat"].as_f64().unwrap() - 0.469).abs() < 0.02);
}
