use std::process::{Command, Output};

use serde_json::Value;

fn hsw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hsw")).args(args).env("HSW_THREADS", "2").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = hsw(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn length_of_omega() {
    assert_eq!(stdout(&["--datum", "A1", "length", "--w", "s", "--lambda", "-1"]).trim(), "0");
    let v = json(&["length", "--w", "s", "--lambda", "-1"]);
    assert_eq!(v["verb"], "length");
    assert_eq!(v["length"], 0);
}

#[test]
fn canonical_basis_text() {
    assert_eq!(stdout(&["canonical-basis", "--lambda", "2"]).trim(), "m(2) + (v^-1)m(-2) + (v^-2)m(0)");
}

#[test]
fn decompose_s0_s() {
    let v = json(&["decompose", "--omega", "0", "--word", "s0,s"]);
    let d = &v["decomposition"];
    assert_eq!(d["characteristic"], 0);
    let got: Vec<(Value, Value)> =
        d["summands"].as_array().unwrap().iter().map(|s| (s["lambda"].clone(), s["multiplicity"].clone())).collect();
    assert_eq!(got.len(), 2);
    assert!(got.iter().all(|(_, m)| m == &serde_json::json!({"0": 1})));
}

#[test]
fn kato_a2_passes() {
    let v = json(&["--datum", "A2", "kato-check", "--max-length", "4"]);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["pass"] == true && r["lhs"] == r["rhs"]));
}

#[test]
fn oracle_check_a1() {
    let v = json(&["oracle-check"]);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 36);
    assert!(rows.iter().all(|r| r["oracle"] == r["predicted"]));
    let one = json(&["oracle-check", "--left-word", "s0", "--right-word", "s"]);
    assert_eq!(one["rows"][0]["oracle"], serde_json::json!({"0": 1, "2": 1}));
}

#[test]
fn verify_a1() {
    let v = json(&["verify"]);
    assert_eq!(v["pass"], true);
    assert!(stdout(&["verify"]).lines().count() > 1);
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["--output", "json", "--datum", "B2", "theta", "--lambda", "-1,1"][..],
        &["--output", "json", "--datum", "A2", "canonical-basis", "--lambda", "-2,1"],
        &["--output", "json", "--datum", "A2", "kato-check", "--max-length", "3"],
        &["--output", "json", "oracle-check", "--cutoff", "12"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn datum_from_file() {
    let d = hsw_core::RootDatum::preset("A2").unwrap();
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("a2.json");
    std::fs::write(&path, serde_json::to_string_pretty(&d.to_block()).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    let args = |datum| ["--output", "json", "--datum", datum, "q-analogue", "--eta", "1,1", "--chi", "0,0"];
    let from_file: Value = serde_json::from_str(&stdout(&args(path))).unwrap();
    let preset: Value = serde_json::from_str(&stdout(&args("A2"))).unwrap();
    assert_eq!(from_file["q_analogue"], preset["q_analogue"]);
    assert_eq!(preset["q_analogue"], serde_json::json!({"1": 1, "2": 1}));
    assert_eq!(preset["multiplicity"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(hsw(&["--datum", "nope", "length", "--w", "e", "--lambda", "0"]).status.code(), Some(2));
    assert_eq!(hsw(&["length", "--w", "s", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(hsw(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(hsw(&["oracle-check", "--cutoff", "7"]).status.code(), Some(2));
    let out = hsw(&["oracle-check", "--cutoff", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}
