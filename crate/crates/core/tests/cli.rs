use std::process::{Command, Output};

use serde_json::Value;

fn twobridge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = twobridge(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn invariants_report() {
    let (code, v) = json(&["--json", "invariants", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["generator_count"], 3);
    assert_eq!(v["det"], 3);
    assert_eq!(v["lens_space"], "L(3,1)");
    assert_eq!(v["R"], serde_json::json!({"num": 1, "den": 1}));
    assert_eq!(v["r"], serde_json::json!({"num": 3, "den": 2}));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = twobridge(&["--json", "invariants", "3,1,2"]);
    let b = twobridge(&["--json", "invariants", "3,1,2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = twobridge(&["--json", "verify", "--max-sum", "7"]);
    let b = twobridge(&["--json", "verify", "--max-sum", "7", "--serial"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes_partition_failures() {
    let (code, v) = json(&["--json", "invariants", "2,-2"]);
    assert_eq!((code, v["error"].as_str()), (2, Some("parse")));
    let (code, v) = json(&["--json", "invariants", "2,2,2"]);
    assert_eq!((code, v["error"].as_str()), (3, Some("link")));
    assert_eq!(twobridge(&["invariants", "x"]).status.code(), Some(2));
    assert_eq!(twobridge(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_summary_line() {
    let out = twobridge(&["verify", "--max-sum", "10", "--max-len", "5", "--signs", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim().ends_with("cases, 0 failures"), "{text}");
    let out = twobridge(&["verify", "--max-sum", "0"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0 cases, 0 failures");
}

#[test]
fn sum_and_mirror_verdicts() {
    let (code, v) = json(&["--json", "sum", "3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["r_total"], serde_json::json!({"num": 3, "den": 1}));
    assert_eq!(v["sum"]["det"], "9");
    let (code, v) = json(&["--json", "mirror", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["mirror"]["r"], serde_json::json!({"num": -3, "den": 2}));
    assert_eq!(v["antisymmetric"], true);
    let (code, v) = json(&["--json", "mirror", ""]);
    assert_eq!(code, 0);
    assert_eq!(v["mirror"]["sigma"], 0);
}

#[test]
fn pd_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.pd");
    let p = path.to_str().unwrap();
    assert_eq!(twobridge(&["pd", "export", p, "--knot", "3"]).status.code(), Some(0));
    let (code, v) = json(&["--json", "pd", "import", p]);
    assert_eq!(code, 0);
    assert_eq!(v["sigma"], 2);
    assert_eq!(v["det"], "3");
    assert_eq!(v["w"], -3);
}

#[test]
fn pd_import_hand_written() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    };
    // Right-handed trefoil: the mirror of the plat of σ_2^3.
    let right = write("right.pd", "Xp 1,5,2,4\nXp 3,1,4,6\nXp 5,3,6,2\n");
    let (code, v) = json(&["--json", "pd", "import", &right]);
    assert_eq!(code, 0);
    assert_eq!((v["sigma"].as_i64(), v["w"].as_i64()), (Some(-2), Some(3)));
    let (_, plat) = json(&["--json", "invariants", "-3"]);
    assert_eq!(v["sigma"], plat["sigma"]);

    let hopf = write("hopf.pd", "Xp 1,3,2,4\nXp 3,1,4,2\n");
    assert_eq!(twobridge(&["pd", "import", &hopf]).status.code(), Some(3));
    let bad = write("bad.pd", "Xq 1,2,3\n");
    assert_eq!(twobridge(&["pd", "import", &bad]).status.code(), Some(2));
}
