use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn horace(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_horace"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn dim_presets() {
    let (code, v) = horace(&["dim", "--preset", "quintic_intro"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 11);
    assert_eq!(v["prime"], 2147483647u64);
    assert_eq!(v["seed"], 0);

    let (code, v) = horace(&[
        "dim",
        "--preset",
        "sextic_intro",
        "--seed",
        "5",
        "--prime",
        "1000003",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 12);
    assert_eq!(
        (v["seed"].as_u64(), v["prime"].as_u64()),
        (Some(5), Some(1000003))
    );

    let (code, v) = horace(&["dim", "--preset", "conic_special"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["dimension"].as_i64(), v["virtual_dimension"].as_i64()),
        (Some(0), Some(-1))
    );
}

#[test]
fn certify_and_replay() {
    let path = scratch("sextic_cert.json");
    let (code, v) = horace(&[
        "certify",
        "--preset",
        "sextic_intro",
        "--slices",
        "3,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "proven");
    assert_eq!(v["claimed_dimension"], 12);
    let hyps = &v["steps"][0]["hypotheses"];
    assert_eq!(
        (hyps[0]["dim_lhs"].as_i64(), hyps[0]["dim_rhs"].as_i64()),
        (Some(17), Some(17))
    );
    assert_eq!(hyps[1]["dim_lhs"], hyps[1]["dim_rhs"]);

    let (code, r) = horace(&["certify", "--replay", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["reproduced"], true);
    assert_eq!(r["certificate"], v);

    let mut forged = v.clone();
    forged["leaf"]["dimension"] = 3.into();
    let forged_path = scratch("forged_cert.json");
    fs::write(&forged_path, forged.to_string()).unwrap();
    let (code, r) = horace(&["certify", "--replay", forged_path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r["reproduced"], false);
}

#[test]
fn non_proofs_exit_two() {
    let (code, v) = horace(&["certify", "--preset", "conic_special"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "inconclusive");

    let (code, v) = horace(&["certify", "--preset", "quintic_intro", "--slices", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "hypothesis_failed");
}

#[test]
fn spec_files() {
    let path = scratch("spec.json");
    fs::write(
        &path,
        r#"{"n": 2, "d": 4, "seed": 3, "schemes": [
            {"staircase": [[0,0],[1,0],[0,1]], "position": "generic"},
            {"staircase": [[0,0],[1,0],[0,1]], "position": "generic"}
        ]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = horace(&["dim", "--spec", p]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["dimension"].as_i64(), v["seed"].as_u64()),
        (Some(8), Some(3))
    );
    let (code, v) = horace(&["oracle", "--spec", p]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
    let (code, _) = horace(&["certify", "--spec", p]);
    assert_eq!(code, 0);
}

#[test]
fn slices_report() {
    let (code, v) = horace(&["slices", "--preset", "sextic_intro", "--slices", "3,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 6);
    assert_eq!(
        v["removed"]["staircase"],
        serde_json::json!([[0, 0], [0, 1]])
    );
    assert_eq!(v["removed"]["degree_identity_holds"], true);
    let (code, v) = horace(&["slices", "--staircase", "[[0,0],[1,0]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["max_height"], 2);
}

#[test]
fn selftest_passes() {
    let (code, v) = horace(&["selftest"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_passed"], true);
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(horace(&["dim"]).0, 1);
    assert_eq!(horace(&["dim", "--preset", "nonsense"]).0, 1);
    assert_eq!(
        horace(&["dim", "--preset", "quintic_intro", "--prime", "100"]).0,
        1
    );
    assert_eq!(horace(&["dim", "--spec", "/nonexistent.json"]).0, 1);
    assert_eq!(
        horace(&["certify", "--preset", "sextic_intro", "--slices", "1,3"]).0,
        1
    );
    assert_eq!(horace(&["frobnicate"]).0, 1);
}
