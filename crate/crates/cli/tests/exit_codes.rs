use std::process::Command;

use serde_json::Value;

fn ordspace(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ordspace"))
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn computed_answers_exit_zero() {
    let out = ordspace(&["balls", "fixtures/chain3.ord"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("# ordspace "));
}

#[test]
fn negative_decisions_exit_one() {
    assert_eq!(ordspace(&["embed1d", "fixtures/seven_point.ord"]).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ord");
    std::fs::write(&bad, "3 2\n0 1 2\n1 0 x\n2 2 0\n").unwrap();
    let out = ordspace(&["balls", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(ordspace(&["balls", "fixtures/missing.ord"]).status.code(), Some(2));
    assert_eq!(ordspace(&["--format", "dot", "balls", "fixtures/chain3.ord"]).status.code(), Some(2));
}

#[test]
fn guards_exit_three() {
    assert_eq!(ordspace(&["census", "--n", "5"]).status.code(), Some(3));
    let out = ordspace(&["--max-points", "3", "embed1d", "fixtures/twins_X.ord"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn census_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ordspace(&["--seed", "9", "census", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 9);
    assert_eq!(v["total_nonisomorphic"], 225);
    assert_eq!(v["max_balls"]["value"], 12);
    assert_eq!(v["r1_embeddable_count"], 14);
    assert!(v["max_balls"]["witness"].as_str().unwrap().starts_with("4 "));
}

#[test]
fn jobs_flag_gives_same_answer() {
    let a = ordspace(&["--jobs", "1", "census", "--n", "4"]);
    let b = ordspace(&["--jobs", "3", "census", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
