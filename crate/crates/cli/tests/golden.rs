//! Byte-for-byte comparison of CLI output with checked-in files. Set
//! `UPDATE_GOLDEN=1` to rewrite them after an intended change.

use std::path::PathBuf;

use clap::Parser;
use ordspace_cli::{run, Cli, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn invoke(args: &str) -> Output {
    // fixture paths are relative to the workspace root
    let mut argv = vec!["ordspace".to_string()];
    for a in args.split_whitespace() {
        if a.starts_with("fixtures/") {
            argv.push(root().join(a).to_string_lossy().into_owned());
        } else {
            argv.push(a.to_string());
        }
    }
    run(&Cli::try_parse_from(argv).expect("arguments parse"))
}

fn golden(name: &str, args: &str, code: i32) -> String {
    let out = invoke(args);
    assert_eq!(out.code, code, "{args}: {}", out.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(out.stdout, want, "{args}");
    out.stdout
}

#[test]
fn balls_of_the_table() {
    let out = golden("balls_table.txt", "balls fixtures/balls_29.ord", 0);
    let mut lines = out.lines().skip(1);
    assert_eq!(lines.next(), Some("29"));
    assert_eq!(lines.count(), 29);
}

#[test]
fn figure_one_iso() {
    let out = golden("iso_fig1.txt", "iso fixtures/twins_X.ord fixtures/twins_Y.ord", 1);
    assert!(out.contains("not isomorphic; Hasse diagrams isomorphic: yes"));
}

#[test]
fn two_maximal_sides_do_not_embed() {
    let out = golden("embed1d_two_max.txt", "embed1d fixtures/3pt_two_max.ord", 1);
    assert!(out.contains("obstruction:"));
}

#[test]
fn chain_embeds() {
    golden("embed1d_chain.txt", "embed1d fixtures/chain3.ord", 0);
}

#[test]
fn hasse_dot() {
    let out = golden("hasse_intervals_4.dot", "hasse --dot fixtures/intervals_4.ord", 0);
    assert!(out.starts_with("digraph hasse {"));
    assert_eq!(invoke("--format dot hasse fixtures/intervals_4.ord").stdout, out);
}

#[test]
fn hasse_text() {
    golden("hasse_twins_X.txt", "hasse fixtures/twins_X.ord", 0);
}

#[test]
fn four_point_case() {
    golden("four_point_d13.txt", "t10 fixtures/four_point/d13.ord", 0);
    golden("four_point_square.txt", "t10 fixtures/square.ord", 1);
}

#[test]
fn ordinal_distance_json() {
    let out = golden("dord_json.txt", "--format json dord --oracle fixtures/chain3.ord fixtures/3pt_two_max.ord", 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["d_ord"], 1);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["version"], ordspace_cli::VERSION);
    assert_eq!(v["seed"], 0);
}

#[test]
fn planar_check() {
    golden("check_r2_all_equal_5.txt", "check-r2 fixtures/all_equal_5.ord", 1);
    golden("check_r2_square.txt", "check-r2 fixtures/square.ord", 0);
}

#[test]
fn comparisons() {
    golden("validate_chain.txt", "validate fixtures/chain3.cmp", 0);
    golden("validate_cycle.txt", "validate fixtures/cycle3.cmp", 1);
}

#[test]
fn distance_csv() {
    golden("ordtype_twins_Y.txt", "ordtype fixtures/twins_Y.csv", 0);
}

#[test]
fn heuristic_is_seeded() {
    let a = golden("embednd_square.txt", "--seed 5 embednd --dim 2 fixtures/square.ord", 0);
    assert!(a.contains("seed=5"));
    assert_eq!(invoke("--seed 5 embednd --dim 2 fixtures/square.ord").stdout, a);
}

#[test]
fn census_three() {
    golden("census_3.txt", "census --n 3", 0);
    golden("census_4_injective.json", "--format json census --n 4 --filter injective", 0);
}

#[test]
fn subset_probe() {
    golden("menger_seven_point.txt", "menger-probe --dim 1 fixtures/seven_point.ord", 0);
}
