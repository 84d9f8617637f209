#![allow(dead_code)]

use std::path::PathBuf;

use ordspace::io::parse_rank_matrix;
use ordspace::rational::int;
use ordspace::{ordinal_type, DistanceMatrix, OrdinalSpace};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> OrdinalSpace {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    parse_rank_matrix(&text).expect("fixture parses")
}

pub fn line(points: &[i64]) -> OrdinalSpace {
    let c: Vec<_> = points.iter().map(|&p| int(p)).collect();
    ordinal_type(&DistanceMatrix::from_line(&c).unwrap())
}

pub fn space(n: usize, pair_ranks: &[u32]) -> OrdinalSpace {
    OrdinalSpace::from_pair_ranks(n, pair_ranks).unwrap()
}
