use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ordspace::census::{enumerate_spaces, CensusOptions, Filter};
use ordspace::euclid::realize_simplex;
use ordspace::io::parse_rank_matrix;
use ordspace::line::embed_line;
use ordspace::orddist::d_ord;
use ordspace::space::random_space;
use ordspace::{ball_set, canonical_form, hasse, hasse_isomorphic, Guard, OrdinalSpace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> OrdinalSpace {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_rank_matrix(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn spaces(n: usize, levels: u32, count: usize) -> Vec<OrdinalSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..count).map(|_| random_space(&mut rng, n, levels)).collect()
}

fn isomorphism(c: &mut Criterion) {
    let eight = spaces(8, 4, 16);
    c.bench_function("canonical_form n=8", |b| {
        b.iter(|| eight.iter().for_each(|s| {
            black_box(canonical_form(black_box(s), Guard::default()).unwrap());
        }))
    });
    let table = fixture("balls_29.ord");
    let h = hasse(&ball_set(&table));
    c.bench_function("hasse_isomorphic table", |b| {
        b.iter(|| hasse_isomorphic(black_box(&h), &h, Guard::default()).unwrap())
    });
}

fn embeddings(c: &mut Criterion) {
    let seven = fixture("seven_point.ord");
    c.bench_function("embed_line seven-point (negative)", |b| {
        b.iter(|| embed_line(black_box(&seven), Guard::default()).unwrap())
    });
    let simplex = spaces(7, 21, 8);
    c.bench_function("realize_simplex n=7", |b| {
        b.iter(|| simplex.iter().for_each(|s| {
            black_box(realize_simplex(black_box(s)).unwrap());
        }))
    });
}

fn distances(c: &mut Criterion) {
    let six = spaces(6, 5, 2);
    c.bench_function("d_ord n=6", |b| b.iter(|| d_ord(black_box(&six[0]), &six[1], Guard::default()).unwrap()));
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("all n=4", |b| {
        b.iter(|| enumerate_spaces(black_box(4), Filter::All, CensusOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, isomorphism, embeddings, distances, census);
criterion_main!(benches);
