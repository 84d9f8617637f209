mod common;

use common::fixture;
use ordspace::census::{enumerate_spaces, CensusOptions, Filter};
use ordspace::euclid::{
    blumenthal_check, check_r2_necessary, decide_embeddable, embed_heuristic, menger_probe,
    realize_simplex, HeuristicBudget, Verdict,
};
use ordspace::line::embed_line;
use ordspace::space::random_space;
use ordspace::{realize, Guard};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn budget() -> HeuristicBudget {
    HeuristicBudget { restarts: 8, iterations: 2000, seed: 3 }
}

#[test]
fn one_dimensional_decision_is_the_lp() {
    for s in enumerate_spaces(4, Filter::All, CensusOptions::default()).unwrap() {
        let lp = embed_line(&s, Guard::default()).unwrap().is_some();
        let v = decide_embeddable(&s, 1, Guard::default(), budget()).unwrap();
        assert_eq!(v, if lp { Verdict::Embeddable } else { Verdict::NotEmbeddable });
    }
}

#[test]
fn planar_fixtures() {
    assert!(check_r2_necessary(&fixture("square.ord")).all_hold());
    assert!(!check_r2_necessary(&fixture("all_equal_5.ord")).all_hold());
    let out = embed_heuristic(&fixture("square.ord"), 2, budget());
    let w = out.witness.expect("square found in the plane");
    assert!(w.verified && w.dim <= 2);
    assert_eq!(
        decide_embeddable(&fixture("all_equal_5.ord"), 2, Guard::default(), budget()).unwrap(),
        Verdict::NotEmbeddable
    );
}

#[test]
fn menger_probe_on_the_seven_point_space() {
    let s = fixture("seven_point.ord");
    let r = menger_probe(&s, 1, Guard::default(), budget()).unwrap();
    assert!(r.consistent());
    assert_eq!(r.whole, Verdict::NotEmbeddable);
    assert_eq!(r.max_subset, 4);
}

#[test]
fn table_space_realizes_as_a_simplex() {
    let s = fixture("balls_29.ord");
    let w = realize_simplex(&s).unwrap();
    assert_eq!(w.dim, 5);
    assert!(w.reproduces(&s));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn simplex_witnesses_verify(seed in any::<u64>(), n in 2usize..7, levels in 1u32..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_space(&mut rng, n, levels);
        let w = realize_simplex(&s).unwrap();
        prop_assert!(w.verified);
        prop_assert_eq!(w.dim, n - 1);
        // the canonical realization of a single level is a regular simplex
        if s.k() == 1 {
            prop_assert!(blumenthal_check(&realize(&s)).holds());
        }
    }
}
