mod common;

use common::space;
use ordspace::orddist::{d_ord, d_ord_oracle, disagreements};
use ordspace::perm::permutations;
use ordspace::space::random_space;
use ordspace::{Error, Guard};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn chain_against_flat() {
    let chain = space(3, &[1, 2, 3]);
    let flat = space(3, &[1, 1, 1]);
    let r = d_ord(&chain, &flat, Guard::default()).unwrap();
    // every unordered pair of distinct sides is ordered in one space and tied in the other
    assert_eq!(r.value, 3);
    assert_eq!(disagreements(&chain, &flat, &r.witness).len(), 3);
}

#[test]
fn sizes_must_agree() {
    let err = d_ord(&space(2, &[1]), &space(3, &[1, 1, 1]), Guard::default()).unwrap_err();
    assert!(matches!(err, Error::CardinalityMismatch { left: 2, right: 3 }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn symmetric_and_relabel_invariant(seed in any::<u64>(), n in 2usize..6, levels in 1u32..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_space(&mut rng, n, levels);
        let b = random_space(&mut rng, n, levels);
        let g = Guard::default();
        let ab = d_ord(&a, &b, g).unwrap().value;
        prop_assert_eq!(ab, d_ord(&b, &a, g).unwrap().value);
        let p = permutations(n).nth(seed as usize % 2).unwrap();
        prop_assert_eq!(ab, d_ord(&a.relabeled(&p), &b, g).unwrap().value);
        let (oracle, divisible) = d_ord_oracle(&a, &b, g).unwrap();
        prop_assert!(divisible);
        prop_assert_eq!(oracle, ab);
    }
}
