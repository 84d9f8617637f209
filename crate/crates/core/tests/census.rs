mod common;

use ordspace::census::{
    ball_extremes, burnside_count, count_r1_embeddable, enumerate_spaces, interval_hasse,
    minimal_hasse_shape_probe, run_census, CensusOptions, Filter, Verdict,
};
use ordspace::{ball_set, canonical_form, hasse, hasse_isomorphic, is_isomorphic, Error, Guard};

const O: CensusOptions = CensusOptions { huge: false };

#[test]
fn generated_counts_match_burnside() {
    for n in 1..=4 {
        let got = enumerate_spaces(n, Filter::All, O).unwrap().len() as u128;
        assert_eq!(got, burnside_count(n, Filter::All), "all n={n}");
    }
    for n in 1..=4 {
        let got = enumerate_spaces(n, Filter::Injective, O).unwrap().len() as u128;
        assert_eq!(got, burnside_count(n, Filter::Injective), "injective n={n}");
    }
    assert_eq!(burnside_count(4, Filter::All), 225);
}

#[test]
fn representatives_canonical_and_sorted() {
    let spaces = enumerate_spaces(4, Filter::All, O).unwrap();
    for w in spaces.windows(2) {
        assert!(w[0].pair_ranks() < w[1].pair_ranks());
    }
    for (i, s) in spaces.iter().enumerate() {
        assert_eq!(&canonical_form(s, Guard::default()).unwrap(), s);
        for t in spaces.iter().skip(i + 1).step_by(7) {
            assert!(is_isomorphic(s, t).is_none());
        }
    }
}

#[test]
fn line_embeddable_counts() {
    assert_eq!(count_r1_embeddable(2).unwrap(), 1);
    // exactly the classes whose largest side is unique
    let three = enumerate_spaces(3, Filter::All, O).unwrap();
    let unique_top = three
        .iter()
        .filter(|s| s.pair_ranks().iter().filter(|&&r| r == s.k()).count() == 1)
        .count();
    assert_eq!(count_r1_embeddable(3).unwrap(), unique_top);
    assert_eq!(unique_top, 2);
    assert_eq!(count_r1_embeddable(4).unwrap(), 14);
}

#[test]
fn minimal_shape_probe() {
    let r3 = minimal_hasse_shape_probe(3).unwrap();
    assert_eq!((r3.min_balls, r3.verdict), (6, Verdict::Match));
    let r4 = minimal_hasse_shape_probe(4).unwrap();
    assert_eq!(r4.min_balls, 9);
    assert_eq!(r4.verdict, Verdict::Mismatch);
    assert!(minimal_hasse_shape_probe(5).is_err());
}

#[test]
fn max_ball_witness_is_not_interval_shaped() {
    let e = ball_extremes(4, Filter::All, O).unwrap();
    let h = hasse(&ball_set(&e.witness));
    assert!(hasse_isomorphic(&h, &interval_hasse(4), Guard::default()).unwrap().is_none());
}

#[test]
fn report_fields() {
    let r = run_census(4, Filter::All, O).unwrap();
    assert_eq!(r.total_nonisomorphic, 225);
    assert_eq!(r.max_balls.as_ref().unwrap().value, 12);
    assert_eq!(r.matches_a263511, Verdict::Match);
    assert_eq!(r.min_balls_distinct.as_ref().unwrap().value, 9);
    assert_eq!(r.matches_triangular, Verdict::Mismatch);
    assert_eq!(r.r1_embeddable_count, Some(14));
    let w = &r.max_balls.unwrap().witness;
    assert_eq!(ball_set(w).len(), 12);
}

#[test]
fn five_points_need_the_flag() {
    assert!(matches!(
        enumerate_spaces(5, Filter::All, O),
        Err(Error::SizeLimit { .. })
    ));
    assert!(matches!(run_census(5, Filter::All, O), Err(Error::SizeLimit { .. })));
}
