//! End-to-end acceptance checks. Runs every criterion, prints one
//! PASS/FAIL line each, and exits non-zero if any failed.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::fixture;
use ordspace::census::{
    ball_extremes, count_r1_embeddable, enumerate_spaces, minimal_hasse_shape_probe, CensusOptions,
    Filter, Verdict,
};
use ordspace::euclid::{cayley_menger, check_r2_necessary, realize_simplex, smallest_class_bound};
use ordspace::io::parse_distance_csv;
use ordspace::line::{check_majorization, check_line_class_sizes, classify_four_point, embed_line, MajorizationMode};
use ordspace::orddist::{all_triples, d_ord, d_ord_metric_probe, d_ord_oracle};
use ordspace::perm::permutations;
use ordspace::rational::{int, ratio};
use ordspace::space::random_space;
use ordspace::{
    ball_set, balls_at, hasse, hasse_isomorphic, is_isomorphic, ordinal_type, realize, weakly_similar,
    DistanceMatrix, Guard, OrdinalSpace, Relation, Q,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_spaces_up_to(n: usize) -> Vec<OrdinalSpace> {
    (1..=n)
        .flat_map(|m| enumerate_spaces(m, Filter::All, CensusOptions::default()).unwrap())
        .collect()
}

/// Balls straight from the definition: for every center and every rank
/// value present in its row, the points at or below that rank.
fn brute_ball_count(s: &OrdinalSpace) -> usize {
    let mut seen = BTreeSet::new();
    for c in 0..s.n() {
        for t in s.row(c) {
            let members: Vec<usize> = (0..s.n()).filter(|&x| s.rank(c, x) <= *t).collect();
            seen.insert(members);
        }
    }
    seen.len()
}

fn letters(text: &str) -> Vec<usize> {
    if text == "X" {
        return (0..6).collect();
    }
    text.bytes().map(|b| (b - b'a') as usize).collect()
}

fn c1_table_balls() -> Outcome {
    let s = fixture("balls_29.ord");
    let chains = [
        "a ab abf abef abcef X",
        "b bc abc abcf abcdf X",
        "c cd bcd bcde abcde X",
        "d de cde cdef bcdef X",
        "e ef def adef acdef X",
        "f ef aef abef abdef X",
    ];
    let bs = ball_set(&s);
    ensure(bs.len() == 29, || format!("{} balls", bs.len()))?;
    ensure(brute_ball_count(&s) == 29, || "brute-force count differs".into())?;
    for (c, chain) in chains.iter().enumerate() {
        let want: Vec<Vec<usize>> = chain.split(' ').map(letters).collect();
        let got: Vec<Vec<usize>> = balls_at(&s, c).into_iter().map(|b| b.members).collect();
        ensure(got == want, || format!("center {c}: {got:?}"))?;
    }
    Ok("29 balls, six chains as listed".into())
}

fn c2_hasse_twins() -> Outcome {
    let x = fixture("twins_X.ord");
    let y = fixture("twins_Y.ord");
    let (bx, by) = (ball_set(&x), ball_set(&y));
    ensure(bx.len() == 9 && by.len() == 9, || format!("{} and {} balls", bx.len(), by.len()))?;
    ensure(
        hasse_isomorphic(&hasse(&bx), &hasse(&by), Guard::default()).unwrap().is_some(),
        || "Hasse diagrams not isomorphic".into(),
    )?;
    ensure(is_isomorphic(&x, &y).is_none(), || "spaces isomorphic".into())?;
    let read = |name: &str| {
        parse_distance_csv(&std::fs::read_to_string(common::fixture_path(name)).unwrap()).unwrap()
    };
    let (dx, dy) = (read("twins_X.csv"), read("twins_Y.csv"));
    ensure(ordinal_type(&dx) == x && ordinal_type(&dy) == y, || "csv/ord mismatch".into())?;
    ensure(!weakly_similar(&dx, &dy), || "coordinate realizations weakly similar".into())?;
    ensure(!weakly_similar(&realize(&x), &realize(&y)), || "canonical realizations weakly similar".into())?;
    Ok("9 = 9 balls, Hasse isomorphic, spaces and realizations distinct".into())
}

fn c3_four_point_line() -> Outcome {
    let spaces = enumerate_spaces(4, Filter::All, CensusOptions::default()).unwrap();
    let mut embeddable = 0;
    for s in &spaces {
        let four = classify_four_point(s).unwrap().is_embeddable();
        let lp = embed_line(s, Guard::default()).unwrap().is_some();
        ensure(four == lp, || format!("disagreement on\n{s}"))?;
        embeddable += usize::from(lp);
    }
    ensure(embeddable == 14, || format!("{embeddable} embeddable classes"))?;
    ensure(count_r1_embeddable(4).unwrap() == 14, || "census count differs".into())?;
    Ok(format!("agreement on all {} classes, 14 embeddable", spaces.len()))
}

fn c4_max_balls() -> Outcome {
    let mut values = Vec::new();
    for n in 1..=4 {
        let e = ball_extremes(n, Filter::All, CensusOptions::default()).map_err(|e| e.to_string())?;
        ensure(brute_ball_count(&e.witness) == e.value, || format!("n={n} witness recount"))?;
        ensure(e.verdict == Verdict::Match, || format!("n={n}: max {} verdict {}", e.value, e.verdict))?;
        values.push(e.value);
    }
    ensure(values == [1, 3, 6, 12], || format!("{values:?}"))?;
    Ok(format!("max balls {values:?} MATCH (n=5 needs the huge census)"))
}

fn c5_min_balls() -> Outcome {
    let mut notes = Vec::new();
    let mut failed = false;
    for (n, want) in [(3, 6), (4, 10)] {
        let e = ball_extremes(n, Filter::Injective, CensusOptions::default()).map_err(|e| e.to_string())?;
        ensure(brute_ball_count(&e.witness) == e.value, || format!("n={n} witness recount"))?;
        let shape = minimal_hasse_shape_probe(n).map_err(|e| e.to_string())?;
        notes.push(format!(
            "n={n}: min {} (expected {want}, {}), shape {}",
            e.value, e.verdict, shape.verdict
        ));
        if e.value != want || e.verdict != Verdict::Match || shape.verdict != Verdict::Match {
            failed = true;
            notes.push(format!("witness\n{}", e.witness));
        }
    }
    let msg = notes.join("; ");
    if failed {
        Err(msg)
    } else {
        Ok(msg)
    }
}

fn c6_simplex() -> Outcome {
    for k in 1..=6usize {
        for a in [int(1), ratio(3, 2), int(2)] {
            let d = DistanceMatrix::from_pair_fn(k + 1, |_, _| a.clone()).unwrap();
            let points: Vec<usize> = (0..=k).collect();
            let cm = cayley_menger(&d, &points).unwrap();
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let want = Q::from_integer((sign * (k as i64 + 1)).into()) * num_traits::pow(a.clone(), 2 * k);
            ensure(cm.value == want, || format!("k={k} a={a}: {}", cm.value))?;
        }
    }
    let mut corpus = all_spaces_up_to(4);
    corpus.extend(enumerate_spaces(5, Filter::Injective, CensusOptions::default()).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let levels = rng.gen_range(1..=21);
        corpus.push(random_space(&mut rng, 7, levels));
    }
    for s in &corpus {
        let w = realize_simplex(s).map_err(|e| format!("{e} on\n{s}"))?;
        ensure(w.verified && w.reproduces(s), || format!("unverified witness for\n{s}"))?;
    }
    Ok(format!("regular simplices exact; {} spaces realized", corpus.len()))
}

fn c7_seven_point() -> Outcome {
    let s = fixture("seven_point.ord");
    let id: Vec<usize> = (0..7).collect();
    let full = check_majorization(&s, &id, MajorizationMode::Full).unwrap();
    let pair = full.map(|(a, b)| (a.to_string(), b.to_string()));
    ensure(pair == Some(("(1,3,4)".into(), "(4,6,7)".into())), || format!("{pair:?}"))?;
    ensure(
        check_majorization(&s, &id, MajorizationMode::Consecutive).unwrap().is_none(),
        || "consecutive mode fails".into(),
    )?;
    Ok("FULL fails at (1,3,4),(4,6,7); CONSECUTIVE holds".into())
}

fn c8_ordinal_distance() -> Outcome {
    let g = Guard::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=4 {
        let spaces = enumerate_spaces(n, Filter::All, CensusOptions::default()).unwrap();
        let perms: Vec<Vec<usize>> = permutations(n).collect();
        for (i, a) in spaces.iter().enumerate() {
            for (j, b) in spaces.iter().enumerate() {
                let d = d_ord(a, b, g).unwrap().value;
                let (oracle, divisible) = d_ord_oracle(a, b, g).unwrap();
                ensure(divisible && oracle == d, || format!("oracle {oracle} vs {d} (n={n})"))?;
                ensure((d == 0) == (i == j), || format!("d={d} for classes {i},{j} (n={n})"))?;
            }
            // relabeled copies sit at distance zero
            let p = &perms[rng.gen_range(0..perms.len())];
            let c = a.relabeled(p);
            ensure(d_ord(a, &c, g).unwrap().value == 0, || "relabeling moved a space".into())?;
        }
    }
    let three = enumerate_spaces(3, Filter::All, CensusOptions::default()).unwrap();
    let r3 = d_ord_metric_probe(&three, &all_triples(three.len()), g).unwrap();
    ensure(r3.is_clean(), || format!("n=3 {r3:?}"))?;
    let four = enumerate_spaces(4, Filter::All, CensusOptions::default()).unwrap();
    let sampled: Vec<_> = (0..200)
        .map(|_| {
            let mut t = || rng.gen_range(0..four.len());
            (t(), t(), t())
        })
        .collect();
    let r4 = d_ord_metric_probe(&four, &sampled, g).unwrap();
    ensure(r4.is_clean(), || format!("n=4 {r4:?}"))?;
    Ok(format!(
        "oracle and identity exhaustive n<=4; {} + {} triangle triples clean",
        r3.triples_checked, r4.triples_checked
    ))
}

fn c9_necessary_conditions() -> Outcome {
    let mut corpus = all_spaces_up_to(4);
    for name in [
        "twins_X.ord", "twins_Y.ord", "intervals_3.ord", "intervals_4.ord", "seven_point.ord", "chain3.ord",
        "3pt_two_max.ord", "all_equal_4.ord", "all_equal_5.ord", "square.ord", "balls_29.ord",
    ] {
        corpus.push(fixture(name));
    }
    let mut witnesses = 0;
    for s in &corpus {
        if embed_line(s, Guard::default()).unwrap().is_some() {
            witnesses += 1;
            ensure(check_line_class_sizes(s).is_ok(), || format!("{:?} on\n{s}", check_line_class_sizes(s)))?;
        }
    }
    let report = check_r2_necessary(&fixture("all_equal_5.ord"));
    ensure(!report.diametrical.holds, || "all-equal 5-point space not refuted".into())?;
    ensure(smallest_class_bound(10) == 19, || format!("bound {}", smallest_class_bound(10)))?;
    ensure(report.diametrical.value == 10 && report.diametrical.bound == 5, || {
        format!("{:?}", report.diametrical)
    })?;
    Ok(format!("{witnesses} line witnesses satisfy the class bounds; diametrical bound refutes; n=10 smallest-class bound 19"))
}

fn axioms_hold(s: &OrdinalSpace) -> Result<(), String> {
    let n = s.n();
    let rel = |x, y, z, w| s.relation(x, y, z, w).unwrap();
    let le = |r: Relation| r != Relation::Gt;
    let pts: Vec<usize> = (0..n).collect();
    for &x in &pts {
        for &y in &pts {
            if rel(x, y, x, y) != Relation::Eq {
                return Err(format!("reflexive at {x}{y}"));
            }
            for &z in &pts {
                for &w in &pts {
                    let r = rel(x, y, z, w);
                    if r != rel(y, x, z, w) || r != rel(x, y, w, z) {
                        return Err(format!("symmetric at {x}{y}{z}{w}"));
                    }
                    if r != rel(z, w, x, y).reversed() {
                        return Err(format!("antisymmetric at {x}{y}{z}{w}"));
                    }
                    let want = if z == w { Relation::Eq } else { Relation::Lt };
                    if rel(x, x, z, w) != want {
                        return Err(format!("zero at {x}{z}{w}"));
                    }
                    for &u in &pts {
                        for &v in &pts {
                            let (a, b, c) = (rel(x, y, u, v), rel(u, v, z, w), r);
                            if a == Relation::Eq && b == Relation::Eq && c != Relation::Eq {
                                return Err("eq-transitive".into());
                            }
                            if a == Relation::Lt && le(b) && c != Relation::Lt {
                                return Err("lt-transitive".into());
                            }
                            if le(a) && b == Relation::Lt && c != Relation::Lt {
                                return Err("le-transitive".into());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn c10_round_trip() -> Outcome {
    let corpus = all_spaces_up_to(4);
    for s in &corpus {
        let d = realize(s);
        ensure(d.is_metric(), || format!("realization not metric for\n{s}"))?;
        ensure(&ordinal_type(&d) == s, || format!("round trip changed\n{s}"))?;
        axioms_hold(s).map_err(|e| format!("axiom {e} fails on\n{s}"))?;
    }
    Ok(format!("{} spaces round-trip; all seven axioms hold", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("ball table: 29 balls and per-center chains", c1_table_balls),
        ("two five-point spaces with isomorphic Hasse diagrams", c2_hasse_twins),
        ("four-point line classification vs exact LP, 14 classes", c3_four_point_line),
        ("maximum ball counts n=1..4", c4_max_balls),
        ("minimum ball counts for injective ranks, n=3,4", c5_min_balls),
        ("Cayley-Menger values and simplex realization", c6_simplex),
        ("seven-point majorization counterexample", c7_seven_point),
        ("ordinal distance properties and oracle", c8_ordinal_distance),
        ("necessary-condition suites", c9_necessary_conditions),
        ("round trip and axioms", c10_round_trip),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{ms} ms] {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL [{ms} ms] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
