//! Exhaustive enumeration of small ordinal spaces up to isomorphism and the
//! ball-count statistics gathered over them.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::balls::{ball_set, hasse, hasse_isomorphic, HasseDiagram, PointSet};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::iso::canonical_form;
use crate::line::{classify_four_point, embed_line};
use crate::perm::{factorial, next_permutation, permutations};
use crate::space::{pairs, OrdinalSpace};

/// Largest ball counts conjectured for `n = 1..=7`.
pub const MAX_BALLS_CONJECTURED: [usize; 7] = [1, 3, 6, 12, 19, 29, 40];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    /// every surjective assignment of levels to pairs
    All,
    /// pairwise distinct ranks only
    Injective,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::Injective => "injective",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusOptions {
    /// permits the ~10^8-partition enumeration of all 5-point spaces
    pub huge: bool,
}

pub fn enumeration_limit(filter: Filter, opts: CensusOptions) -> usize {
    match (filter, opts.huge) {
        (Filter::All, false) => 4,
        (Filter::All, true) => 5,
        (Filter::Injective, _) => 5,
    }
}

/// One canonical representative per isomorphism class, sorted.
///
/// `All` walks the ordered set partitions of the pair set (a set partition
/// as a restricted growth string, then every ordering of its blocks);
/// `Injective` walks the linear orders of the pairs.
pub fn enumerate_spaces(n: usize, filter: Filter, opts: CensusOptions) -> Result<Vec<OrdinalSpace>> {
    let limit = enumeration_limit(filter, opts);
    if n > limit {
        return Err(Error::SizeLimit {
            what: match filter {
                Filter::All => "census of all spaces (use --huge for n = 5)",
                Filter::Injective => "census of injective spaces",
            },
            size: n,
            limit,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("a space needs at least one point".into()));
    }
    if n == 1 {
        return Ok(vec![OrdinalSpace::singleton()]);
    }
    let m = n * (n - 1) / 2;
    let canon = |ranks: &[u32]| {
        let s = OrdinalSpace::from_pair_ranks(n, ranks).expect("surjective by construction");
        canonical_form(&s, Guard::default()).expect("n within guard")
    };
    let found: HashSet<OrdinalSpace> = match filter {
        Filter::All => restricted_growth_strings(m)
            .into_par_iter()
            .fold(HashSet::new, |mut acc, rgs| {
                let blocks = *rgs.iter().max().unwrap() as usize + 1;
                let mut order: Vec<usize> = (0..blocks).collect();
                let mut ranks = vec![0u32; m];
                loop {
                    for (r, &b) in ranks.iter_mut().zip(&rgs) {
                        *r = order[b as usize] as u32 + 1;
                    }
                    acc.insert(canon(&ranks));
                    if !next_permutation(&mut order) {
                        break;
                    }
                }
                acc
            })
            .reduce(HashSet::new, union),
        Filter::Injective => (0..m)
            .into_par_iter()
            .fold(HashSet::new, |mut acc, first| {
                // rank 1 goes to pair `first`, the rest in every order
                let mut rest: Vec<usize> = (0..m).filter(|&p| p != first).collect();
                let mut ranks = vec![0u32; m];
                loop {
                    ranks[first] = 1;
                    for (i, &p) in rest.iter().enumerate() {
                        ranks[p] = i as u32 + 2;
                    }
                    acc.insert(canon(&ranks));
                    if !next_permutation(&mut rest) {
                        break;
                    }
                }
                acc
            })
            .reduce(HashSet::new, union),
    };
    let mut out: Vec<OrdinalSpace> = found.into_iter().collect();
    out.sort_by_cached_key(|s| s.pair_ranks());
    Ok(out)
}

fn union(mut a: HashSet<OrdinalSpace>, b: HashSet<OrdinalSpace>) -> HashSet<OrdinalSpace> {
    if a.len() < b.len() {
        return union(b, a);
    }
    a.extend(b);
    a
}

/// Set partitions of `0..m` as restricted growth strings.
fn restricted_growth_strings(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; m];
    fn rec(i: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max + 1 {
            cur[i] = v;
            rec(i + 1, max.max(v), cur, out);
        }
    }
    if m == 0 {
        return vec![Vec::new()];
    }
    rec(1, 0, &mut cur, &mut out);
    out
}

/// Ordered set partitions of an `m`-set.
pub fn fubini(m: usize) -> u128 {
    let mut a = vec![0u128; m + 1];
    a[0] = 1;
    for k in 1..=m {
        let mut binom = 1u128;
        for j in 1..=k {
            binom = binom * (k - j + 1) as u128 / j as u128;
            a[k] += binom * a[k - j];
        }
    }
    a[m]
}

/// Number of isomorphism classes by Burnside's lemma: the average over the
/// symmetric group of the level assignments each relabeling fixes. An
/// assignment is fixed iff it is constant on each cycle of the induced
/// permutation of pairs.
pub fn burnside_count(n: usize, filter: Filter) -> u128 {
    if n <= 1 {
        return 1;
    }
    let ps = pairs(n);
    let index = |i: usize, j: usize| ps.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let m = ps.len();
    let mut total = 0u128;
    for g in permutations(n) {
        let image: Vec<usize> = ps.iter().map(|&(i, j)| index(g[i], g[j])).collect();
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for start in 0..m {
            if !seen[start] {
                cycles += 1;
                let mut p = start;
                while !seen[p] {
                    seen[p] = true;
                    p = image[p];
                }
            }
        }
        total += match filter {
            Filter::All => fubini(cycles),
            Filter::Injective if cycles == m => factorial(m),
            Filter::Injective => 0,
        };
    }
    total / factorial(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    Untested,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Untested => "UNTESTED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallExtreme {
    pub n: usize,
    pub filter: Filter,
    /// maximum over `All`, minimum over `Injective`
    pub value: usize,
    /// first class in enumeration order attaining the value
    pub witness: OrdinalSpace,
    pub attainers: usize,
    pub expected: Option<usize>,
    pub verdict: Verdict,
}

/// Maximum ball count over all spaces (compared against the conjectured
/// sequence) or minimum over injective spaces (compared against
/// `n(n+1)/2`).
pub fn ball_extremes(n: usize, filter: Filter, opts: CensusOptions) -> Result<BallExtreme> {
    let spaces = enumerate_spaces(n, filter, opts)?;
    Ok(extreme_of(n, filter, &spaces))
}

fn extreme_of(n: usize, filter: Filter, spaces: &[OrdinalSpace]) -> BallExtreme {
    let counts: Vec<usize> = spaces.par_iter().map(|s| ball_set(s).len()).collect();
    let value = match filter {
        Filter::All => *counts.iter().max().expect("nonempty census"),
        Filter::Injective => *counts.iter().min().expect("nonempty census"),
    };
    let first = counts.iter().position(|&c| c == value).unwrap();
    let expected = match filter {
        Filter::All => MAX_BALLS_CONJECTURED.get(n - 1).copied(),
        Filter::Injective => Some(n * (n + 1) / 2),
    };
    let verdict = match expected {
        None => Verdict::Untested,
        Some(e) if e == value => Verdict::Match,
        Some(_) => Verdict::Mismatch,
    };
    BallExtreme {
        n,
        filter,
        value,
        witness: spaces[first].clone(),
        attainers: counts.iter().filter(|&&c| c == value).count(),
        expected,
        verdict,
    }
}

/// Isomorphism classes of `n`-point spaces embeddable in the line. For
/// `n = 4` the four-point classification decides and is cross-checked
/// against the exact LP; a disagreement is an error.
pub fn count_r1_embeddable(n: usize) -> Result<usize> {
    let spaces = enumerate_spaces(n, Filter::All, CensusOptions::default())?;
    let verdicts: Vec<Result<bool>> = spaces
        .par_iter()
        .map(|s| {
            let lp = embed_line(s, Guard::default())?.is_some();
            if n == 4 {
                let four = classify_four_point(s)?.is_embeddable();
                if four != lp {
                    return Err(Error::Solver(format!(
                        "four-point classification and LP disagree on\n{s}"
                    )));
                }
            }
            Ok(lp)
        })
        .collect();
    let mut count = 0;
    for v in verdicts {
        count += usize::from(v?);
    }
    Ok(count)
}

/// Hasse diagram of all intervals `{i, ..., j}` of `n` points in a row,
/// the shape conjectured for injective spaces with fewest balls.
pub fn interval_hasse(n: usize) -> HasseDiagram {
    let sets: Vec<PointSet> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i..=j).collect()))
        .collect();
    HasseDiagram::from_sets(&sets)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseShapeReport {
    pub n: usize,
    pub min_balls: usize,
    pub attainers: usize,
    pub attainers_matching: usize,
    /// spaces above the minimum whose diagram still matches the reference
    pub others_matching: usize,
    pub verdict: Verdict,
}

/// For each injective `n`-point class: does its Hasse diagram match the
/// interval shape exactly when its ball count is minimal?
pub fn minimal_hasse_shape_probe(n: usize) -> Result<HasseShapeReport> {
    if !(3..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("shape probe runs for n = 3 or 4, got {n}")));
    }
    let spaces = enumerate_spaces(n, Filter::Injective, CensusOptions::default())?;
    let reference = interval_hasse(n);
    let rows: Vec<(usize, bool)> = spaces
        .par_iter()
        .map(|s| {
            let h = hasse(&ball_set(s));
            let iso = hasse_isomorphic(&h, &reference, Guard::default())
                .expect("tiny diagram")
                .is_some();
            (h.vertex_count(), iso)
        })
        .collect();
    let min_balls = rows.iter().map(|r| r.0).min().expect("nonempty census");
    let attainers = rows.iter().filter(|r| r.0 == min_balls).count();
    let attainers_matching = rows.iter().filter(|r| r.0 == min_balls && r.1).count();
    let others_matching = rows.iter().filter(|r| r.0 != min_balls && r.1).count();
    let verdict = if attainers_matching == attainers && others_matching == 0 {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    Ok(HasseShapeReport {
        n,
        min_balls,
        attainers,
        attainers_matching,
        others_matching,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub filter: Filter,
    pub total_nonisomorphic: usize,
    pub burnside_count: u128,
    pub max_balls: Option<BallExtreme>,
    pub min_balls_distinct: Option<BallExtreme>,
    pub r1_embeddable_count: Option<usize>,
    pub matches_a263511: Verdict,
    pub matches_triangular: Verdict,
    pub elapsed: Duration,
}

/// Enumerates with `filter`, and gathers every statistic that applies: the
/// maximum over all spaces, the minimum over injective spaces (always
/// enumerated when `n ≤ 5`), and the line-embeddable count for `n ≤ 4`.
pub fn run_census(n: usize, filter: Filter, opts: CensusOptions) -> Result<CensusReport> {
    let start = Instant::now();
    let spaces = enumerate_spaces(n, filter, opts)?;
    let all = match filter {
        Filter::All => Some(spaces.clone()),
        Filter::Injective if n <= enumeration_limit(Filter::All, opts) => {
            Some(enumerate_spaces(n, Filter::All, opts)?)
        }
        Filter::Injective => None,
    };
    let injective = match filter {
        Filter::Injective => Some(spaces.clone()),
        Filter::All if n <= enumeration_limit(Filter::Injective, opts) => {
            Some(enumerate_spaces(n, Filter::Injective, opts)?)
        }
        Filter::All => None,
    };
    let max_balls = all.as_ref().map(|s| extreme_of(n, Filter::All, s));
    let min_balls_distinct = injective.as_ref().map(|s| extreme_of(n, Filter::Injective, s));
    let r1_embeddable_count = if n <= 4 { Some(count_r1_embeddable(n)?) } else { None };
    Ok(CensusReport {
        n,
        filter,
        total_nonisomorphic: spaces.len(),
        burnside_count: burnside_count(n, filter),
        matches_a263511: max_balls.as_ref().map_or(Verdict::Untested, |e| e.verdict),
        matches_triangular: min_balls_distinct.as_ref().map_or(Verdict::Untested, |e| e.verdict),
        max_balls,
        min_balls_distinct,
        r1_embeddable_count,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn fubini_numbers() {
        let known = [1u128, 1, 3, 13, 75, 541, 4683];
        for (m, &v) in known.iter().enumerate() {
            assert_eq!(fubini(m), v);
        }
        assert_eq!(fubini(10), 102_247_563);
    }

    #[test]
    fn growth_strings_are_bell_many() {
        assert_eq!(restricted_growth_strings(3).len(), 5);
        assert_eq!(restricted_growth_strings(6).len(), 203);
    }

    #[test]
    fn small_counts() {
        let o = CensusOptions::default();
        assert_eq!(enumerate_spaces(2, Filter::All, o).unwrap().len(), 1);
        assert_eq!(enumerate_spaces(3, Filter::All, o).unwrap().len(), 4);
        assert_eq!(enumerate_spaces(3, Filter::Injective, o).unwrap().len(), 1);
        assert_eq!(burnside_count(3, Filter::All), 4);
        assert_eq!(burnside_count(3, Filter::Injective), 1);
        assert_eq!(burnside_count(4, Filter::Injective), 30);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let spaces = enumerate_spaces(3, Filter::All, CensusOptions::default()).unwrap();
        for (i, a) in spaces.iter().enumerate() {
            assert_eq!(&canonical_form(a, Guard::default()).unwrap(), a);
            for b in &spaces[i + 1..] {
                assert!(is_isomorphic(a, b).is_none());
            }
        }
    }

    #[test]
    fn guards() {
        let o = CensusOptions::default();
        assert!(matches!(
            enumerate_spaces(5, Filter::All, o),
            Err(Error::SizeLimit { size: 5, limit: 4, .. })
        ));
        assert!(enumerate_spaces(6, Filter::Injective, CensusOptions { huge: true }).is_err());
    }

    #[test]
    fn interval_shapes() {
        assert_eq!(interval_hasse(3).vertex_count(), 6);
        assert_eq!(interval_hasse(4).vertex_count(), 10);
        assert!(!interval_hasse(3).is_tree());
    }
}
