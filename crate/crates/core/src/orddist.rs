//! The ordinal distance between spaces of equal cardinality: the least
//! number of pair comparisons any bijection gets wrong.
//!
//! Counting over ordered quadruples `(x, y, z, w)` gives exactly 8 times the
//! count over unordered comparisons `{{x,y},{z,w}}` of distinct pairs of
//! distinct points. A quadruple with `x = y` or `z = w` never disagrees
//! (level 0 is below every other level in both spaces, and bijections keep
//! distinct points distinct); neither does one with `{x,y} = {z,w}`. Every
//! other quadruple lies in an orbit of size 8 under swapping `x↔y`, `z↔w`
//! and the two pairs, and disagreement is constant on orbits.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::iso::is_isomorphic;
use crate::perm::permutations;
use crate::space::{pairs, OrdinalSpace};

type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdDistResult {
    pub value: u64,
    /// point `i` of the first space goes to `witness[i]` of the second
    pub witness: Vec<usize>,
    /// comparisons of the first space the witness gets wrong
    pub disagreements: Vec<(Pair, Pair)>,
}

fn check_sizes(a: &OrdinalSpace, b: &OrdinalSpace, guard: Guard) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::CardinalityMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    guard.check("ordinal distance", a.n())
}

fn disagrees(a: &OrdinalSpace, b: &OrdinalSpace, f: &[usize], p: Pair, q: Pair) -> bool {
    a.rank(p.0, p.1).cmp(&a.rank(q.0, q.1)) != b.rank(f[p.0], f[p.1]).cmp(&b.rank(f[q.0], f[q.1]))
}

/// Comparisons of `a` that the bijection `f` gets wrong.
pub fn disagreements(a: &OrdinalSpace, b: &OrdinalSpace, f: &[usize]) -> Vec<(Pair, Pair)> {
    let ps = pairs(a.n());
    let mut out = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for &q in &ps[i + 1..] {
            if disagrees(a, b, f, p, q) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Exact minimum over all bijections by branch and bound. Points of `a` are
/// assigned in order; placing point `i` settles every comparison between
/// pairs inside `{0..=i}` that involves `i`. Subtrees whose partial count
/// reaches the incumbent are cut, so among optimal bijections the
/// lexicographically smallest one is returned.
pub fn d_ord(a: &OrdinalSpace, b: &OrdinalSpace, guard: Guard) -> Result<OrdDistResult> {
    check_sizes(a, b, guard)?;
    let n = a.n();
    let mut search = Search {
        a,
        b,
        f: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX,
        best_f: Vec::new(),
    };
    search.extend(0);
    let witness = search.best_f;
    Ok(OrdDistResult {
        value: search.best,
        disagreements: disagreements(a, b, &witness),
        witness,
    })
}

struct Search<'a> {
    a: &'a OrdinalSpace,
    b: &'a OrdinalSpace,
    f: Vec<usize>,
    used: Vec<bool>,
    best: u64,
    best_f: Vec<usize>,
}

impl Search<'_> {
    /// Disagreements newly settled by the point just placed at `i`.
    fn added(&self, i: usize) -> u64 {
        let mut count = 0;
        for x in 0..i {
            let p = (x, i);
            // against pairs entirely before i
            for w in 1..i {
                for z in 0..w {
                    if disagrees(self.a, self.b, &self.f, p, (z, w)) {
                        count += 1;
                    }
                }
            }
            // against later new pairs
            for y in x + 1..i {
                if disagrees(self.a, self.b, &self.f, p, (y, i)) {
                    count += 1;
                }
            }
        }
        count
    }

    fn extend(&mut self, partial: u64) {
        let n = self.a.n();
        let i = self.f.len();
        if i == n {
            if partial < self.best {
                self.best = partial;
                self.best_f = self.f.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            self.f.push(v);
            let total = partial + self.added(i);
            if total < self.best {
                self.used[v] = true;
                self.extend(total);
                self.used[v] = false;
            }
            self.f.pop();
        }
    }
}

/// Number of ordered quadruples `(x, y, z, w)` with `δ_a(x,y,z,w)` different
/// from `δ_b(f x, f y, f z, f w)`.
pub fn quadruple_disagreements(a: &OrdinalSpace, b: &OrdinalSpace, f: &[usize]) -> u64 {
    let n = a.n();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if a.cmp_pairs(x, y, z, w) != b.cmp_pairs(f[x], f[y], f[z], f[w]) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Brute force over every bijection with the ordered-quadruple count. Also
/// returns whether every count was divisible by 8.
pub fn d_ord_oracle(a: &OrdinalSpace, b: &OrdinalSpace, guard: Guard) -> Result<(u64, bool)> {
    check_sizes(a, b, guard)?;
    let mut best = u64::MAX;
    let mut divisible = true;
    for f in permutations(a.n()) {
        let c = quadruple_disagreements(a, b, &f);
        divisible &= c.is_multiple_of(8);
        best = best.min(c);
    }
    Ok((best / 8, divisible))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MetricProbeReport {
    pub spaces: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub symmetry_violations: Vec<(usize, usize)>,
    /// `d = 0` without isomorphism or the reverse
    pub identity_violations: Vec<(usize, usize)>,
    pub triangle_violations: Vec<(usize, usize, usize)>,
}

impl MetricProbeReport {
    pub fn is_clean(&self) -> bool {
        self.symmetry_violations.is_empty()
            && self.identity_violations.is_empty()
            && self.triangle_violations.is_empty()
    }
}

/// Checks the metric axioms of `d_ord` on a sample: symmetry and
/// identity of indiscernibles on every pair touched, the triangle inequality
/// `d(i,k) ≤ d(i,j) + d(j,k)` on the given index triples.
pub fn d_ord_metric_probe(
    spaces: &[OrdinalSpace],
    triples: &[(usize, usize, usize)],
    guard: Guard,
) -> Result<MetricProbeReport> {
    let mut report = MetricProbeReport {
        spaces: spaces.len(),
        ..Default::default()
    };
    let mut cache: HashMap<(usize, usize), u64> = HashMap::new();
    let mut dist = |i: usize, j: usize, report: &mut MetricProbeReport| -> Result<u64> {
        let key = (i.min(j), i.max(j));
        if let Some(&v) = cache.get(&key) {
            return Ok(v);
        }
        let (a, b) = (&spaces[key.0], &spaces[key.1]);
        let forward = d_ord(a, b, guard)?.value;
        let backward = d_ord(b, a, guard)?.value;
        report.pairs_checked += 1;
        if forward != backward {
            report.symmetry_violations.push(key);
        }
        if (forward == 0) != is_isomorphic(a, b).is_some() {
            report.identity_violations.push(key);
        }
        cache.insert(key, forward);
        Ok(forward)
    };
    for &(i, j, k) in triples {
        for idx in [i, j, k] {
            if idx >= spaces.len() {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    n: spaces.len(),
                });
            }
        }
        let ij = dist(i, j, &mut report)?;
        let jk = dist(j, k, &mut report)?;
        let ik = dist(i, k, &mut report)?;
        report.triples_checked += 1;
        if ik > ij + jk {
            report.triangle_violations.push((i, j, k));
        }
    }
    Ok(report)
}

/// Every ordered triple of indices below `m`.
pub fn all_triples(m: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                out.push((i, j, k));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::random_space;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn sp(n: usize, r: &[u32]) -> OrdinalSpace {
        OrdinalSpace::from_pair_ranks(n, r).unwrap()
    }

    #[test]
    fn examples() {
        let chain = sp(3, &[1, 3, 2]);
        let flat = sp(3, &[1, 1, 1]);
        let r = d_ord(&chain, &chain, Guard::default()).unwrap();
        assert_eq!((r.value, r.witness), (0, vec![0, 1, 2]));
        assert_eq!(d_ord(&chain, &flat, Guard::default()).unwrap().value, 3);
        // r(12)=1, r(13)=1, r(23)=2 in pairs order (0,1),(0,2),(1,2)
        let two_low = sp(3, &[1, 1, 2]);
        let r = d_ord(&chain, &two_low, Guard::default()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.disagreements.len(), 1);
        assert_eq!(d_ord_oracle(&chain, &two_low, Guard::default()).unwrap(), (1, true));
    }

    #[test]
    fn rejects_mismatched_sizes() {
        assert!(matches!(
            d_ord(&sp(2, &[1]), &sp(3, &[1, 1, 1]), Guard::default()),
            Err(Error::CardinalityMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn branch_and_bound_matches_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in 2..=5 {
            for _ in 0..15 {
                let a = random_space(&mut rng, n, 4);
                let b = random_space(&mut rng, n, 4);
                let r = d_ord(&a, &b, Guard::default()).unwrap();
                let (v, divisible) = d_ord_oracle(&a, &b, Guard::default()).unwrap();
                assert!(divisible);
                assert_eq!(r.value, v);
                assert_eq!(quadruple_disagreements(&a, &b, &r.witness), 8 * r.value);
                // lexicographically first optimum
                let first = permutations(n)
                    .find(|f| disagreements(&a, &b, f).len() as u64 == v)
                    .unwrap();
                assert_eq!(r.witness, first);
            }
        }
    }

    #[test]
    fn relabeling_is_distance_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let a = random_space(&mut rng, 6, 5);
        let mut p: Vec<usize> = (0..6).collect();
        p.shuffle(&mut rng);
        assert_eq!(d_ord(&a, &a.relabeled(&p), Guard::default()).unwrap().value, 0);
    }

    #[test]
    fn probe_on_a_small_sample() {
        let spaces = vec![sp(3, &[1, 3, 2]), sp(3, &[1, 1, 1]), sp(3, &[1, 1, 2]), sp(3, &[1, 2, 2])];
        let r = d_ord_metric_probe(&spaces, &all_triples(4), Guard::default()).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.triples_checked, 64);
    }
}
