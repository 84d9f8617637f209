//! Canonical forms and isomorphism of ordinal spaces.
//!
//! Levels are normalized, so two spaces are isomorphic exactly when some
//! relabelling of points makes the rank matrices equal.

use crate::error::Result;
use crate::guard::Guard;
use crate::space::{ordinal_type, DistanceMatrix, OrdinalSpace};

/// Flattening order used for comparisons: the upper triangle column by
/// column, `(0,1), (0,2), (1,2), (0,3), ...`. Fixing the first `j` points of
/// a relabelling fixes the first `j(j-1)/2` entries, which is what makes
/// prefix pruning possible.
fn column_entries(s: &OrdinalSpace, perm: &[usize], j: usize, out: &mut Vec<u32>) {
    let v = perm[j];
    for &u in &perm[..j] {
        out.push(s.rank(u, v));
    }
}

/// The relabelling of `s` whose upper-triangle rank sequence is
/// lexicographically smallest, together with one relabelling attaining it
/// (`perm[i]` is the old point placed at position `i`).
pub fn canonical_labeling(s: &OrdinalSpace, guard: Guard) -> Result<(OrdinalSpace, Vec<usize>)> {
    let n = s.n();
    guard.check("canonical form", n)?;
    if n <= 1 {
        return Ok((s.clone(), (0..n).collect()));
    }
    let mut search = CanonSearch {
        s,
        best: None,
        best_perm: Vec::new(),
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        cur: Vec::with_capacity(n * (n - 1) / 2),
    };
    search.extend();
    let perm = search.best_perm;
    Ok((s.relabeled(&perm), perm))
}

pub fn canonical_form(s: &OrdinalSpace, guard: Guard) -> Result<OrdinalSpace> {
    canonical_labeling(s, guard).map(|(c, _)| c)
}

struct CanonSearch<'a> {
    s: &'a OrdinalSpace,
    best: Option<Vec<u32>>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<u32>,
}

impl CanonSearch<'_> {
    fn extend(&mut self) {
        let n = self.s.n();
        let j = self.perm.len();
        if j == n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
                self.best_perm = self.perm.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mark = self.cur.len();
            self.perm.push(v);
            column_entries(self.s, &self.perm, j, &mut self.cur);
            let keep = match &self.best {
                Some(b) => self.cur[..] <= b[..self.cur.len()],
                None => true,
            };
            if keep {
                self.used[v] = true;
                self.extend();
                self.used[v] = false;
            }
            self.perm.pop();
            self.cur.truncate(mark);
        }
    }
}

/// An isomorphism `a → b` (point `i` of `a` goes to `witness[i]` of `b`), or
/// `None`.
pub fn is_isomorphic(a: &OrdinalSpace, b: &OrdinalSpace) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.k() != b.k() {
        return None;
    }
    let n = a.n();
    let signature = |s: &OrdinalSpace, i: usize| {
        let mut r = s.row(i).to_vec();
        r.sort_unstable();
        r
    };
    let sig_a: Vec<Vec<u32>> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<Vec<u32>> = (0..n).map(|i| signature(b, i)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if match_points(a, b, &sig_a, &sig_b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn match_points(
    a: &OrdinalSpace,
    b: &OrdinalSpace,
    sig_a: &[Vec<u32>],
    sig_b: &[Vec<u32>],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = map.len();
    if i == a.n() {
        return true;
    }
    for v in 0..b.n() {
        if used[v] || sig_a[i] != sig_b[v] {
            continue;
        }
        if (0..i).all(|j| a.rank(j, i) == b.rank(map[j], v)) {
            used[v] = true;
            map.push(v);
            if match_points(a, b, sig_a, sig_b, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
    }
    false
}

/// Two semimetrics are weakly similar iff their ordinal types are isomorphic.
pub fn weakly_similar(d1: &DistanceMatrix, d2: &DistanceMatrix) -> bool {
    is_isomorphic(&ordinal_type(d1), &ordinal_type(d2)).is_some()
}
