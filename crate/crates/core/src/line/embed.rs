//! Exact decision of embeddability in the real line.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::perm::permutations;
use crate::rational::{int, Q};
use crate::space::{ordinal_type, pairs, DistanceMatrix, OrdinalSpace};

use super::lp::{solve, Constraint, LinearProgram, LpOutcome, Sense};

/// Points placed left to right in `ordering`, consecutive coordinates
/// differing by `gaps`; `margin` is the smallest gap and the smallest
/// difference between adjacent rank levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineWitness {
    pub ordering: Vec<usize>,
    pub gaps: Vec<Q>,
    pub margin: Q,
}

impl LineWitness {
    /// Coordinate of each point, indexed by point.
    pub fn coordinates(&self) -> Vec<Q> {
        let mut coords = vec![Q::zero(); self.ordering.len()];
        let mut x = Q::zero();
        for (i, &p) in self.ordering.iter().enumerate() {
            if i > 0 {
                x += &self.gaps[i - 1];
            }
            coords[p] = x.clone();
        }
        coords
    }

    pub fn distances(&self) -> Result<DistanceMatrix> {
        DistanceMatrix::from_line(&self.coordinates())
    }
}

/// Some placement of the points on a line realizing `s` exactly, or `None`
/// when no ordering admits one.
///
/// Orderings are tried in lexicographic order with each reversal skipped.
/// Two exact necessary conditions discard an ordering before any LP is
/// built: the outermost pair must be the only pair at the top rank, and a
/// span strictly containing another must have strictly larger rank.
pub fn embed_line(s: &OrdinalSpace, guard: Guard) -> Result<Option<LineWitness>> {
    let n = s.n();
    guard.check("line embedding", n)?;
    if n == 1 {
        return Ok(Some(LineWitness {
            ordering: vec![0],
            gaps: Vec::new(),
            margin: Q::one(),
        }));
    }
    let candidates: Vec<Vec<usize>> = permutations(n)
        .filter(|p| p[0] < p[n - 1] && nested_spans_grow(s, p))
        .collect();
    let found = candidates
        .par_iter()
        .map(|p| witness_for_ordering(s, p))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        None => Ok(None),
        Some(r) => r,
    }
}

/// Rank of the span between positions `i < j` exceeds the ranks of the two
/// spans obtained by dropping one endpoint. Implies the outer pair is the
/// unique maximum.
pub(crate) fn nested_spans_grow(s: &OrdinalSpace, ordering: &[usize]) -> bool {
    let n = ordering.len();
    for len in 2..n {
        for i in 0..n - len {
            let j = i + len;
            let outer = s.rank(ordering[i], ordering[j]);
            if outer <= s.rank(ordering[i + 1], ordering[j])
                || outer <= s.rank(ordering[i], ordering[j - 1])
            {
                return false;
            }
        }
    }
    true
}

/// Margin LP for one ordering: gaps `g ≥ t`, pairs of one rank at equal
/// length, adjacent ranks at least `t` apart, `Σg = 1`; maximize `t`.
pub fn witness_for_ordering(s: &OrdinalSpace, ordering: &[usize]) -> Result<Option<LineWitness>> {
    let n = s.n();
    let m = n - 1;
    let t = m;
    let mut pos = vec![0usize; n];
    for (i, &p) in ordering.iter().enumerate() {
        pos[p] = i;
    }
    // span of a pair as 0/1 coefficients over gaps
    let span = |a: usize, b: usize| -> Vec<i64> {
        let (lo, hi) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        (0..m).map(|g| i64::from(g >= lo && g < hi)).collect()
    };
    let mut by_rank: Vec<Vec<(usize, usize)>> = vec![Vec::new(); s.k() as usize + 1];
    for (a, b) in pairs(n) {
        by_rank[s.rank(a, b) as usize].push((a, b));
    }
    let row = |coeffs: Vec<i64>, t_coeff: i64, sense: Sense, rhs: i64| {
        let mut c: Vec<Q> = coeffs.into_iter().map(int).collect();
        c.push(int(t_coeff));
        Constraint {
            coeffs: c,
            sense,
            rhs: int(rhs),
        }
    };
    let diff = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(a, b)| a - b).collect() };

    let mut constraints = Vec::new();
    for g in 0..m {
        let mut e = vec![0i64; m];
        e[g] = 1;
        constraints.push(row(e, -1, Sense::Ge, 0));
    }
    for class in &by_rank[1..] {
        let first = span(class[0].0, class[0].1);
        for &(a, b) in &class[1..] {
            constraints.push(row(diff(&span(a, b), &first), 0, Sense::Eq, 0));
        }
    }
    for r in 1..s.k() as usize {
        let (lo, hi) = (by_rank[r][0], by_rank[r + 1][0]);
        constraints.push(row(diff(&span(hi.0, hi.1), &span(lo.0, lo.1)), -1, Sense::Ge, 0));
    }
    constraints.push(row(vec![1; m], 0, Sense::Eq, 1));

    let mut objective = vec![Q::zero(); m + 1];
    objective[t] = Q::one();
    let lp = LinearProgram {
        num_vars: m + 1,
        objective,
        constraints,
    };
    match solve(&lp)? {
        LpOutcome::Optimal { point, value } if value.is_positive() => {
            let witness = LineWitness {
                ordering: ordering.to_vec(),
                gaps: point[..m].to_vec(),
                margin: value,
            };
            if ordinal_type(&witness.distances()?) != *s {
                return Err(Error::Solver(format!(
                    "LP optimum for ordering {ordering:?} fails exact verification"
                )));
            }
            Ok(Some(witness))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(Error::Solver("margin LP reported unbounded".into())),
    }
}
