//! Empirical check of whether embeddability in `R^d` is decided by the
//! subsets of at most `d + 3` points.

use std::fmt;

use crate::error::Result;
use crate::guard::Guard;
use crate::line::embed_line;
use crate::space::OrdinalSpace;

use super::heuristic::{embed_heuristic, HeuristicBudget};
use super::planar::check_r2_necessary;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Embeddable,
    NotEmbeddable,
    /// heuristic search failed and no necessary condition refutes
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Embeddable => "embeddable",
            Verdict::NotEmbeddable => "not embeddable",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MengerReport {
    pub dim: usize,
    pub max_subset: usize,
    pub subsets_checked: usize,
    pub refuted: Vec<Vec<usize>>,
    pub inconclusive: Vec<Vec<usize>>,
    pub whole: Verdict,
}

impl MengerReport {
    /// Every small subset embeds (with certainty) but the whole space does
    /// not: a counterexample to the subset criterion.
    pub fn is_counterexample(&self) -> bool {
        self.refuted.is_empty() && self.inconclusive.is_empty() && self.whole == Verdict::NotEmbeddable
    }

    /// A refuted subset refutes the whole space.
    pub fn consistent(&self) -> bool {
        self.refuted.is_empty() || self.whole != Verdict::Embeddable
    }
}

/// Exact for `dim = 1`; otherwise a verified heuristic witness proves
/// embeddability and, in the plane, the counting bounds can refute it.
/// Up to `dim + 1` points always embed.
pub fn decide_embeddable(s: &OrdinalSpace, dim: usize, guard: Guard, budget: HeuristicBudget) -> Result<Verdict> {
    if s.n() <= dim + 1 {
        return Ok(Verdict::Embeddable);
    }
    if dim == 1 {
        return Ok(if embed_line(s, guard)?.is_some() {
            Verdict::Embeddable
        } else {
            Verdict::NotEmbeddable
        });
    }
    if dim == 2 && !check_r2_necessary(s).all_hold() {
        return Ok(Verdict::NotEmbeddable);
    }
    Ok(if embed_heuristic(s, dim, budget).witness.is_some() {
        Verdict::Embeddable
    } else {
        Verdict::Inconclusive
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn menger_probe(s: &OrdinalSpace, dim: usize, guard: Guard, budget: HeuristicBudget) -> Result<MengerReport> {
    guard.check("subset probe", s.n())?;
    let max_subset = (dim + 3).min(s.n());
    let mut report = MengerReport {
        dim,
        max_subset,
        subsets_checked: 0,
        refuted: Vec::new(),
        inconclusive: Vec::new(),
        whole: decide_embeddable(s, dim, guard, budget)?,
    };
    for size in 2..=max_subset {
        for subset in combinations(s.n(), size) {
            report.subsets_checked += 1;
            if size <= dim + 1 {
                continue;
            }
            match decide_embeddable(&s.subspace(&subset), dim, guard, budget)? {
                Verdict::Embeddable => {}
                Verdict::NotEmbeddable => report.refuted.push(subset),
                Verdict::Inconclusive => report.inconclusive.push(subset),
            }
        }
    }
    Ok(report)
}
