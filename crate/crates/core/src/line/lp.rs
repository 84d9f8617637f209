//! Dense two-phase simplex over exact rationals.
//!
//! Variables are nonnegative; the objective is maximized. Pivoting follows
//! Bland's rule, so the method terminates without cycling.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub sense: Sense,
    pub rhs: Q,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { point: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

const MAX_PIVOTS: usize = 1_000_000;

struct Tableau {
    rows: Vec<Vec<Q>>,
    /// reduced costs; last entry is minus the objective value
    costs: Vec<Q>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Q>| {
            let f = row[c].clone();
            if !f.is_zero() {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.costs);
        self.basis[r] = c;
    }

    fn set_costs(&mut self, cost: &[Q]) {
        let w = self.width();
        let mut costs = vec![Q::zero(); w];
        costs[..cost.len()].clone_from_slice(cost);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = cost.get(b).cloned().unwrap_or_else(Q::zero);
            if !cb.is_zero() {
                for (c, v) in costs.iter_mut().zip(row) {
                    *c -= &cb * v;
                }
            }
        }
        self.costs = costs;
    }

    /// Runs the simplex on the columns marked `allowed`. Returns false when
    /// the objective is unbounded.
    fn optimize(&mut self, allowed: &[bool]) -> Result<bool> {
        let rhs = self.width() - 1;
        for _ in 0..MAX_PIVOTS {
            let Some(c) = (0..rhs).find(|&j| allowed[j] && self.costs[j].is_positive()) else {
                return Ok(true);
            };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => {
                            ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Ok(false),
            }
        }
        Err(Error::Solver(format!("no convergence after {MAX_PIVOTS} pivots")))
    }
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.num_vars;
    if lp.objective.len() != n || lp.constraints.iter().any(|c| c.coeffs.len() != n) {
        return Err(Error::Solver("coefficient vector length does not match variable count".into()));
    }
    // rows with nonnegative right-hand sides
    let rows: Vec<(Vec<Q>, Sense, Q)> = lp
        .constraints
        .iter()
        .map(|c| {
            if c.rhs.is_negative() {
                let flipped = match c.sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
                (c.coeffs.iter().map(|v| -v).collect(), flipped, -c.rhs.clone())
            } else {
                (c.coeffs.clone(), c.sense, c.rhs.clone())
            }
        })
        .collect();
    let slacks = rows.iter().filter(|r| r.1 != Sense::Eq).count();
    let artificials = rows.iter().filter(|r| r.1 != Sense::Le).count();
    let width = n + slacks + artificials + 1;
    let first_artificial = n + slacks;

    let mut tab = Tableau {
        rows: Vec::with_capacity(rows.len()),
        costs: Vec::new(),
        basis: Vec::with_capacity(rows.len()),
        width,
    };
    let (mut next_slack, mut next_art) = (n, first_artificial);
    for (coeffs, sense, rhs) in rows {
        let mut row = vec![Q::zero(); width];
        row[..n].clone_from_slice(&coeffs);
        row[width - 1] = rhs;
        match sense {
            Sense::Le => {
                row[next_slack] = Q::one();
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Sense::Ge => {
                row[next_slack] = -Q::one();
                next_slack += 1;
                row[next_art] = Q::one();
                tab.basis.push(next_art);
                next_art += 1;
            }
            Sense::Eq => {
                row[next_art] = Q::one();
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(row);
    }

    if artificials > 0 {
        let mut phase1 = vec![Q::zero(); width - 1];
        for c in phase1.iter_mut().skip(first_artificial) {
            *c = -Q::one();
        }
        tab.set_costs(&phase1);
        let all = vec![true; width - 1];
        tab.optimize(&all)?;
        // remaining value is -(sum of artificials)
        if !tab.costs[width - 1].is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // drive zero-valued artificials out of the basis; rows where that is
        // impossible are redundant
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= first_artificial {
                match (0..first_artificial).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(c) => {
                        tab.pivot(r, c);
                        r += 1;
                    }
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    tab.set_costs(&lp.objective);
    let allowed: Vec<bool> = (0..width - 1).map(|j| j < first_artificial).collect();
    if !tab.optimize(&allowed)? {
        return Ok(LpOutcome::Unbounded);
    }
    let mut point = vec![Q::zero(); n];
    for (row, &b) in tab.rows.iter().zip(&tab.basis) {
        if b < n {
            point[b] = row[width - 1].clone();
        }
    }
    let value = point
        .iter()
        .zip(&lp.objective)
        .fold(Q::zero(), |acc, (x, c)| acc + x * c);
    Ok(LpOutcome::Optimal { point, value })
}
