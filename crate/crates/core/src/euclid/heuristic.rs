//! Randomized search for a configuration in `R^d` with a prescribed ordinal
//! type. A found configuration is only reported after exact verification;
//! failing to find one proves nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{approximate, Q};
use crate::space::{pairs, OrdinalSpace};

use super::witness::{from_squared_distances, EuclidWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicBudget {
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for HeuristicBudget {
    fn default() -> Self {
        HeuristicBudget {
            restarts: 32,
            iterations: 3000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicOutcome {
    /// verified witness, if any
    pub witness: Option<EuclidWitness>,
    pub restarts_used: usize,
    pub best_loss: f64,
}

const CHECK_EVERY: usize = 50;
const DENOMINATORS: [u64; 10] = [1, 2, 4, 8, 16, 64, 256, 1 << 12, 1 << 16, 1 << 20];

struct Problem {
    n: usize,
    dim: usize,
    pairs: Vec<(usize, usize)>,
    /// pair indices per rank level, index 0 unused
    classes: Vec<Vec<usize>>,
    margin: f64,
}

impl Problem {
    fn new(s: &OrdinalSpace, dim: usize) -> Self {
        let ps = pairs(s.n());
        let mut classes = vec![Vec::new(); s.k() as usize + 1];
        for (a, &(i, j)) in ps.iter().enumerate() {
            classes[s.rank(i, j) as usize].push(a);
        }
        Problem {
            n: s.n(),
            dim,
            margin: 1.0 / (2.0 * s.k().max(1) as f64 * s.n() as f64),
            pairs: ps,
            classes,
        }
    }

    fn squared(&self, x: &[f64]) -> Vec<f64> {
        self.pairs
            .iter()
            .map(|&(i, j)| {
                (0..self.dim)
                    .map(|l| {
                        let t = x[i * self.dim + l] - x[j * self.dim + l];
                        t * t
                    })
                    .sum()
            })
            .collect()
    }

    /// Squared hinge between adjacent levels plus spread within each level,
    /// on squared distances; gradient with respect to the coordinates.
    fn loss_and_grad(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        let sq = self.squared(x);
        let mut g_sq = vec![0.0; sq.len()];
        let mut loss = 0.0;
        for r in 1..self.classes.len().saturating_sub(1) {
            for &p in &self.classes[r] {
                for &q in &self.classes[r + 1] {
                    let h = self.margin + sq[p] - sq[q];
                    if h > 0.0 {
                        loss += h * h;
                        g_sq[p] += 2.0 * h;
                        g_sq[q] -= 2.0 * h;
                    }
                }
            }
        }
        for class in &self.classes[1..] {
            let mean = class.iter().map(|&p| sq[p]).sum::<f64>() / class.len() as f64;
            for &p in class {
                let dev = sq[p] - mean;
                loss += dev * dev;
                g_sq[p] += 2.0 * dev;
            }
        }
        grad.iter_mut().for_each(|g| *g = 0.0);
        for (a, &(i, j)) in self.pairs.iter().enumerate() {
            if g_sq[a] == 0.0 {
                continue;
            }
            for l in 0..self.dim {
                let t = 2.0 * (x[i * self.dim + l] - x[j * self.dim + l]) * g_sq[a];
                grad[i * self.dim + l] += t;
                grad[j * self.dim + l] -= t;
            }
        }
        loss
    }

    /// Centers the configuration and scales the largest squared distance to 1.
    fn normalize(&self, x: &mut [f64]) {
        for l in 0..self.dim {
            let mean = (0..self.n).map(|i| x[i * self.dim + l]).sum::<f64>() / self.n as f64;
            (0..self.n).for_each(|i| x[i * self.dim + l] -= mean);
        }
        let max = self.squared(x).into_iter().fold(0.0, f64::max);
        if max > 0.0 {
            let f = max.sqrt().recip();
            x.iter_mut().for_each(|v| *v *= f);
        }
    }
}

/// Rounds coordinates onto dyadic grids of growing resolution.
fn verify_by_rounding(s: &OrdinalSpace, p: &Problem, x: &[f64]) -> Option<EuclidWitness> {
    for &den in &DENOMINATORS[3..] {
        let scale = den as f64;
        let coords: Vec<Vec<Q>> = (0..p.n)
            .map(|i| {
                (0..p.dim)
                    .map(|l| Q::new(((x[i * p.dim + l] * scale).round() as i64).into(), (den as i64).into()))
                    .collect()
            })
            .collect();
        let w = EuclidWitness::new(coords, vec![Q::from_integer(1.into()); p.dim]).verify(s);
        if w.verified {
            return Some(w);
        }
    }
    None
}

/// Replaces every squared distance by its level average, snaps the averages
/// (relative to the top level) to nearby simple fractions, and accepts when
/// the resulting exact squared-distance matrix is realizable in `R^dim`.
fn verify_by_snapping(s: &OrdinalSpace, p: &Problem, x: &[f64]) -> Option<EuclidWitness> {
    let sq = p.squared(x);
    let levels: Vec<f64> = p.classes[1..]
        .iter()
        .map(|c| c.iter().map(|&a| sq[a]).sum::<f64>() / c.len() as f64)
        .collect();
    let top = *levels.last()?;
    if top <= 0.0 {
        return None;
    }
    for &den in &DENOMINATORS {
        let snapped: Option<Vec<Q>> = levels.iter().map(|v| approximate(v / top, den)).collect();
        let snapped = snapped?;
        if snapped.windows(2).any(|w| w[0] >= w[1]) || snapped[0] <= Q::from_integer(0.into()) {
            continue;
        }
        let n = p.n;
        let mut m = vec![vec![Q::from_integer(0.into()); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[i][j] = snapped[s.rank(i, j) as usize - 1].clone();
                }
            }
        }
        if let Some(w) = from_squared_distances(&m) {
            if w.dim <= p.dim {
                let w = pad(w, p.dim).verify(s);
                if w.verified {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn pad(mut w: EuclidWitness, dim: usize) -> EuclidWitness {
    for row in &mut w.coords {
        row.resize(dim, Q::from_integer(0.into()));
    }
    w.axis_weights.resize(dim, Q::from_integer(1.into()));
    w.dim = dim;
    w
}

/// Adam descent from random starts. Deterministic for a fixed budget.
pub fn embed_heuristic(s: &OrdinalSpace, dim: usize, budget: HeuristicBudget) -> HeuristicOutcome {
    let n = s.n();
    if n == 1 || dim == 0 {
        let witness = (n == 1).then(|| pad(EuclidWitness::new(vec![Vec::new()], Vec::new()), dim).verify(s));
        return HeuristicOutcome {
            witness,
            restarts_used: 0,
            best_loss: 0.0,
        };
    }
    let p = Problem::new(s, dim);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let size = n * dim;
    let mut best_loss = f64::INFINITY;
    let (lr, b1, b2, eps) = (0.01, 0.9, 0.999, 1e-12);
    for restart in 0..budget.restarts {
        let mut x: Vec<f64> = (0..size).map(|_| rng.gen_range(-1.0..1.0)).collect();
        p.normalize(&mut x);
        let (mut m, mut v, mut grad) = (vec![0.0; size], vec![0.0; size], vec![0.0; size]);
        for it in 1..=budget.iterations {
            let loss = p.loss_and_grad(&x, &mut grad);
            best_loss = best_loss.min(loss);
            if it % CHECK_EVERY == 0 || loss == 0.0 {
                if let Some(w) = verify_by_rounding(s, &p, &x).or_else(|| verify_by_snapping(s, &p, &x)) {
                    return HeuristicOutcome {
                        witness: Some(w),
                        restarts_used: restart + 1,
                        best_loss,
                    };
                }
            }
            let t = it as i32;
            for i in 0..size {
                m[i] = b1 * m[i] + (1.0 - b1) * grad[i];
                v[i] = b2 * v[i] + (1.0 - b2) * grad[i] * grad[i];
                let mh = m[i] / (1.0 - b1.powi(t));
                let vh = v[i] / (1.0 - b2.powi(t));
                x[i] -= lr * mh / (vh.sqrt() + eps);
            }
            p.normalize(&mut x);
        }
        if let Some(w) = verify_by_rounding(s, &p, &x).or_else(|| verify_by_snapping(s, &p, &x)) {
            return HeuristicOutcome {
                witness: Some(w),
                restarts_used: restart + 1,
                best_loss,
            };
        }
    }
    HeuristicOutcome {
        witness: None,
        restarts_used: budget.restarts,
        best_loss,
    }
}
