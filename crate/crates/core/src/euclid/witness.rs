//! Exact point configurations in `R^d`.
//!
//! Coordinates are stored as rational coefficients against per-axis weights:
//! the actual coordinate along axis `l` is `coords[i][l] · sqrt(axis_weights[l])`.
//! Squared distances are then rational, which is all an ordinal comparison
//! needs. Perfect-square weights are folded into the coefficients.

use num_traits::{One, Signed, Zero};

use crate::rational::{exact_sqrt, to_f64, Q};
use crate::space::{pairs, OrdinalSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidWitness {
    pub dim: usize,
    pub coords: Vec<Vec<Q>>,
    pub axis_weights: Vec<Q>,
    pub verified: bool,
}

impl EuclidWitness {
    pub fn new(coords: Vec<Vec<Q>>, axis_weights: Vec<Q>) -> Self {
        let dim = axis_weights.len();
        let mut w = EuclidWitness {
            dim,
            coords,
            axis_weights,
            verified: false,
        };
        w.fold_square_weights();
        w
    }

    fn fold_square_weights(&mut self) {
        for l in 0..self.dim {
            if self.axis_weights[l].is_one() {
                continue;
            }
            if let Some(root) = exact_sqrt(&self.axis_weights[l]) {
                for row in &mut self.coords {
                    row[l] *= &root;
                }
                self.axis_weights[l] = Q::one();
            }
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn squared_distance(&self, i: usize, j: usize) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, l| {
            let diff = &self.coords[i][l] - &self.coords[j][l];
            acc + &self.axis_weights[l] * &diff * &diff
        })
    }

    /// Whether the configuration has exactly the comparisons of `s`: all
    /// points distinct and squared distances ordered like the ranks.
    pub fn reproduces(&self, s: &OrdinalSpace) -> bool {
        if self.n() != s.n() {
            return false;
        }
        if s.n() == 1 {
            return true;
        }
        let ps = pairs(s.n());
        let sq: Vec<Q> = ps.iter().map(|&(i, j)| self.squared_distance(i, j)).collect();
        if sq.iter().any(|v| !v.is_positive()) {
            return false;
        }
        let mut idx: Vec<usize> = (0..ps.len()).collect();
        idx.sort_by(|&a, &b| sq[a].cmp(&sq[b]));
        // consecutive pairs in sorted order must compare exactly like their ranks
        idx.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            let (ra, rb) = (s.rank(ps[a].0, ps[a].1), s.rank(ps[b].0, ps[b].1));
            sq[a].cmp(&sq[b]) == ra.cmp(&rb)
        }) && s.rank(ps[idx[0]].0, ps[idx[0]].1) == 1
    }

    /// Re-checks against `s` and records the outcome.
    pub fn verify(mut self, s: &OrdinalSpace) -> Self {
        self.verified = self.reproduces(s);
        self
    }

    pub fn float_coords(&self) -> Vec<Vec<f64>> {
        let roots: Vec<f64> = self.axis_weights.iter().map(|w| to_f64(w).sqrt()).collect();
        self.coords
            .iter()
            .map(|row| row.iter().zip(&roots).map(|(c, r)| to_f64(c) * r).collect())
            .collect()
    }
}

/// Factors a symmetric rational matrix as `Σ_l w_l c_l c_lᵀ` with `w_l > 0`
/// by LDLᵀ elimination with diagonal pivoting. Returns `None` unless the
/// matrix is positive semidefinite; the number of returned axes is its rank.
/// Row `i` of the coefficient matrix belongs to row `i` of the input.
pub fn psd_factor(g: &[Vec<Q>]) -> Option<(Vec<Vec<Q>>, Vec<Q>)> {
    let m = g.len();
    let mut a: Vec<Vec<Q>> = g.to_vec();
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut coeffs: Vec<Vec<Q>> = vec![Vec::new(); m];
    let mut weights = Vec::new();
    while !remaining.is_empty() {
        if remaining.iter().any(|&i| a[i][i].is_negative()) {
            return None;
        }
        let Some(pos) = remaining.iter().position(|&i| a[i][i].is_positive()) else {
            // all remaining diagonal entries vanish: the rest must be zero
            let zero = remaining
                .iter()
                .all(|&i| remaining.iter().all(|&j| a[i][j].is_zero()));
            if !zero {
                return None;
            }
            break;
        };
        let p = remaining.remove(pos);
        let d = a[p][p].clone();
        for i in 0..m {
            coeffs[i].push(Q::zero());
        }
        let l = weights.len();
        coeffs[p][l] = Q::one();
        for &i in &remaining {
            coeffs[i][l] = &a[i][p] / &d;
        }
        for &i in &remaining {
            for &j in &remaining {
                let v = &a[i][p] * &a[p][j] / &d;
                a[i][j] -= v;
            }
        }
        weights.push(d);
    }
    Some((coeffs, weights))
}

/// Configuration with point 0 at the origin realizing the given squared
/// distances, if one exists in some `R^r`; `r` is the rank of the Gram
/// matrix `G_ij = (s_0i + s_0j − s_ij)/2`.
pub fn from_squared_distances(sq: &[Vec<Q>]) -> Option<EuclidWitness> {
    let n = sq.len();
    if n == 1 {
        return Some(EuclidWitness::new(vec![Vec::new()], Vec::new()));
    }
    let two = Q::from_integer(2.into());
    let g: Vec<Vec<Q>> = (1..n)
        .map(|i| (1..n).map(|j| (&sq[0][i] + &sq[0][j] - &sq[i][j]) / &two).collect())
        .collect();
    let (c, w) = psd_factor(&g)?;
    let r = w.len();
    let mut coords = vec![vec![Q::zero(); r]];
    coords.extend(c);
    Some(EuclidWitness::new(coords, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn equilateral_triangle() {
        let sq = vec![
            vec![int(0), int(1), int(1)],
            vec![int(1), int(0), int(1)],
            vec![int(1), int(1), int(0)],
        ];
        let w = from_squared_distances(&sq).unwrap();
        assert_eq!(w.dim, 2);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(w.squared_distance(i, j), sq[i][j]);
            }
        }
        // second axis carries sqrt(3/4), which is not rational
        assert_eq!(w.axis_weights, vec![int(1), ratio(3, 4)]);
    }

    #[test]
    fn collinear_points_have_rank_one() {
        let pts = [0i64, 1, 3];
        let sq: Vec<Vec<Q>> = pts
            .iter()
            .map(|a| pts.iter().map(|b| int((a - b) * (a - b))).collect())
            .collect();
        let w = from_squared_distances(&sq).unwrap();
        assert_eq!(w.dim, 1);
        assert_eq!(w.coords, vec![vec![int(0)], vec![int(1)], vec![int(3)]]);
    }

    #[test]
    fn violated_triangle_is_rejected() {
        let sq = vec![
            vec![int(0), int(1), int(9)],
            vec![int(1), int(0), int(1)],
            vec![int(9), int(1), int(0)],
        ];
        assert!(from_squared_distances(&sq).is_none());
    }

    #[test]
    fn indefinite_with_zero_diagonal() {
        assert!(psd_factor(&[vec![int(0), int(1)], vec![int(1), int(0)]]).is_none());
        let (c, w) = psd_factor(&[vec![int(0), int(0)], vec![int(0), int(4)]]).unwrap();
        assert_eq!(w, vec![int(4)]);
        assert_eq!(c, vec![vec![int(0)], vec![int(1)]]);
    }
}
