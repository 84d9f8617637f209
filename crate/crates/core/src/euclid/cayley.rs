//! Cayley–Menger determinants and the sign condition for irreducible
//! embeddability.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::space::DistanceMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMResult {
    pub k: usize,
    pub value: Q,
    pub sign: i8,
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for c in 0..n - 1 {
        if m[c][c].is_zero() {
            match (c + 1..n).find(|&r| !m[r][c].is_zero()) {
                Some(r) => {
                    m.swap(c, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = &m[i][j] * &m[c][c] - &m[i][c] * &m[c][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
        }
        prev = m[c][c].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `D_k` of the listed points (`k = points.len() − 1`): the determinant of
/// the squared-distance matrix bordered by a zero corner and ones.
///
/// Squared distances are scaled by the common denominator `L` to make the
/// matrix integral; scaling the inner block by `L` multiplies the
/// determinant by `L^k`.
pub fn cayley_menger(d: &DistanceMatrix, points: &[usize]) -> Result<CMResult> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument("Cayley-Menger determinant needs at least two points".into()));
    }
    if let Some(&p) = points.iter().find(|&&p| p >= d.n()) {
        return Err(Error::IndexOutOfRange { index: p, n: d.n() });
    }
    let k = points.len() - 1;
    let sq: Vec<Vec<Q>> = points
        .iter()
        .map(|&i| points.iter().map(|&j| d.get(i, j) * d.get(i, j)).collect())
        .collect();
    let l = sq
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let size = k + 2;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for i in 1..size {
        m[0][i] = BigInt::one();
        m[i][0] = BigInt::one();
        for j in 1..size {
            let q = &sq[i - 1][j - 1];
            m[i][j] = q.numer() * (&l / q.denom());
        }
    }
    let det = bareiss_determinant(m);
    let value = Q::new(det, num_traits::pow(l, k));
    let sign = if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    };
    Ok(CMResult { k, value, sign })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlumenthalCheck {
    /// smallest `k` with `sgn D_k(x0..xk) ≠ (−1)^(k+1)`
    pub first_failure: Option<usize>,
}

impl BlumenthalCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `sgn D_k(x0, ..., xk) = (−1)^(k+1)` for `k = 1..n−1`, the
/// criterion for the points to sit irreducibly in `R^(n−1)`.
pub fn blumenthal_check(d: &DistanceMatrix) -> BlumenthalCheck {
    let points: Vec<usize> = (0..d.n()).collect();
    let first_failure = (1..d.n()).find(|&k| {
        let cm = cayley_menger(d, &points[..=k]).expect("valid prefix");
        let want = if k % 2 == 1 { 1 } else { -1 };
        cm.sign != want
    });
    BlumenthalCheck { first_failure }
}
