//! Realization of any finite ordinal space as an affinely independent point
//! set in `R^(n−1)`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{ratio, Q};
use crate::space::{realize_scaled, OrdinalSpace};

use super::cayley::blumenthal_check;
use super::witness::{from_squared_distances, EuclidWitness};

pub const MAX_RETRIES: u32 = 32;

/// Starts from the metric `1 + l/(2k)` and halves the spread of the
/// distances until every Cayley–Menger sign is right, then recovers
/// coordinates from the Gram matrix anchored at point 0. The returned
/// witness is re-verified exactly.
pub fn realize_simplex(s: &OrdinalSpace) -> Result<EuclidWitness> {
    let mut scale = Q::one();
    let mut failing_k = 0;
    for _ in 0..=MAX_RETRIES {
        let d = realize_scaled(s, &scale);
        let check = blumenthal_check(&d);
        match check.first_failure {
            None => {
                let n = s.n();
                let sq: Vec<Vec<Q>> = (0..n)
                    .map(|i| (0..n).map(|j| d.get(i, j) * d.get(i, j)).collect())
                    .collect();
                let w = from_squared_distances(&sq)
                    .ok_or_else(|| Error::Solver("Gram matrix of a Blumenthal-valid metric is not PSD".into()))?
                    .verify(s);
                if !w.verified || w.dim != n - 1 {
                    return Err(Error::Solver("simplex realization failed exact verification".into()));
                }
                return Ok(w);
            }
            Some(k) => {
                failing_k = k;
                scale *= ratio(1, 2);
            }
        }
    }
    Err(Error::RetryExhausted {
        retries: MAX_RETRIES,
        failing_k,
    })
}
