//! Embeddability in Euclidean spaces of higher dimension.

mod cayley;
mod heuristic;
mod menger;
mod planar;
mod simplex;
mod witness;

pub use cayley::{bareiss_determinant, blumenthal_check, cayley_menger, BlumenthalCheck, CMResult};
pub use heuristic::{embed_heuristic, HeuristicBudget, HeuristicOutcome};
pub use menger::{decide_embeddable, menger_probe, MengerReport, Verdict};
pub use planar::{check_r2_necessary, dp_pairs, smallest_class_bound, BoundCheck, R2Report};
pub use simplex::{realize_simplex, MAX_RETRIES};
pub use witness::{from_squared_distances, psd_factor, EuclidWitness};
