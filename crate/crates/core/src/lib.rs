//! Finite ordinal spaces: point sets carrying only `<`/`=`/`>` comparisons
//! between pairwise distances.
//!
//! Spaces are stored as normalized rank matrices (levels `0..=k`, level 0
//! only on the diagonal). Everything that decides a comparison works in
//! exact rational arithmetic; floating point appears only inside the
//! heuristic Euclidean search, whose results are re-verified exactly.

pub mod balls;
pub mod census;
pub mod error;
pub mod euclid;
pub mod guard;
pub mod io;
pub mod line;
pub mod orddist;
pub mod iso;
pub mod perm;
pub mod rational;
pub mod space;

pub use balls::{
    ball_preserving_bijection, ball_set, balls_at, hasse, hasse_isomorphic, spectrum, Ball,
    BallSet, HasseDiagram,
};
pub use error::{Axiom, Error, Result};
pub use guard::Guard;
pub use iso::{canonical_form, canonical_labeling, is_isomorphic, weakly_similar};
pub use rational::Q;
pub use space::{
    from_comparisons, ordinal_type, realize, Comparison, ComparisonList, DistanceMatrix,
    OrdinalSpace, Relation,
};
