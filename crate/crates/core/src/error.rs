use std::fmt;

use thiserror::Error;

/// Axioms of the quadruple relation `δ(x, y, z, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `δ(x,y,x,y) = '='`
    Reflexive,
    /// swapping the points of a pair does not change the relation
    Symmetric,
    /// `δ(x,y,z,w) = -δ(z,w,x,y)`
    Antisymmetric,
    /// transitivity of `=`
    EqTransitive,
    /// `<` followed by `≤` gives `<`
    LtTransitive,
    /// `≤` followed by `<` gives `<`
    LeTransitive,
    /// self-pairs are strictly below distinct pairs
    Zero,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexive => "reflexive",
            Axiom::Symmetric => "symmetric",
            Axiom::Antisymmetric => "antisymmetric",
            Axiom::EqTransitive => "eq-transitive",
            Axiom::LtTransitive => "lt-transitive",
            Axiom::LeTransitive => "le-transitive",
            Axiom::Zero => "zero",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid distance matrix entry ({row}, {col}): {reason}")]
    InvalidDistance {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("axiom {axiom} violated by comparisons {witness:?}")]
    AxiomViolation {
        axiom: Axiom,
        /// offending comparisons as `(x, y, z, w)` point quadruples (0-based)
        witness: Vec<[usize; 4]>,
    },

    #[error("order between pair classes {first:?} and {second:?} is not determined")]
    Underdetermined {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("point index {index} out of range for a space of {n} points")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("cardinality mismatch: {left} vs {right} points")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("sequence length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid rank matrix: {0}")]
    InvalidRanks(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("linear program solver failure: {0}")]
    Solver(String),

    #[error("simplex realization failed after {retries} retries (Cayley-Menger sign check fails at k = {failing_k})")]
    RetryExhausted { retries: u32, failing_k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
