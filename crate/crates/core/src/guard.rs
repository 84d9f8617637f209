use crate::error::{Error, Result};

/// Size limit for the factorial-time searches (relabelings, orderings,
/// bijections). Raising it is always an explicit caller decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_points: usize,
    /// vertex limit for digraph isomorphism searches
    pub max_vertices: usize,
}

impl Guard {
    pub const DEFAULT_MAX_POINTS: usize = 8;
    pub const DEFAULT_MAX_VERTICES: usize = 64;

    pub fn new(max_points: usize) -> Self {
        Guard {
            max_points,
            ..Guard::default()
        }
    }

    pub fn check(self, what: &'static str, n: usize) -> Result<()> {
        check_limit(what, n, self.max_points)
    }

    pub fn check_vertices(self, what: &'static str, v: usize) -> Result<()> {
        check_limit(what, v, self.max_vertices)
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_points: Self::DEFAULT_MAX_POINTS,
            max_vertices: Self::DEFAULT_MAX_VERTICES,
        }
    }
}

fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}
