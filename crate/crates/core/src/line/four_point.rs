//! Classification of four-point spaces by their line arrangement.
//!
//! With points enumerated along the line as 1..4 and `δij` the rank of
//! `{i, j}`, embeddability is equivalent to the existence of an enumeration
//! with
//!   (A) δ12 < δ13 < δ14 > δ24 > δ34 and δ23 < δ13, δ23 < δ24;
//!   (B) δ13 < δ24 ⟺ δ12 < δ34, and δ13 = δ24 ⟺ δ12 = δ34.
//! The remaining freedom splits into the cases below. Cases with
//! δ13 < δ24 are the reversal of a case with δ13 > δ24 and are tagged
//! `mirror-` plus that case.

use std::cmp::Ordering::{Equal, Greater, Less};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::permutations;
use crate::space::OrdinalSpace;

/// Case label: 1–3 for δ13 = δ24, 4–13 and 15 for δ13 > δ24.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourPointCase {
    pub case: u8,
    pub mirrored: bool,
}

impl fmt::Display for FourPointCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            write!(f, "mirror-d{}", self.case)
        } else {
            write!(f, "d{}", self.case)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourPointClass {
    Embeddable {
        case: FourPointCase,
        /// enumeration satisfying (A) and (B), lexicographically first
        enumeration: Vec<usize>,
    },
    NotEmbeddable,
}

impl FourPointClass {
    pub fn is_embeddable(&self) -> bool {
        matches!(self, FourPointClass::Embeddable { .. })
    }

    pub fn case(&self) -> Option<FourPointCase> {
        match self {
            FourPointClass::Embeddable { case, .. } => Some(*case),
            FourPointClass::NotEmbeddable => None,
        }
    }
}

impl fmt::Display for FourPointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourPointClass::Embeddable { case, .. } => write!(f, "{case}"),
            FourPointClass::NotEmbeddable => f.write_str("NOT_EMBEDDABLE"),
        }
    }
}

/// `d[i][j]` for 0-based enumeration positions.
struct Pattern([[u32; 4]; 4]);

impl Pattern {
    fn new(s: &OrdinalSpace, e: &[usize]) -> Self {
        let mut d = [[0; 4]; 4];
        for (i, row) in d.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = s.rank(e[i], e[j]);
            }
        }
        Pattern(d)
    }

    /// 1-based access
    fn d(&self, i: usize, j: usize) -> u32 {
        self.0[i - 1][j - 1]
    }

    fn satisfies_conditions(&self) -> bool {
        let d = |i, j| self.d(i, j);
        let chain = d(1, 2) < d(1, 3)
            && d(1, 3) < d(1, 4)
            && d(1, 4) > d(2, 4)
            && d(2, 4) > d(3, 4)
            && d(2, 3) < d(1, 3)
            && d(2, 3) < d(2, 4);
        let linked = (d(1, 3) < d(2, 4)) == (d(1, 2) < d(3, 4))
            && (d(1, 3) == d(2, 4)) == (d(1, 2) == d(3, 4));
        chain && linked
    }

    /// Case number when δ13 ≥ δ24; assumes the conditions hold.
    fn case(&self) -> u8 {
        let d = |i, j| self.d(i, j);
        let by_23_34 = |base: u8| {
            base + match d(2, 3).cmp(&d(3, 4)) {
                Greater => 0,
                Equal => 1,
                Less => 2,
            }
        };
        if d(1, 3) == d(2, 4) {
            return match d(2, 3).cmp(&d(1, 2)) {
                Greater => 1,
                Equal => 2,
                Less => 3,
            };
        }
        match d(1, 2).cmp(&d(2, 4)) {
            Greater => by_23_34(4),
            Equal => by_23_34(7),
            Less => match d(1, 2).cmp(&d(2, 3)) {
                Greater => by_23_34(10),
                Equal => 13,
                Less => 15,
            },
        }
    }
}

/// Searches the 24 enumerations in lexicographic order for one satisfying
/// conditions (A) and (B) and names the case it falls into.
pub fn classify_four_point(s: &OrdinalSpace) -> Result<FourPointClass> {
    if s.n() != 4 {
        return Err(Error::InvalidArgument(format!(
            "classification needs exactly 4 points, got {}",
            s.n()
        )));
    }
    for e in permutations(4) {
        let p = Pattern::new(s, &e);
        if !p.satisfies_conditions() {
            continue;
        }
        let case = if p.d(1, 3) >= p.d(2, 4) {
            FourPointCase {
                case: p.case(),
                mirrored: false,
            }
        } else {
            let reversed: Vec<usize> = e.iter().rev().copied().collect();
            FourPointCase {
                case: Pattern::new(s, &reversed).case(),
                mirrored: true,
            }
        };
        return Ok(FourPointClass::Embeddable {
            case,
            enumeration: e,
        });
    }
    Ok(FourPointClass::NotEmbeddable)
}
