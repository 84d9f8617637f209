//! Sizes of the rank classes and the conditions phrased in terms of them.

use std::fmt;

use crate::error::{Error, Result};
use crate::space::{ordinal_type, OrdinalSpace};

use super::embed::LineWitness;

/// Rank class sizes listed from the largest rank down: `sizes[0]` is the
/// number of pairs at rank `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProfile {
    pub sizes: Vec<usize>,
}

impl ClassProfile {
    /// Number of classes, `|Δ(X)|`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Size of the `i`-th class from the top, 1-based.
    pub fn class(&self, i: usize) -> usize {
        self.sizes[i - 1]
    }
}

impl fmt::Display for ClassProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn class_profile(s: &OrdinalSpace) -> Result<ClassProfile> {
    if s.n() < 2 {
        return Err(Error::InvalidArgument("class profile needs at least two points".into()));
    }
    let mut sizes = vec![0usize; s.k() as usize];
    for r in s.pair_ranks() {
        sizes[(s.k() - r) as usize] += 1;
    }
    Ok(ClassProfile { sizes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSizeViolation {
    TooFewClasses { classes: usize, required: usize },
    TopClassNotSingleton { size: usize },
    ClassTooLarge { index: usize, size: usize },
}

impl fmt::Display for ClassSizeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSizeViolation::TooFewClasses { classes, required } => {
                write!(f, "|Δ| = {classes} < {required}")
            }
            ClassSizeViolation::TopClassNotSingleton { size } => write!(f, "|δ1| = {size} ≠ 1"),
            ClassSizeViolation::ClassTooLarge { index, size } => {
                write!(f, "|δ{index}| = {size} > {index}")
            }
        }
    }
}

/// Class-count conditions every line-embeddable space satisfies:
/// `|Δ| ≥ n−1`, `|δ1| = 1` and `|δi| ≤ i`.
pub fn check_line_class_sizes(s: &OrdinalSpace) -> std::result::Result<(), ClassSizeViolation> {
    if s.n() < 2 {
        return Ok(());
    }
    let p = class_profile(s).expect("n ≥ 2");
    if p.len() < s.n() - 1 {
        return Err(ClassSizeViolation::TooFewClasses {
            classes: p.len(),
            required: s.n() - 1,
        });
    }
    if p.class(1) != 1 {
        return Err(ClassSizeViolation::TopClassNotSingleton { size: p.class(1) });
    }
    for i in 1..=p.len() {
        if p.class(i) > i {
            return Err(ClassSizeViolation::ClassTooLarge {
                index: i,
                size: p.class(i),
            });
        }
    }
    Ok(())
}

/// Truth values of three conditions that coincide on line-embeddable spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineProfileReport {
    /// `|Δ| = n − 1`
    pub class_count: bool,
    /// `|δk| = n − 1`
    pub bottom_class: bool,
    /// `|δi| = i` for every `i`
    pub staircase: bool,
}

impl LineProfileReport {
    pub fn all_agree(&self) -> bool {
        self.class_count == self.bottom_class && self.bottom_class == self.staircase
    }
}

pub fn check_line_profile(s: &OrdinalSpace, witness: &LineWitness) -> Result<LineProfileReport> {
    if ordinal_type(&witness.distances()?) != *s {
        return Err(Error::InvalidArgument("witness does not reproduce the space".into()));
    }
    if s.n() < 2 {
        return Ok(LineProfileReport {
            class_count: true,
            bottom_class: true,
            staircase: true,
        });
    }
    let p = class_profile(s)?;
    let n1 = s.n() - 1;
    Ok(LineProfileReport {
        class_count: p.len() == n1,
        bottom_class: p.class(p.len()) == n1,
        staircase: (1..=p.len()).all(|i| p.class(i) == i),
    })
}
