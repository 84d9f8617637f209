//! The majorization property of an enumeration.
//!
//! An index sequence `(i0, ..., ik)` is nondecreasing over enumeration
//! positions; its intervals are the consecutive pairs. Repeated indices give
//! zero-rank intervals, and a zero interval can always be matched against
//! anything not smaller. Dropping repeats therefore turns a pair of equal
//! length sequences into strictly increasing sequences with `p` and `q`
//! positive intervals; padding the shorter one with `q − p` zeros and
//! comparing sorted vectors shows that `a ≺ b` iff the ascending ranks of
//! `a` are componentwise at most the top `p` ranks of `b` (and the two
//! multisets differ, which is automatic for `p < q`). Equivalence needs
//! `p = q` and equal multisets. Only strictly increasing sequences of at
//! least two points are enumerated; shorter ones have endpoint rank 0 and
//! satisfy every instance trivially.
//!
//! Sorted componentwise comparison decides the existence of a matching
//! permutation: if any matching works, the sorted one does.

use std::fmt;

use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::perm::permutations;
use crate::space::OrdinalSpace;

use super::embed::nested_spans_grow;

/// Nondecreasing enumeration positions, 0-based. Displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSequence(pub Vec<usize>);

impl IndexSequence {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.len() < 2 {
            return Err(Error::InvalidArgument("an index sequence has at least two entries".into()));
        }
        if indices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(format!("sequence {indices:?} is not nondecreasing")));
        }
        Ok(IndexSequence(indices))
    }

    /// From 1-based positions.
    pub fn one_based(indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::InvalidArgument("positions are 1-based".into()));
        }
        Self::new(indices.iter().map(|i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn interval_ranks(&self, s: &OrdinalSpace, enumeration: &[usize]) -> Vec<u32> {
        let mut r: Vec<u32> = self
            .0
            .windows(2)
            .map(|w| s.rank(enumeration[w[0]], enumeration[w[1]]))
            .collect();
        r.sort_unstable();
        r
    }

    fn endpoint_rank(&self, s: &OrdinalSpace, enumeration: &[usize]) -> u32 {
        s.rank(enumeration[self.0[0]], enumeration[*self.0.last().unwrap()])
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqRelation {
    Prec,
    Equiv,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorizationMode {
    /// every pair of index sequences
    Full,
    /// only sequences of consecutive positions
    Consecutive,
}

fn check_enumeration(s: &OrdinalSpace, enumeration: &[usize]) -> Result<()> {
    let n = s.n();
    let mut seen = vec![false; n];
    if enumeration.len() != n {
        return Err(Error::CardinalityMismatch {
            left: enumeration.len(),
            right: n,
        });
    }
    for &p in enumeration {
        if p >= n {
            return Err(Error::IndexOutOfRange { index: p, n });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument(format!("point {p} repeated in enumeration")));
        }
    }
    Ok(())
}

/// Sorted-rank comparison of equal-length sequences.
pub fn compare_sequences(
    s: &OrdinalSpace,
    a: &IndexSequence,
    b: &IndexSequence,
    enumeration: &[usize],
) -> Result<SeqRelation> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    check_enumeration(s, enumeration)?;
    for &i in a.0.iter().chain(&b.0) {
        if i >= s.n() {
            return Err(Error::IndexOutOfRange { index: i, n: s.n() });
        }
    }
    Ok(compare_sorted(
        &a.interval_ranks(s, enumeration),
        &b.interval_ranks(s, enumeration),
    ))
}

/// Relation of ascending interval-rank vectors of equal length.
fn compare_sorted(a: &[u32], b: &[u32]) -> SeqRelation {
    if a == b {
        SeqRelation::Equiv
    } else if a.iter().zip(b).all(|(x, y)| x <= y) {
        SeqRelation::Prec
    } else {
        SeqRelation::Neither
    }
}

/// Relation of strictly increasing sequences with `a` having no more
/// intervals than `b` (module docs).
fn compare_padded(a: &[u32], b: &[u32]) -> SeqRelation {
    debug_assert!(a.len() <= b.len());
    if a.len() == b.len() {
        return compare_sorted(a, b);
    }
    // the padding zeros of `a` sit strictly below the positive ranks of `b`
    if a.iter().zip(&b[b.len() - a.len()..]).all(|(x, y)| x <= y) {
        SeqRelation::Prec
    } else {
        SeqRelation::Neither
    }
}

struct Sequence {
    seq: IndexSequence,
    ranks: Vec<u32>,
    endpoint: u32,
}

/// Strictly increasing sequences of at least two positions, ordered by
/// length and then lexicographically.
fn sequences(s: &OrdinalSpace, enumeration: &[usize], mode: MajorizationMode) -> Vec<Sequence> {
    let n = s.n();
    let mut out: Vec<IndexSequence> = match mode {
        MajorizationMode::Full => (0u32..1 << n)
            .filter(|m| m.count_ones() >= 2)
            .map(|m| IndexSequence((0..n).filter(|i| m >> i & 1 == 1).collect()))
            .collect(),
        MajorizationMode::Consecutive => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| IndexSequence((i..=j).collect())))
            .collect(),
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter()
        .map(|seq| Sequence {
            ranks: seq.interval_ranks(s, enumeration),
            endpoint: seq.endpoint_rank(s, enumeration),
            seq,
        })
        .collect()
}

/// First pair `(a, b)` violating the majorization property for the given
/// enumeration: `a ≺ b` without a strictly smaller endpoint rank, or
/// `a ~ b` with different endpoint ranks. `None` means the property holds.
pub fn check_majorization(
    s: &OrdinalSpace,
    enumeration: &[usize],
    mode: MajorizationMode,
) -> Result<Option<(IndexSequence, IndexSequence)>> {
    check_enumeration(s, enumeration)?;
    if s.n() > 20 {
        return Err(Error::SizeLimit {
            what: "majorization check",
            size: s.n(),
            limit: 20,
        });
    }
    let seqs = sequences(s, enumeration, mode);
    for a in &seqs {
        for b in &seqs {
            if a.seq == b.seq || a.ranks.len() > b.ranks.len() {
                continue;
            }
            let violated = match compare_padded(&a.ranks, &b.ranks) {
                SeqRelation::Prec => a.endpoint >= b.endpoint,
                SeqRelation::Equiv => a.endpoint != b.endpoint,
                SeqRelation::Neither => false,
            };
            if violated {
                return Ok(Some((a.seq.clone(), b.seq.clone())));
            }
        }
    }
    Ok(None)
}

/// The lexicographically first enumeration with the majorization property.
///
/// An enumeration qualifies iff its reverse does, so only those with first
/// point below last point are tried; nested spans must also have strictly
/// growing ranks before the full check runs.
pub fn find_majorizing_enumeration(s: &OrdinalSpace, guard: Guard) -> Result<Option<Vec<usize>>> {
    let n = s.n();
    guard.check("majorizing enumeration search", n)?;
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    for p in permutations(n) {
        if p[0] > p[n - 1] || !nested_spans_grow(s, &p) {
            continue;
        }
        if check_majorization(s, &p, MajorizationMode::Full)?.is_none() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
