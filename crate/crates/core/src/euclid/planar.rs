//! Counting conditions that every space embeddable in the plane satisfies.

use num_integer::Roots;

use crate::line::class_profile;
use crate::space::{pairs, OrdinalSpace};

/// Pairs at the top rank, `i < j`, lexicographic.
pub fn dp_pairs(s: &OrdinalSpace) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = pairs(s.n())
        .into_iter()
        .filter(|&(i, j)| s.rank(i, j) == s.k())
        .collect();
    out.sort_unstable();
    out
}

/// One counting bound: `value` against `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub clause: &'static str,
    pub description: &'static str,
    pub value: usize,
    pub bound: usize,
    /// `false` when the class the bound talks about does not exist
    pub applicable: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R2Report {
    pub n: usize,
    /// at most `n` diametrical pairs
    pub diametrical: BoundCheck,
    pub class_bounds: Vec<BoundCheck>,
}

impl R2Report {
    /// `false` proves the space does not embed in the plane; `true` proves
    /// nothing.
    pub fn all_hold(&self) -> bool {
        self.diametrical.holds && self.class_bounds.iter().all(|c| c.holds)
    }
}

/// `⌊3n − sqrt(12n − 3)⌋`, computed in integers.
pub fn smallest_class_bound(n: usize) -> usize {
    let m = 12 * n - 3;
    let r = m.sqrt();
    let ceil = if r * r == m { r } else { r + 1 };
    (3 * n).saturating_sub(ceil)
}

/// `δ1` is the top class and `δk` the bottom one. The bound on `|Δ|` from
/// below is not checked: its constant is not known.
pub fn check_r2_necessary(s: &OrdinalSpace) -> R2Report {
    let n = s.n();
    let dp = dp_pairs(s).len();
    let diametrical = BoundCheck {
        clause: "diametrical",
        description: "|DP| <= n",
        value: dp,
        bound: n,
        applicable: true,
        holds: dp <= n,
    };
    let mut class_bounds = Vec::new();
    let sizes = if n >= 2 { class_profile(s).expect("n ≥ 2").sizes } else { Vec::new() };
    let k = sizes.len();
    let class = |i: usize| (i >= 1 && i <= k).then(|| sizes[i - 1]);
    let mut push = |clause, description, value: Option<usize>, bound: usize, strict: bool| {
        let (value, applicable) = (value.unwrap_or(0), value.is_some());
        let holds = !applicable || if strict { value < bound } else { value <= bound };
        class_bounds.push(BoundCheck {
            clause,
            description,
            value,
            bound,
            applicable,
            holds,
        });
    };
    push("top-class", "|d_1| <= n", class(1), n, false);
    push("second-class", "|d_2| <= floor(3n/2)", class(2), 3 * n / 2, false);
    // 7|δ_{k−1}| < 24n, kept integral by comparing 7·value with 24n
    let second_last = if k >= 2 { class(k - 1) } else { None };
    push(
        "second-smallest-class",
        "7|d_(k-1)| < 24n",
        second_last.map(|v| 7 * v),
        24 * n,
        true,
    );
    push(
        "smallest-class",
        "|d_k| <= floor(3n - sqrt(12n - 3))",
        class(k),
        smallest_class_bound(n.max(1)),
        false,
    );
    R2Report {
        n,
        diametrical,
        class_bounds,
    }
}
