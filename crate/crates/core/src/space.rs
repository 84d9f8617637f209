//! The ordinal-space data model.
//!
//! A finite ordinal space is stored as a normalized rank matrix: the level set
//! is always `{0, 1, ..., k}`, level 0 is reserved for self-pairs, and every
//! level in `1..=k` is used by at least one unordered pair of distinct points.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Axiom, Error, Result};
use crate::rational::{int, Q};

/// Outcome of comparing the "distance" of two pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Lt,
    Eq,
    Gt,
}

impl Relation {
    pub fn reversed(self) -> Self {
        match self {
            Relation::Lt => Relation::Gt,
            Relation::Eq => Relation::Eq,
            Relation::Gt => Relation::Lt,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "LT",
            Relation::Eq => "EQ",
            Relation::Gt => "GT",
        }
    }
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Lt,
            Ordering::Equal => Relation::Eq,
            Ordering::Greater => Relation::Gt,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// All unordered pairs `(i, j)` with `i < j`, ordered by `j` then `i`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinalSpace {
    n: usize,
    k: u32,
    ranks: Vec<u32>,
}

impl OrdinalSpace {
    /// The unique one-point space.
    pub fn singleton() -> Self {
        OrdinalSpace {
            n: 1,
            k: 0,
            ranks: vec![0],
        }
    }

    /// Builds a space from a row-major `n × n` rank matrix, checking every
    /// invariant (zero diagonal, symmetry, surjectivity onto `1..=k`).
    pub fn from_ranks(n: usize, ranks: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRanks("a space needs at least one point".into()));
        }
        if ranks.len() != n * n {
            return Err(Error::InvalidRanks(format!(
                "expected {} entries, found {}",
                n * n,
                ranks.len()
            )));
        }
        let mut k = 0;
        for i in 0..n {
            if ranks[i * n + i] != 0 {
                return Err(Error::InvalidRanks(format!("diagonal entry ({i}, {i}) is not 0")));
            }
            for j in 0..n {
                if ranks[i * n + j] != ranks[j * n + i] {
                    return Err(Error::InvalidRanks(format!("entry ({i}, {j}) is not symmetric")));
                }
                if i != j && ranks[i * n + j] == 0 {
                    return Err(Error::InvalidRanks(format!(
                        "entry ({i}, {j}) of distinct points has rank 0"
                    )));
                }
                k = k.max(ranks[i * n + j]);
            }
        }
        let mut used = vec![false; k as usize + 1];
        for &r in &ranks {
            used[r as usize] = true;
        }
        if let Some(level) = used.iter().position(|u| !u) {
            return Err(Error::InvalidRanks(format!("level {level} is not attained")));
        }
        Ok(OrdinalSpace { n, k, ranks })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidRanks("rank matrix is not square".into()));
        }
        Self::from_ranks(n, rows.concat())
    }

    /// Builds a space from any totally ordered labelling of the pairs of
    /// distinct points; labels are compressed to `1..=k`.
    pub fn from_pair_labels<T: Ord + Clone>(n: usize, label: impl Fn(usize, usize) -> T) -> Self {
        let ps = pairs(n);
        let mut distinct: Vec<T> = ps.iter().map(|&(i, j)| label(i, j)).collect();
        distinct.sort();
        distinct.dedup();
        let mut ranks = vec![0u32; n * n];
        for &(i, j) in &ps {
            let l = label(i, j);
            let r = distinct.binary_search(&l).expect("label present") as u32 + 1;
            ranks[i * n + j] = r;
            ranks[j * n + i] = r;
        }
        OrdinalSpace {
            n,
            k: distinct.len() as u32,
            ranks,
        }
    }

    /// Ranks listed in `pairs(n)` order.
    pub fn from_pair_ranks(n: usize, pair_ranks: &[u32]) -> Result<Self> {
        let ps = pairs(n);
        if pair_ranks.len() != ps.len() {
            return Err(Error::InvalidRanks(format!(
                "expected {} pair ranks, found {}",
                ps.len(),
                pair_ranks.len()
            )));
        }
        let mut ranks = vec![0u32; n * n];
        for (&(i, j), &r) in ps.iter().zip(pair_ranks) {
            ranks[i * n + j] = r;
            ranks[j * n + i] = r;
        }
        Self::from_ranks(n, ranks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nonzero levels.
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.ranks[i * self.n + j]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.ranks[i * self.n..(i + 1) * self.n]
    }

    /// Ranks in `pairs(n)` order.
    pub fn pair_ranks(&self) -> Vec<u32> {
        pairs(self.n).into_iter().map(|(i, j)| self.rank(i, j)).collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// `δ(x, y, z, w)`: compares the pair `{x, y}` with `{z, w}`.
    pub fn relation(&self, x: usize, y: usize, z: usize, w: usize) -> Result<Relation> {
        for i in [x, y, z, w] {
            self.check_index(i)?;
        }
        Ok(self.cmp_pairs(x, y, z, w))
    }

    #[inline]
    pub fn cmp_pairs(&self, x: usize, y: usize, z: usize, w: usize) -> Relation {
        self.rank(x, y).cmp(&self.rank(z, w)).into()
    }

    /// The space relabelled so that new point `i` is old point `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut ranks = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                ranks[i * n + j] = self.rank(perm[i], perm[j]);
            }
        }
        OrdinalSpace { n, k: self.k, ranks }
    }

    /// Subspace on the given points (in the given order), renormalized.
    pub fn subspace(&self, points: &[usize]) -> Self {
        if points.len() == 1 {
            return Self::singleton();
        }
        Self::from_pair_labels(points.len(), |i, j| self.rank(points[i], points[j]))
    }

    /// Every comparison between two distinct pairs of distinct points,
    /// as 0-based entries.
    pub fn to_comparisons(&self) -> ComparisonList {
        let ps = pairs(self.n);
        let mut entries = Vec::new();
        for a in 0..ps.len() {
            for b in a + 1..ps.len() {
                let (x, y) = ps[a];
                let (z, w) = ps[b];
                entries.push(Comparison {
                    x,
                    y,
                    z,
                    w,
                    rel: self.cmp_pairs(x, y, z, w),
                });
            }
        }
        ComparisonList { n: self.n, entries }
    }
}

impl fmt::Display for OrdinalSpace {
    /// Rank-matrix text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w: usize,
    pub rel: Relation,
}

impl Comparison {
    pub fn quad(&self) -> [usize; 4] {
        [self.x, self.y, self.z, self.w]
    }
}

/// Raw quadruple relations, before axiom validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonList {
    n: usize,
    entries: Vec<Comparison>,
}

impl ComparisonList {
    pub fn new(n: usize, entries: Vec<Comparison>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a space needs at least one point".into()));
        }
        for e in &entries {
            for i in e.quad() {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
        }
        Ok(ComparisonList { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Comparison] {
        &self.entries
    }
}

/// Symmetric matrix of exact rationals with zero diagonal and positive
/// off-diagonal entries. The triangle inequality is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Q>,
}

impl DistanceMatrix {
    pub fn new(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty distance matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDistance {
                    row: i,
                    col: row.len().min(n),
                    reason: format!("row has {} entries, expected {n}", row.len()),
                });
            }
        }
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(Error::InvalidDistance {
                    row: i,
                    col: i,
                    reason: if rows[i][i].is_negative() {
                        "negative diagonal entry".into()
                    } else {
                        "nonzero diagonal entry".into()
                    },
                });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidDistance {
                        row: i,
                        col: j,
                        reason: "matrix is not symmetric".into(),
                    });
                }
                if !rows[i][j].is_positive() {
                    return Err(Error::InvalidDistance {
                        row: i,
                        col: j,
                        reason: "distance between distinct points must be positive".into(),
                    });
                }
            }
        }
        Ok(DistanceMatrix {
            n,
            d: rows.concat(),
        })
    }

    /// Builds the matrix from a function on pairs `i < j`.
    pub fn from_pair_fn(n: usize, f: impl Fn(usize, usize) -> Q) -> Result<Self> {
        let mut rows = vec![vec![Q::zero(); n]; n];
        for (i, j) in pairs(n) {
            let v = f(i, j);
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
        Self::new(rows)
    }

    /// Distances between points on a line.
    pub fn from_line(coords: &[Q]) -> Result<Self> {
        Self::from_pair_fn(coords.len(), |i, j| num_traits::Signed::abs(&(&coords[i] - &coords[j])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.d[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.d.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Multiplies every distance by `factor > 0`.
    pub fn scaled(&self, factor: &Q) -> Self {
        DistanceMatrix {
            n: self.n,
            d: self.d.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(self.get(perm[i], perm[j]).clone());
            }
        }
        DistanceMatrix { n, d }
    }

    /// True iff `d(x,y) ≤ d(x,z) + d(z,y)` for all triples.
    pub fn is_metric(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.get(x, y) <= &(self.get(x, z) + self.get(z, y))))
        })
    }
}

/// The ordinal type of a semimetric: equal distances share a rank, ranks
/// follow the ascending order of the distinct off-diagonal values.
pub fn ordinal_type(d: &DistanceMatrix) -> OrdinalSpace {
    if d.n() == 1 {
        return OrdinalSpace::singleton();
    }
    OrdinalSpace::from_pair_labels(d.n(), |i, j| d.get(i, j).clone())
}

/// The metric `d(x,y) = 1 + l/(2k)` for `x ≠ y` with `l` the rank of the pair.
///
/// All distances lie in `(1, 3/2]`, so every triangle has two sides summing to
/// more than 2 and the triangle inequality holds.
pub fn realize(s: &OrdinalSpace) -> DistanceMatrix {
    realize_scaled(s, &Q::one())
}

/// `d(x,y) = 1 + scale · l/(2k)`; `scale = 1` is [`realize`].
pub fn realize_scaled(s: &OrdinalSpace, scale: &Q) -> DistanceMatrix {
    let n = s.n();
    if n == 1 {
        return DistanceMatrix {
            n: 1,
            d: vec![Q::zero()],
        };
    }
    let two_k = int(2 * s.k() as i64);
    DistanceMatrix::from_pair_fn(n, |i, j| Q::one() + scale * int(s.rank(i, j) as i64) / &two_k)
        .expect("realization is a valid distance matrix")
}

/// A space whose pair ranks are drawn uniformly from `max_levels` labels
/// and then compressed; `max_levels ≥ n(n-1)/2` makes ties rare.
pub fn random_space<R: rand::Rng + ?Sized>(rng: &mut R, n: usize, max_levels: u32) -> OrdinalSpace {
    if n == 1 {
        return OrdinalSpace::singleton();
    }
    let labels: Vec<u32> = pairs(n).iter().map(|_| rng.gen_range(0..max_levels.max(1))).collect();
    let index: HashMap<(usize, usize), usize> =
        pairs(n).into_iter().enumerate().map(|(a, p)| (p, a)).collect();
    OrdinalSpace::from_pair_labels(n, |i, j| labels[index[&(i, j)]])
}

/// Validates a list of comparisons against the ordinal-space axioms and
/// returns the normalized space they determine.
///
/// `=` entries merge pair classes, `<`/`>` entries order them; the strict
/// order is closed transitively and must be total on the classes.
pub fn from_comparisons(c: &ComparisonList) -> Result<OrdinalSpace> {
    let n = c.n();
    if n == 1 {
        for e in c.entries() {
            if e.rel != Relation::Eq {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Zero,
                    witness: vec![e.quad()],
                });
            }
        }
        return Ok(OrdinalSpace::singleton());
    }
    let ps = pairs(n);
    let index: HashMap<(usize, usize), usize> =
        ps.iter().enumerate().map(|(a, &p)| (p, a)).collect();
    let pair_id = |x: usize, y: usize| index[&(x.min(y), x.max(y))];

    // degenerate pairs are fixed by the reflexive and zero axioms
    let mut uf = UnionFind::new(ps.len());
    let mut strict: Vec<(usize, usize, Comparison)> = Vec::new();
    for e in c.entries() {
        let left_zero = e.x == e.y;
        let right_zero = e.z == e.w;
        if left_zero || right_zero {
            let expected = match (left_zero, right_zero) {
                (true, true) => Relation::Eq,
                (true, false) => Relation::Lt,
                _ => Relation::Gt,
            };
            if e.rel != expected {
                let axiom = if left_zero && right_zero {
                    Axiom::Reflexive
                } else {
                    Axiom::Zero
                };
                return Err(Error::AxiomViolation {
                    axiom,
                    witness: vec![e.quad()],
                });
            }
            continue;
        }
        let p = pair_id(e.x, e.y);
        let q = pair_id(e.z, e.w);
        match e.rel {
            Relation::Eq => uf.union(p, q),
            Relation::Lt => strict.push((p, q, *e)),
            Relation::Gt => strict.push((q, p, *e)),
        }
    }

    // classes of `=`, in order of their smallest pair
    let mut class_of = vec![usize::MAX; ps.len()];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..ps.len() {
        let root = uf.find(a);
        if class_of[root] == usize::MAX {
            class_of[root] = reps.len();
            reps.push(a);
        }
        class_of[a] = class_of[root];
    }
    let m = reps.len();

    let mut edges: BTreeMap<(usize, usize), Comparison> = BTreeMap::new();
    for (p, q, e) in strict {
        let (cp, cq) = (class_of[p], class_of[q]);
        if cp == cq {
            let axiom = if p == q {
                Axiom::Reflexive
            } else {
                Axiom::LtTransitive
            };
            return Err(Error::AxiomViolation {
                axiom,
                witness: vec![e.quad()],
            });
        }
        if let Some(back) = edges.get(&(cq, cp)) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::Antisymmetric,
                witness: vec![back.quad(), e.quad()],
            });
        }
        edges.entry((cp, cq)).or_insert(e);
    }

    let mut succ = vec![Vec::new(); m];
    let mut indeg = vec![0usize; m];
    for &(a, b) in edges.keys() {
        succ[a].push(b);
        indeg[b] += 1;
    }

    // Kahn's algorithm; a leftover class means a cycle
    let mut order = Vec::with_capacity(m);
    let mut ready: Vec<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
    let mut indeg_left = indeg.clone();
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg_left[w] -= 1;
            if indeg_left[w] == 0 {
                ready.push(w);
            }
        }
    }
    if order.len() < m {
        let cycle = find_cycle(&succ, &indeg_left);
        let witness = cycle
            .windows(2)
            .map(|w| edges[&(w[0], w[1])].quad())
            .collect();
        return Err(Error::AxiomViolation {
            axiom: Axiom::LtTransitive,
            witness,
        });
    }
    // a linear extension is the only one iff consecutive classes are related
    for w in order.windows(2) {
        if !edges.contains_key(&(w[0], w[1])) {
            return Err(Error::Underdetermined {
                first: ps[reps[w[0]]],
                second: ps[reps[w[1]]],
            });
        }
    }
    let mut level = vec![0u32; m];
    for (pos, &cls) in order.iter().enumerate() {
        level[cls] = pos as u32 + 1;
    }
    let mut pr = vec![0u32; ps.len()];
    for a in 0..ps.len() {
        pr[a] = level[class_of[a]];
    }
    OrdinalSpace::from_pair_ranks(n, &pr)
}

/// Some cycle among the vertices Kahn's algorithm could not remove. Each of
/// them keeps an unremoved predecessor, so walking predecessors must close a
/// cycle.
fn find_cycle(succ: &[Vec<usize>], indeg_left: &[usize]) -> Vec<usize> {
    let alive: Vec<bool> = indeg_left.iter().map(|&d| d > 0).collect();
    let mut pred = vec![usize::MAX; succ.len()];
    for (v, ws) in succ.iter().enumerate() {
        for &w in ws {
            if alive[v] && alive[w] {
                pred[w] = v;
            }
        }
    }
    let start = alive.iter().position(|&a| a).expect("cycle exists");
    let mut seen = vec![usize::MAX; succ.len()];
    let mut path = Vec::new();
    let mut v = start;
    while seen[v] == usize::MAX {
        seen[v] = path.len();
        path.push(v);
        v = pred[v];
    }
    let mut cycle = path[seen[v]..].to_vec();
    cycle.push(v);
    cycle.reverse();
    cycle
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
