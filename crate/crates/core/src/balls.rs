//! Balls from spectrum cuts, the ball poset and its Hasse diagram.
//!
//! In a finite space every cut of a spectrum is determined by the last level
//! of its initial segment, so a ball is identified by a center and a
//! threshold level from that center's spectrum.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::space::{DistanceMatrix, OrdinalSpace};

/// Sorted point indices.
pub type PointSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub center: usize,
    pub threshold: u32,
    pub members: PointSet,
}

/// Sorted distinct levels `{rank(c, x) : x ∈ X}`; always starts with 0.
pub fn spectrum(s: &OrdinalSpace, c: usize) -> Vec<u32> {
    assert!(c < s.n(), "center {c} out of range");
    let mut levels = s.row(c).to_vec();
    levels.sort_unstable();
    levels.dedup();
    levels
}

/// One ball per nonempty initial segment of the spectrum at `c`, from `{c}`
/// up to the whole space.
pub fn balls_at(s: &OrdinalSpace, c: usize) -> Vec<Ball> {
    spectrum(s, c)
        .into_iter()
        .map(|t| Ball {
            center: c,
            threshold: t,
            members: (0..s.n()).filter(|&x| s.rank(c, x) <= t).collect(),
        })
        .collect()
}

fn set_order(a: &PointSet, b: &PointSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Distinct balls of a space, sorted by size then members, with every
/// `(center, threshold)` producing each one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSet {
    n: usize,
    balls: Vec<PointSet>,
    provenance: Vec<Vec<(usize, u32)>>,
}

impl BallSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn balls(&self) -> &[PointSet] {
        &self.balls
    }

    pub fn provenance(&self, index: usize) -> &[(usize, u32)] {
        &self.provenance[index]
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        self.balls.binary_search_by(|b| set_order(b, set)).is_ok()
    }
}

pub fn ball_set(s: &OrdinalSpace) -> BallSet {
    let mut merged: BTreeMap<(usize, PointSet), Vec<(usize, u32)>> = BTreeMap::new();
    for c in 0..s.n() {
        for b in balls_at(s, c) {
            merged
                .entry((b.members.len(), b.members))
                .or_default()
                .push((b.center, b.threshold));
        }
    }
    let (balls, provenance) = merged.into_iter().map(|((_, m), p)| (m, p)).unzip();
    BallSet {
        n: s.n(),
        balls,
        provenance,
    }
}

/// Closed balls `{x : d(c, x) ≤ r}` of a semimetric for every center and
/// every radius in the spectrum at that center, deduplicated and sorted
/// like [`BallSet::balls`].
pub fn distance_balls(d: &DistanceMatrix) -> Vec<PointSet> {
    let n = d.n();
    let mut out: Vec<PointSet> = Vec::new();
    for c in 0..n {
        for r in 0..n {
            let radius = d.get(c, r);
            out.push((0..n).filter(|&x| d.get(c, x) <= radius).collect());
        }
    }
    out.sort_by(set_order);
    out.dedup();
    out
}

fn is_proper_subset(a: &PointSet, b: &PointSet) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Covering digraph of a family of sets under inclusion. Arcs point from
/// the smaller set to the set covering it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    vertices: Vec<PointSet>,
    arcs: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Builds the diagram of an arbitrary family; duplicates are dropped and
    /// vertices sorted by size then members.
    pub fn from_sets(sets: &[PointSet]) -> Self {
        let mut vertices: Vec<PointSet> = sets
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        vertices.sort_by(set_order);
        vertices.dedup();
        let m = vertices.len();
        let below: Vec<Vec<bool>> = (0..m)
            .map(|u| (0..m).map(|v| is_proper_subset(&vertices[u], &vertices[v])).collect())
            .collect();
        let mut arcs = Vec::new();
        for u in 0..m {
            for v in 0..m {
                if below[u][v] && !(0..m).any(|w| below[u][w] && below[w][v]) {
                    arcs.push((u, v));
                }
            }
        }
        HasseDiagram { vertices, arcs }
    }

    pub fn vertices(&self) -> &[PointSet] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let m = self.vertices.len();
        let mut adj = vec![vec![false; m]; m];
        for &(u, v) in &self.arcs {
            adj[u][v] = true;
        }
        adj
    }

    /// Vertices without incoming arcs.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.vertices.len()];
        for &(_, v) in &self.arcs {
            has_in[v] = true;
        }
        (0..self.vertices.len()).filter(|&v| !has_in[v]).collect()
    }

    /// Length of the longest path from a source to each vertex.
    pub fn levels(&self) -> Vec<usize> {
        // vertices are sorted by size and arcs go to strictly larger sets,
        // so index order is a topological order
        let mut level = vec![0usize; self.vertices.len()];
        for v in 0..self.vertices.len() {
            for &(u, w) in &self.arcs {
                if w == v {
                    level[v] = level[v].max(level[u] + 1);
                }
            }
        }
        level
    }

    /// True iff the underlying undirected graph is a tree.
    pub fn is_tree(&self) -> bool {
        let m = self.vertices.len();
        if m == 0 || self.arcs.len() + 1 != m {
            return false;
        }
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for &(u, v) in &self.arcs {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    /// Graphviz rendering: vertices in sorted order labelled `{x1,x2}`,
    /// arcs from each set to the set covering it.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n    rankdir=BT;\n    node [shape=box, style=rounded];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let label: Vec<String> = v.iter().map(|x| format!("x{}", x + 1)).collect();
            let _ = writeln!(out, "    b{i} [label=\"{{{}}}\"];", label.join(","));
        }
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        for (u, v) in arcs {
            let _ = writeln!(out, "    b{u} -> b{v};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn hasse(bs: &BallSet) -> HasseDiagram {
    HasseDiagram::from_sets(bs.balls())
}

/// Isomorphism of Hasse diagrams as abstract digraphs. Returns the vertex
/// map `a → b` when one exists. Set sizes are never consulted; pruning uses
/// in/out-degrees and the longest-path level from a source.
pub fn hasse_isomorphic(
    a: &HasseDiagram,
    b: &HasseDiagram,
    guard: Guard,
) -> Result<Option<Vec<usize>>> {
    guard.check_vertices("Hasse diagram isomorphism", a.vertex_count())?;
    guard.check_vertices("Hasse diagram isomorphism", b.vertex_count())?;
    if a.vertex_count() != b.vertex_count() || a.arcs.len() != b.arcs.len() {
        return Ok(None);
    }
    let inv_a = vertex_invariants(a);
    let inv_b = vertex_invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();
    // most constrained first: rarest invariant classes, then by level
    let m = a.vertex_count();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| {
        let class = inv_a.iter().filter(|x| **x == inv_a[v]).count();
        (inv_a[v].0, class, v)
    });
    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];
    let found = extend_digraph_map(
        0, &order, &inv_a, &inv_b, &adj_a, &adj_b, &mut map, &mut used,
    );
    Ok(found.then_some(map))
}

/// (level, in-degree, out-degree, sorted in-neighbour levels)
type VertexInvariant = (usize, usize, usize, Vec<usize>);

fn vertex_invariants(h: &HasseDiagram) -> Vec<VertexInvariant> {
    let levels = h.levels();
    let m = h.vertex_count();
    (0..m)
        .map(|v| {
            let mut preds: Vec<usize> = h
                .arcs
                .iter()
                .filter(|&&(_, w)| w == v)
                .map(|&(u, _)| levels[u])
                .collect();
            preds.sort_unstable();
            let outdeg = h.arcs.iter().filter(|&&(u, _)| u == v).count();
            (levels[v], preds.len(), outdeg, preds)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend_digraph_map(
    depth: usize,
    order: &[usize],
    inv_a: &[VertexInvariant],
    inv_b: &[VertexInvariant],
    adj_a: &[Vec<bool>],
    adj_b: &[Vec<bool>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for v in 0..inv_b.len() {
        if used[v] || inv_a[u] != inv_b[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let fw = map[w];
            adj_a[u][w] == adj_b[v][fw] && adj_a[w][u] == adj_b[fw][v]
        });
        if !consistent {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if extend_digraph_map(depth + 1, order, inv_a, inv_b, adj_a, adj_b, map, used) {
            return true;
        }
        used[v] = false;
        map[u] = usize::MAX;
    }
    false
}

/// A bijection `f: X → Y` with `f(Z)` a ball of `b` for every ball `Z` of
/// `a` and `f⁻¹(W)` a ball of `a` for every ball `W` of `b`.
pub fn ball_preserving_bijection(
    a: &OrdinalSpace,
    b: &OrdinalSpace,
    guard: Guard,
) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() {
        return Err(Error::CardinalityMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let n = a.n();
    guard.check("ball-preserving bijection", n)?;
    let ba = ball_set(a);
    let bb = ball_set(b);
    // an injective image of a family into an equally large family is onto,
    // which gives the inverse condition for free
    if ba.len() != bb.len() {
        return Ok(None);
    }
    let targets: HashSet<PointSet> = bb.balls().iter().cloned().collect();
    let mut completes_at: Vec<Vec<&PointSet>> = vec![Vec::new(); n];
    for z in ba.balls() {
        completes_at[*z.last().expect("balls are nonempty")].push(z);
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend_ball_map(&completes_at, &targets, &mut map, &mut used).then_some(map))
}

fn extend_ball_map(
    completes_at: &[Vec<&PointSet>],
    targets: &HashSet<PointSet>,
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = map.len();
    if i == used.len() {
        return true;
    }
    for v in 0..used.len() {
        if used[v] {
            continue;
        }
        map.push(v);
        let ok = completes_at[i].iter().all(|z| {
            let mut image: PointSet = z.iter().map(|&x| map[x]).collect();
            image.sort_unstable();
            targets.contains(&image)
        });
        if ok {
            used[v] = true;
            if extend_ball_map(completes_at, targets, map, used) {
                return true;
            }
            used[v] = false;
        }
        map.pop();
    }
    false
}
