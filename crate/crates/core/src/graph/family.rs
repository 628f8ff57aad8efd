//! Named graph families, their constructors, and recognition of two-tree
//! graphs.
//!
//! Vertex numbering produced by [`FamilySpec::construct`] is fixed:
//!
//! * `Star(n)`: centre 0, leaves `1..=n`.
//! * `Triangle`: vertices 0, 1, 2.
//! * `Gs(a, b, c)` / `GsPlus(a, b, c)`: top centre 0, bottom centre 1, glue
//!   vertices `2..2+b`, then the `a` top leaves, then the `c` bottom leaves.
//!   Edges are listed top-leaf, top-glue, glue-bottom, bottom-leaf, and
//!   finally the centre-centre edge for `GsPlus`.
//! * `Paw(a)`: pendant 0 on the triangle `{1, 2, 3}`, edges
//!   `01, 12, 13, 23`; the `a` extra leaves hang off vertex 0.
//! * `Di(a)`: chord `01` across the four-cycle `0-2-1-3`; leaves hang off
//!   vertex 2 (a degree-2 vertex of the diamond).
//! * `K4(a)`: `K4` on `0..4` in lexicographic edge order; leaves hang off 0.
//! * `Complete(n)` / `CompleteBipartite(s, t)`: lexicographic edge order,
//!   bipartite sides `0..s` and `s..s+t`.
//!
//! Leaves beyond the base graph are numbered consecutively after it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

/// A member of one of the named families, by parameters.
///
/// `Gs(a, b, c)` glues the stars `K_{1,a+b}` and `K_{1,b+c}` along `b`
/// leaves; `GsPlus` additionally joins the two centres. `Paw`, `Di` and `K4`
/// carry the number of appended pendant leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Star(usize),
    Triangle,
    Gs(usize, usize, usize),
    GsPlus(usize, usize, usize),
    Paw(usize),
    Di(usize),
    K4(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Star,
    Triangle,
    Gs,
    GsPlus,
    Paw,
    Di,
    K4,
    Complete,
    CompleteBipartite,
}

impl FamilySpec {
    pub fn star(n: usize) -> Result<Self> {
        FamilySpec::Star(n).checked()
    }

    /// Validated glued stars with the sides ordered so that `a <= c`.
    pub fn gs(a: usize, b: usize, c: usize) -> Result<Self> {
        FamilySpec::Gs(a, b, c).checked()
    }

    pub fn gs_plus(a: usize, b: usize, c: usize) -> Result<Self> {
        FamilySpec::GsPlus(a, b, c).checked()
    }

    pub fn paw(a: usize) -> Self {
        FamilySpec::Paw(a)
    }

    pub fn di(a: usize) -> Self {
        FamilySpec::Di(a)
    }

    pub fn k4(a: usize) -> Self {
        FamilySpec::K4(a)
    }

    pub fn complete(n: usize) -> Result<Self> {
        FamilySpec::Complete(n).checked()
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self> {
        FamilySpec::CompleteBipartite(s, t).checked()
    }

    fn checked(self) -> Result<Self> {
        self.validate()?;
        Ok(self.normalized())
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Star(0) => bad("a star needs at least one leaf"),
            FamilySpec::Gs(_, 0, _) => bad("glued stars need b >= 1"),
            FamilySpec::Complete(n) if n < 2 => bad("complete graphs need n >= 2"),
            FamilySpec::CompleteBipartite(s, t) if s == 0 || t == 0 => {
                bad("complete bipartite graphs need s, t >= 1")
            }
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::Triangle => FamilyKind::Triangle,
            FamilySpec::Gs(..) => FamilyKind::Gs,
            FamilySpec::GsPlus(..) => FamilyKind::GsPlus,
            FamilySpec::Paw(_) => FamilyKind::Paw,
            FamilySpec::Di(_) => FamilyKind::Di,
            FamilySpec::K4(_) => FamilyKind::K4,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::CompleteBipartite(..) => FamilyKind::CompleteBipartite,
        }
    }

    /// One of the five families whose members never yield more than two
    /// trees.
    pub fn is_two_tree_family(&self) -> bool {
        matches!(
            self.kind(),
            FamilyKind::Gs | FamilyKind::GsPlus | FamilyKind::Paw | FamilyKind::Di | FamilyKind::K4
        )
    }

    /// Swaps mirror-image parameters into order (`a <= c`, `s <= t`).
    pub fn normalized(self) -> Self {
        match self {
            FamilySpec::Gs(a, b, c) if a > c => FamilySpec::Gs(c, b, a),
            FamilySpec::GsPlus(a, b, c) if a > c => FamilySpec::GsPlus(c, b, a),
            FamilySpec::CompleteBipartite(s, t) if s > t => FamilySpec::CompleteBipartite(t, s),
            other => other,
        }
    }

    /// The unique representative of this spec's isomorphism class.
    ///
    /// Besides mirror normalisation, degenerate parameters that produce a
    /// member of another family are mapped there: stars and the triangle
    /// win over everything, then `Paw`/`Di`/`K4`, then `Gs` over `GsPlus`.
    pub fn canonical(self) -> Self {
        use FamilySpec::*;
        match self.normalized() {
            Complete(2) => Star(1),
            Complete(3) => Triangle,
            Complete(4) => K4(0),
            CompleteBipartite(1, t) => Star(t),
            CompleteBipartite(2, t) => Gs(0, t, 0),
            Gs(0, 1, 0) => Star(2),
            GsPlus(0, 0, c) => Star(c + 1),
            GsPlus(1, 0, c) => Gs(0, 1, c),
            GsPlus(0, 1, 0) => Triangle,
            GsPlus(0, 1, 1) => Paw(0),
            GsPlus(0, 2, 0) => Di(0),
            other => other,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Star(n) => n + 1,
            FamilySpec::Triangle => 3,
            FamilySpec::Gs(a, b, c) | FamilySpec::GsPlus(a, b, c) => 2 + a + b + c,
            FamilySpec::Paw(a) | FamilySpec::Di(a) | FamilySpec::K4(a) => 4 + a,
            FamilySpec::Complete(n) => n,
            FamilySpec::CompleteBipartite(s, t) => s + t,
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            FamilySpec::Star(n) => n,
            FamilySpec::Triangle => 3,
            FamilySpec::Gs(a, b, c) => a + 2 * b + c,
            FamilySpec::GsPlus(a, b, c) => a + 2 * b + c + 1,
            FamilySpec::Paw(a) => 4 + a,
            FamilySpec::Di(a) => 5 + a,
            FamilySpec::K4(a) => 6 + a,
            FamilySpec::Complete(n) => n * (n - 1) / 2,
            FamilySpec::CompleteBipartite(s, t) => s * t,
        }
    }

    /// Builds the graph with the vertex numbering documented on this module.
    /// Parameters are used as given, without normalisation.
    pub fn construct(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(self.edge_count());
        let with_leaves = |mut edges: Vec<(usize, usize)>, at: usize, a: usize| {
            edges.extend((0..a).map(|i| (at, 4 + i)));
            edges
        };
        match *self {
            FamilySpec::Star(n) => edges.extend((1..=n).map(|i| (0, i))),
            FamilySpec::Triangle => edges.extend([(0, 1), (0, 2), (1, 2)]),
            FamilySpec::Gs(a, b, c) | FamilySpec::GsPlus(a, b, c) => {
                let (top, bottom) = (0, 1);
                let glue = 2..2 + b;
                let top_leaves = 2 + b..2 + b + a;
                let bottom_leaves = 2 + b + a..2 + b + a + c;
                edges.extend(top_leaves.map(|v| (top, v)));
                edges.extend(glue.clone().map(|v| (top, v)));
                edges.extend(glue.map(|v| (v, bottom)));
                edges.extend(bottom_leaves.map(|v| (bottom, v)));
                if matches!(self, FamilySpec::GsPlus(..)) {
                    edges.push((top, bottom));
                }
            }
            FamilySpec::Paw(a) => edges = with_leaves(vec![(0, 1), (1, 2), (1, 3), (2, 3)], 0, a),
            FamilySpec::Di(a) => {
                edges = with_leaves(vec![(0, 2), (2, 1), (1, 3), (3, 0), (0, 1)], 2, a)
            }
            FamilySpec::K4(a) => {
                edges = with_leaves(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 0, a)
            }
            FamilySpec::Complete(n) => {
                edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            FamilySpec::CompleteBipartite(s, t) => {
                edges.extend((0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
            }
        }
        Graph::new(self.vertex_count(), edges)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Triangle => write!(f, "triangle"),
            FamilySpec::Gs(a, b, c) => write!(f, "gs:{a},{b},{c}"),
            FamilySpec::GsPlus(a, b, c) => write!(f, "gsplus:{a},{b},{c}"),
            FamilySpec::Paw(a) => write!(f, "paw:{a}"),
            FamilySpec::Di(a) => write!(f, "di:{a}"),
            FamilySpec::K4(a) => write!(f, "k4:{a}"),
            FamilySpec::Complete(n) => write!(f, "k:{n}"),
            FamilySpec::CompleteBipartite(s, t) => write!(f, "kst:{s},{t}"),
        }
    }
}

/// Grammar `name[:p1,p2,...]`, with names `star`, `triangle`, `gs`,
/// `gsplus` (or `gs+`), `paw`, `di`, `k4`, `k` and `kst`. Parsed specs are
/// validated but not normalised.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name.trim().to_ascii_lowercase(), params.trim()),
            None => (s.to_ascii_lowercase(), ""),
        };
        let values: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("{s}: bad parameter {p:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| {
            if values.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{s}: expected {k} parameter(s)")))
            }
        };
        let spec = match name.as_str() {
            "star" => arity(1).map(|_| FamilySpec::Star(values[0]))?,
            "triangle" => arity(0).map(|_| FamilySpec::Triangle)?,
            "gs" => arity(3).map(|_| FamilySpec::Gs(values[0], values[1], values[2]))?,
            "gsplus" | "gs+" => arity(3).map(|_| FamilySpec::GsPlus(values[0], values[1], values[2]))?,
            "paw" => arity(1).map(|_| FamilySpec::Paw(values[0]))?,
            "di" => arity(1).map(|_| FamilySpec::Di(values[0]))?,
            "k4" => arity(1).map(|_| FamilySpec::K4(values[0]))?,
            "k" => arity(1).map(|_| FamilySpec::Complete(values[0]))?,
            "kst" => arity(2).map(|_| FamilySpec::CompleteBipartite(values[0], values[1]))?,
            _ => return Err(Error::UnknownFamily(name)),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnclassifiedReason {
    /// Three pairwise disjoint edges exist, so three trees are possible.
    MatchingAtLeastThree,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Family(FamilySpec),
    Unclassified(UnclassifiedReason),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Family(spec) => write!(f, "{spec}"),
            Classification::Unclassified(UnclassifiedReason::MatchingAtLeastThree) => {
                write!(f, "unclassified (matching number ≥ 3)")
            }
            Classification::Unclassified(UnclassifiedReason::Other) => write!(f, "unclassified (other)"),
        }
    }
}

/// Identifies stars, the triangle and members of the five two-tree
/// families, returning the canonical spec.
///
/// The graph must not have isolated vertices.
pub fn classify(g: &Graph) -> Result<Classification> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    use Classification::{Family, Unclassified};
    if g.m() == 0 {
        return Ok(Unclassified(UnclassifiedReason::Other));
    }
    let deg = g.degrees();
    match g.max_disjoint_edges_capped(3) {
        1 => {
            return Ok(if deg.iter().any(|&d| d == g.m()) {
                Family(FamilySpec::Star(g.m()))
            } else if g.n() == 3 && g.m() == 3 {
                Family(FamilySpec::Triangle)
            } else {
                Unclassified(UnclassifiedReason::Other)
            });
        }
        3 => return Ok(Unclassified(UnclassifiedReason::MatchingAtLeastThree)),
        _ => {}
    }
    if !g.is_connected() {
        return Ok(Unclassified(UnclassifiedReason::Other));
    }
    let found = glued_stars(g).or_else(|| leafy_core(g, &deg));
    Ok(match found {
        Some(spec) => Family(spec.canonical()),
        None => Unclassified(UnclassifiedReason::Other),
    })
}

/// Connected graphs with a two-vertex cover `{x, y}` are exactly the glued
/// stars (with or without the centre edge).
fn glued_stars(g: &Graph) -> Option<FamilySpec> {
    let adj = g.neighbors();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if !g.edges().iter().all(|&(u, v)| u == x || u == y || v == x || v == y) {
                continue;
            }
            let joined = adj[x].contains(&y);
            let only = |p: usize, q: usize| adj[p].iter().filter(|&&w| w != q && !adj[q].contains(&w)).count();
            let a = only(x, y);
            let c = only(y, x);
            let b = adj[x].iter().filter(|&&w| adj[y].contains(&w)).count();
            return Some(if joined {
                FamilySpec::GsPlus(a, b, c)
            } else {
                FamilySpec::Gs(a, b, c)
            });
        }
    }
    None
}

/// Recognises `Paw(a)` (a >= 1), `Di(a)` and `K4(a)`: after removing all
/// leaves a four-vertex core remains, and every leaf hangs off one
/// designated core vertex.
fn leafy_core(g: &Graph, deg: &[usize]) -> Option<FamilySpec> {
    let core: Vec<usize> = (0..g.n()).filter(|&v| deg[v] > 1).collect();
    if core.len() != 4 {
        return None;
    }
    let adj = g.neighbors();
    let mut anchor = None;
    let mut leaves = 0;
    for v in (0..g.n()).filter(|&v| deg[v] == 1) {
        let parent = adj[v][0];
        if deg[parent] == 1 || anchor.is_some_and(|p| p != parent) {
            return None;
        }
        anchor = Some(parent);
        leaves += 1;
    }
    let core_deg = |v: usize| adj[v].iter().filter(|&&w| deg[w] > 1).count();
    let mut core_degrees: Vec<usize> = core.iter().map(|&v| core_deg(v)).collect();
    core_degrees.sort_unstable();
    let anchor_core_deg = anchor.map(core_deg);
    match (core_degrees.as_slice(), anchor_core_deg) {
        ([1, 2, 2, 3], Some(1)) => Some(FamilySpec::Paw(leaves)),
        ([2, 2, 3, 3], None | Some(2)) => Some(FamilySpec::Di(leaves)),
        ([3, 3, 3, 3], _) => Some(FamilySpec::K4(leaves)),
        _ => None,
    }
}
