//! Simple undirected graphs with a stable edge order.
//!
//! Edge identity is the position in the edge list, so an edge ordering is a
//! permutation of `0..m`.

pub mod enumerate;
pub mod family;
pub mod io;
pub mod iso;

use std::collections::HashSet;

use crate::error::{Error, Result};

pub use io::{emit_graph6, parse_edge_list, parse_graph6};
pub use iso::are_isomorphic;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// `>= n`. Edge orientation and order are kept as given.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {i} is a self-loop on {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({u},{v}) has an endpoint >= n={n}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("edge {i} ({u},{v}) is repeated")));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Graph with no edges on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Adjacency as one bitmask per vertex. Panics if `n > 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "adjacency masks need n <= 64");
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// True when every vertex is reachable from vertex 0. The graph on zero
    /// vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Drops degree-0 vertices, renumbering the rest in their original
    /// relative order. Edge order is unchanged.
    pub fn strip_isolated(&self) -> Graph {
        let deg = self.degrees();
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, &d) in deg.iter().enumerate() {
            if d > 0 {
                map[v] = next;
                next += 1;
            }
        }
        Graph {
            n: next,
            edges: self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect(),
        }
    }

    /// Copy with edge `index` removed; vertex set unchanged.
    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph { n: self.n, edges }
    }

    /// Relabels vertex `v` as `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "relabeling has {} entries for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect())
    }

    /// `min(cap, matching number)` by exhaustive search for `cap` pairwise
    /// disjoint edges. Cost is `O(m^cap)`; intended for `cap <= 3`.
    pub fn max_disjoint_edges_capped(&self, cap: usize) -> usize {
        fn extend(edges: &[(usize, usize)], start: usize, used: &mut Vec<usize>, depth: usize, cap: usize) -> usize {
            if depth == cap {
                return depth;
            }
            let mut best = depth;
            for i in start..edges.len() {
                let (u, v) = edges[i];
                if used.contains(&u) || used.contains(&v) {
                    continue;
                }
                used.push(u);
                used.push(v);
                best = best.max(extend(edges, i + 1, used, depth + 1, cap));
                used.truncate(used.len() - 2);
                if best == cap {
                    break;
                }
            }
            best
        }
        extend(&self.edges, 0, &mut Vec::with_capacity(2 * cap), 0, cap)
    }
}
