//! Exhaustive enumeration of small graphs.

use std::collections::HashSet;

use super::Graph;

/// Largest order accepted by [`canonical_code`] and [`nonisomorphic_graphs`].
pub const ENUMERATION_VERTEX_LIMIT: usize = 8;

/// Every labelled graph on `n` vertices, one per subset of the edges of
/// `K_n`, in order of the subset bitmask. Edges of each graph are
/// lexicographic.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= ENUMERATION_VERTEX_LIMIT, "labelled enumeration limited to n <= 8");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph { n, edges }
    })
}

/// A labelling-independent code: equal codes iff the graphs are isomorphic.
///
/// Minimises the upper-triangle adjacency word over all labellings that
/// sort vertices by (degree, neighbour degrees); that set of labellings is
/// itself invariant under relabelling, so the minimum is canonical.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= ENUMERATION_VERTEX_LIMIT, "canonical codes limited to n <= 8");
    let adj = g.adjacency_masks();
    let deg = g.degrees();
    let key = |v: usize| {
        let mut nd: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by(|&x, &y| keys[x].cmp(&keys[y]));
    // slot i may hold any vertex whose key equals keys[sorted[i]]
    let candidates: Vec<Vec<usize>> = sorted
        .iter()
        .map(|&v| (0..n).filter(|&w| keys[w] == keys[v]).collect())
        .collect();

    let mut best = u64::MAX;
    let mut slots = Vec::with_capacity(n);
    search(&adj, &candidates, &mut slots, 0, &mut best);
    best
}

fn search(adj: &[u64], candidates: &[Vec<usize>], slots: &mut Vec<usize>, used: u64, best: &mut u64) {
    let n = candidates.len();
    if slots.len() == n {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = (code << 1) | (adj[slots[i]] >> slots[j] & 1);
            }
        }
        *best = (*best).min(code);
        return;
    }
    for &v in &candidates[slots.len()] {
        if used >> v & 1 == 0 {
            slots.push(v);
            search(adj, candidates, slots, used | 1 << v, best);
            slots.pop();
        }
    }
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (isolated vertices allowed), grown edge by edge from the empty
/// graph with duplicates removed by [`canonical_code`].
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= ENUMERATION_VERTEX_LIMIT, "enumeration limited to n <= 8");
    let mut all = vec![Graph::empty(n)];
    let mut layer = vec![Graph::empty(n)];
    while !layer.is_empty() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    edges.sort_unstable();
                    let h = Graph { n, edges };
                    if seen.insert(canonical_code(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}
