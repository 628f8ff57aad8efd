//! Backtracking isomorphism test for small graphs.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count [`are_isomorphic`] accepts.
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 12;

/// Tests whether some vertex bijection maps the edge set of `g` onto that of
/// `h`. Both graphs must have at most [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISOMORPHISM_VERTEX_LIMIT {
            return Err(Error::TooLarge { vertices: x.n(), limit: ISOMORPHISM_VERTEX_LIMIT });
        }
    }
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }

    let gs = Signatures::new(g);
    let hs = Signatures::new(h);
    let mut sorted_g = gs.sig.clone();
    let mut sorted_h = hs.sig.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return Ok(false);
    }

    // Visit high-degree vertices first, then prefer vertices adjacent to
    // already-placed ones so adjacency checks prune early.
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| ((gs.adj[v] & placed).count_ones(), gs.sig[v].0, std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }

    let mut image = vec![usize::MAX; n];
    Ok(extend(&gs, &hs, &order, 0, &mut image, 0))
}

struct Signatures {
    adj: Vec<u64>,
    /// (degree, sorted neighbour degrees)
    sig: Vec<(usize, Vec<usize>)>,
}

impl Signatures {
    fn new(g: &Graph) -> Self {
        let adj = g.adjacency_masks();
        let deg = g.degrees();
        let sig = (0..g.n())
            .map(|v| {
                let mut nd: Vec<usize> =
                    (0..g.n()).filter(|&w| adj[v] & (1 << w) != 0).map(|w| deg[w]).collect();
                nd.sort_unstable();
                (deg[v], nd)
            })
            .collect();
        Signatures { adj, sig }
    }
}

fn extend(g: &Signatures, h: &Signatures, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.adj.len() {
        if used & (1 << w) != 0 || g.sig[v] != h.sig[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let g_edge = g.adj[v] & (1 << u) != 0;
            let h_edge = h.adj[w] & (1 << image[u]) != 0;
            g_edge == h_edge
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        if extend(g, h, order, depth + 1, image, used | (1 << w)) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
