//! Exact distribution by dynamic programming over seen-vertex sets.
//!
//! Orderings are aggregated by `(S, k)`: the set `S` of vertices touched by
//! kept edges and the number `k` of trees started so far. The forest on `S`
//! has `|S| - k` edges, all inside `S`, and every edge that was skipped also
//! lies inside `S`. Edges inside `S` can never be kept again, so they only
//! delay the process. Conditioned on the prefix, the next edge with an
//! endpoint outside `S` is uniform over all `m - inside(S)` such edges; it
//! moves to `S + {w}` (one new endpoint) or to `S + {u, v}` with `k + 1`
//! (two new endpoints). The process ends when no such edge remains.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::engine::edge_masks;
use super::TreeDistribution;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling on the number of non-isolated vertices.
pub const SUBSET_DP_VERTEX_LIMIT: usize = 20;

/// Exact distribution; isolated vertices are ignored and at most
/// [`SUBSET_DP_VERTEX_LIMIT`] others are allowed.
pub fn exact_subset_dp(g: &Graph) -> Result<TreeDistribution> {
    let n = g.strip_isolated().n();
    if n > SUBSET_DP_VERTEX_LIMIT {
        return Err(Error::TooManyVertices { vertices: n, limit: SUBSET_DP_VERTEX_LIMIT });
    }
    exact_subset_dp_forced(g)
}

/// [`exact_subset_dp`] without the vertex guard (still limited to 64
/// non-isolated vertices by the bitmask width).
pub fn exact_subset_dp_forced(g: &Graph) -> Result<TreeDistribution> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let masks = edge_masks(g)?;
    let n = g.strip_isolated().n();
    let m = masks.len() as u64;

    // A state (S, k) is reached after |S| - k transitions, each dividing by
    // some live count in 1..=m, so its mass is N / L^(|S|-k) with integer N
    // and L = lcm(1..=m). Carrying N keeps the inner loop free of gcds.
    let lcm = (1..=m).fold(1u64, |acc, x| acc.lcm(&x));

    // layers[p] holds the states with |S| = p; every transition grows S, so
    // layers can be settled in order.
    let mut layers: Vec<HashMap<(u64, usize), BigUint>> = vec![HashMap::new(); n + 1];
    layers[0].insert((0, 0), BigUint::one());
    // finished[(k, steps)] is a numerator over L^steps
    let mut finished: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();

    for p in 0..=n {
        let layer = std::mem::take(&mut layers[p]);
        for ((seen, trees), mass) in layer {
            let inside = masks.iter().filter(|&&(mu, mv)| seen & mu != 0 && seen & mv != 0).count();
            debug_assert!(inside + trees >= p, "kept forest must lie inside the seen set");
            debug_assert!(inside <= masks.len());
            let live = masks.len() - inside;
            if live == 0 {
                *finished.entry((trees, p - trees)).or_insert_with(BigUint::zero) += mass;
                continue;
            }
            let share = mass * (lcm / live as u64);
            for &(mu, mv) in &masks {
                let fresh_u = seen & mu == 0;
                let fresh_v = seen & mv == 0;
                if !fresh_u && !fresh_v {
                    continue;
                }
                let next = seen | mu | mv;
                let key = (next, trees + usize::from(fresh_u && fresh_v));
                let slot = layers[next.count_ones() as usize].entry(key).or_insert_with(BigUint::zero);
                *slot += &share;
            }
        }
    }

    let lcm = BigInt::from(lcm);
    Ok(TreeDistribution::from_entries(finished.into_iter().map(|((k, steps), numer)| {
        (k, BigRational::new(BigInt::from(numer), num_traits::pow(lcm.clone(), steps)))
    })))
}
