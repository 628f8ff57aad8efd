//! Running explicit orderings, and the factorial brute force over all of
//! them.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigUint;

use super::TreeDistribution;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling on `m` for [`exact_bruteforce`] (10! orderings).
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 10;

/// Outcome of processing one ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestResult {
    /// Indices of kept edges, in the order they were accepted.
    pub kept: Vec<usize>,
    /// Components of the kept forest.
    pub trees: usize,
}

/// Processes edges in `ordering`, keeping an edge iff at least one endpoint
/// has not been seen; a kept edge marks both endpoints seen.
pub fn run_ordering(g: &Graph, ordering: &[usize]) -> Result<ForestResult> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut hit = vec![false; g.m()];
    if ordering.len() != g.m() || !ordering.iter().all(|&i| i < g.m() && !std::mem::replace(&mut hit[i], true)) {
        return Err(Error::NotAPermutation { edges: g.m() });
    }
    let mut seen = vec![false; g.n()];
    let mut kept = Vec::new();
    let mut trees = 0;
    for &i in ordering {
        let (u, v) = g.edges()[i];
        match (seen[u], seen[v]) {
            (true, true) => continue,
            (false, false) => trees += 1,
            _ => {}
        }
        seen[u] = true;
        seen[v] = true;
        kept.push(i);
    }
    Ok(ForestResult { kept, trees })
}

/// Tree count for an ordering already known to be a permutation, on edges
/// given as vertex bitmasks.
pub(crate) fn trees_for(edge_masks: &[(u64, u64)], ordering: &[usize]) -> usize {
    let mut seen = 0u64;
    let mut trees = 0;
    for &i in ordering {
        let (mu, mv) = edge_masks[i];
        let fresh_u = seen & mu == 0;
        let fresh_v = seen & mv == 0;
        if fresh_u && fresh_v {
            trees += 1;
        }
        if fresh_u || fresh_v {
            seen |= mu | mv;
        }
    }
    trees
}

/// Edges as single-bit vertex masks after dropping isolated vertices.
pub(crate) fn edge_masks(g: &Graph) -> Result<Vec<(u64, u64)>> {
    let g = g.strip_isolated();
    if g.n() > 64 {
        return Err(Error::TooLarge { vertices: g.n(), limit: 64 });
    }
    Ok(g.edges().iter().map(|&(u, v)| (1u64 << u, 1u64 << v)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceOptions {
    /// Skip the [`BRUTE_FORCE_EDGE_LIMIT`] check.
    pub force: bool,
    /// Threads; the orderings are split by their first edge. The result
    /// does not depend on this value.
    pub workers: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions { force: false, workers: 1 }
    }
}

/// Exact distribution from all `m!` orderings.
pub fn exact_bruteforce(g: &Graph) -> Result<TreeDistribution> {
    exact_bruteforce_with(g, BruteForceOptions::default())
}

pub fn exact_bruteforce_with(g: &Graph, opts: BruteForceOptions) -> Result<TreeDistribution> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    if m > BRUTE_FORCE_EDGE_LIMIT && !opts.force {
        return Err(Error::TooManyEdges { edges: m, limit: BRUTE_FORCE_EDGE_LIMIT });
    }
    let masks = edge_masks(g)?;
    let workers = opts.workers.clamp(1, m);

    let partials: Vec<Vec<u128>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let masks = &masks;
                scope.spawn(move || {
                    let mut tally = vec![0u128; m + 1];
                    let mut ordering = Vec::with_capacity(m);
                    for first in (w..m).step_by(workers) {
                        ordering.push(first);
                        enumerate(masks, &mut ordering, 1u64 << first, &mut tally);
                        ordering.pop();
                    }
                    tally
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("brute-force worker panicked")).collect()
    });

    let mut tally = vec![0u128; m + 1];
    for part in partials {
        for (k, c) in part.into_iter().enumerate() {
            tally[k] += c;
        }
    }
    let total: BigUint = (1..=m).map(BigUint::from).product();
    let counts: BTreeMap<usize, BigUint> = tally
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| (k, BigUint::from(c)))
        .collect();
    Ok(TreeDistribution::from_counts(counts.iter().map(|(&k, c)| (k, c)), &total))
}

/// Extends `ordering` in every possible way and runs each complete ordering
/// from scratch.
fn enumerate(masks: &[(u64, u64)], ordering: &mut Vec<usize>, used: u64, tally: &mut [u128]) {
    if ordering.len() == masks.len() {
        tally[trees_for(masks, ordering)] += 1;
        return;
    }
    for i in 0..masks.len() {
        if used >> i & 1 == 0 {
            ordering.push(i);
            enumerate(masks, ordering, used | 1 << i, tally);
            ordering.pop();
        }
    }
}
