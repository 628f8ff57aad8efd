//! Seeded Monte Carlo estimation.
//!
//! Generator: ChaCha8 (`rand_chacha`), seeded with `seed_from_u64(seed)`,
//! worker `w` reading stream `w`. Each trial starts from the identity
//! ordering and applies a Fisher–Yates shuffle (`i` from `m-1` down to 1,
//! swap with `j` uniform in `0..=i`), where `j` is drawn by Lemire's
//! multiply-and-reject method on 64-bit outputs. Worker `w` of `W` runs
//! `trials / W` trials, plus one if `w < trials % W`.

use std::collections::BTreeMap;
use std::thread;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::engine::{edge_masks, trees_for};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McEstimate {
    pub trials: u64,
    /// Occurrences of each tree count; sums to `trials`.
    pub counts: BTreeMap<usize, u64>,
    pub seed: u64,
    pub workers: usize,
}

/// Single-worker estimate.
pub fn monte_carlo(g: &Graph, trials: u64, seed: u64) -> Result<McEstimate> {
    monte_carlo_parallel(g, trials, seed, 1)
}

/// The counts are a pure function of `(g, trials, seed, workers)`.
pub fn monte_carlo_parallel(g: &Graph, trials: u64, seed: u64, workers: usize) -> Result<McEstimate> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let masks = edge_masks(g)?;
    let workers = workers.max(1);
    let base = trials / workers as u64;
    let extra = trials % workers as u64;

    let partials: Vec<BTreeMap<usize, u64>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let masks = &masks;
                let share = base + u64::from((w as u64) < extra);
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(w as u64);
                    let mut counts = BTreeMap::new();
                    let mut ordering: Vec<usize> = Vec::with_capacity(masks.len());
                    for _ in 0..share {
                        ordering.clear();
                        ordering.extend(0..masks.len());
                        shuffle(&mut ordering, &mut rng);
                        *counts.entry(trees_for(masks, &ordering)).or_insert(0) += 1;
                    }
                    counts
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });

    let mut counts = BTreeMap::new();
    for part in partials {
        for (k, c) in part {
            *counts.entry(k).or_insert(0) += c;
        }
    }
    Ok(McEstimate { trials, counts, seed, workers })
}

/// Fisher–Yates, high index first.
pub fn shuffle<T>(items: &mut [T], rng: &mut impl RngCore) {
    for i in (1..items.len()).rev() {
        let j = bounded(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// Uniform integer in `0..n` (Lemire, "Fast random integer generation in
/// an interval", 2019).
fn bounded(rng: &mut impl RngCore, n: u64) -> u64 {
    debug_assert!(n > 0);
    let mut product = u128::from(rng.next_u64()) * u128::from(n);
    let mut low = product as u64;
    if low < n {
        let threshold = n.wrapping_neg() % n;
        while low < threshold {
            product = u128::from(rng.next_u64()) * u128::from(n);
            low = product as u64;
        }
    }
    (product >> 64) as u64
}

/// Point estimate `counts[k] / trials` and its binomial standard error
/// `sqrt(p(1-p)/trials)`.
pub fn estimate_with_stderr(e: &McEstimate, k: usize) -> (f64, f64) {
    let hits = e.counts.get(&k).copied().unwrap_or(0) as f64;
    let n = e.trials as f64;
    let p = hits / n;
    (p, (p * (1.0 - p) / n).sqrt())
}
