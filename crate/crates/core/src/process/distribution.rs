use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Exact probabilities `P(G, k)` of ending with `k` trees. Only nonzero
/// entries are stored; every value is a reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TreeDistribution {
    probs: BTreeMap<usize, BigRational>,
}

impl TreeDistribution {
    /// Builds a distribution from arbitrary entries, dropping zeros. No
    /// normalisation check is made; see [`TreeDistribution::is_normalized`].
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut probs = BTreeMap::new();
        for (k, p) in entries {
            if !p.is_zero() {
                *probs.entry(k).or_insert_with(BigRational::zero) += p;
            }
        }
        probs.retain(|_, p: &mut BigRational| !p.is_zero());
        TreeDistribution { probs }
    }

    /// `counts[k] / total` for every `k`.
    pub fn from_counts<'a>(counts: impl IntoIterator<Item = (usize, &'a BigUint)>, total: &BigUint) -> Self {
        let total = BigInt::from(total.clone());
        Self::from_entries(
            counts
                .into_iter()
                .map(|(k, c)| (k, BigRational::new(BigInt::from(c.clone()), total.clone()))),
        )
    }

    /// The point mass at `k`.
    pub fn certain(k: usize) -> Self {
        Self::from_entries([(k, BigRational::one())])
    }

    /// `P(G, k)`, zero outside the support.
    pub fn get(&self, k: usize) -> BigRational {
        self.probs.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.probs.iter().map(|(&k, p)| (k, p))
    }

    pub fn k_min(&self) -> Option<usize> {
        self.probs.keys().next().copied()
    }

    pub fn k_max(&self) -> Option<usize> {
        self.probs.keys().next_back().copied()
    }

    pub fn total(&self) -> BigRational {
        self.probs.values().fold(BigRational::zero(), |acc, p| acc + p)
    }

    pub fn is_normalized(&self) -> bool {
        self.total().is_one()
    }

    /// Support is `k_min..=k_max` with no gaps.
    pub fn has_contiguous_support(&self) -> bool {
        match (self.k_min(), self.k_max()) {
            (Some(lo), Some(hi)) => self.probs.len() == hi - lo + 1,
            _ => true,
        }
    }

    /// Dense `(P(G,1), ..., P(G,k_max))`.
    pub fn profile(&self) -> Vec<BigRational> {
        (1..=self.k_max().unwrap_or(0)).map(|k| self.get(k)).collect()
    }

    pub fn to_f64(&self, k: usize) -> f64 {
        ratio_to_f64(&self.get(k))
    }

    /// One-line rendering such as `1: 5/6, 2: 1/6`.
    pub fn summary(&self) -> String {
        self.probs
            .iter()
            .map(|(k, p)| format!("{k}: {}", fraction(p)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// An exact rational as decimal strings, for structured output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPair {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalPair {
    fn from(p: &BigRational) -> Self {
        RationalPair { num: p.numer().to_string(), den: p.denom().to_string() }
    }
}

/// Always `num/den`, even for integers, so output is uniform to parse.
pub fn fraction(p: &BigRational) -> String {
    format!("{}/{}", p.numer(), p.denom())
}

pub fn ratio_to_f64(p: &BigRational) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}

/// One `k: numerator/denominator` line per nonzero entry.
impl fmt::Display for TreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in &self.probs {
            writeln!(f, "{k}: {}", fraction(p))?;
        }
        Ok(())
    }
}
