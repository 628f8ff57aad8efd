//! Running the forest process and computing its tree-count distribution.

pub mod distribution;
pub mod engine;
pub mod montecarlo;
pub mod subset_dp;

pub use distribution::TreeDistribution;
pub use engine::{exact_bruteforce, exact_bruteforce_with, run_ordering, BruteForceOptions, ForestResult, BRUTE_FORCE_EDGE_LIMIT};
pub use montecarlo::{estimate_with_stderr, monte_carlo, monte_carlo_parallel, McEstimate};
pub use subset_dp::{exact_subset_dp, exact_subset_dp_forced, SUBSET_DP_VERTEX_LIMIT};
