//! Tree-count distributions of the random edge-ordering forest process.
//!
//! Shuffle the edges of a graph, then walk them in order and keep an edge
//! only when it touches a vertex no earlier kept edge has touched. The kept
//! edges always form a forest; this crate computes the distribution of its
//! number of trees exactly (factorial enumeration or a seen-set dynamic
//! program), estimates it by seeded simulation, evaluates the known closed
//! forms for several graph families, and searches those families for
//! non-isomorphic graphs sharing a probability profile.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod process;
pub mod search;

pub use error::{Error, Result};
pub use graph::family::{Classification, FamilySpec, UnclassifiedReason};
pub use graph::Graph;
pub use process::distribution::TreeDistribution;
