//! Critical contributor sets in bipartite dependency networks.
//!
//! A [`BipartiteGraph`] links contributors to the items they support. An item
//! fails once all of its contributors are removed; `cov(S)` counts the items
//! whose contributors all lie in `S`. The crate ranks contributors so that
//! coverage grows as fast as possible along the ranking, and measures the
//! result by the normalized area under the coverage curve.

pub mod baselines;
pub mod bench;
pub mod bigraph;
mod error;
pub mod eval;
pub mod rankcore;
pub mod search;
pub mod synth;

pub use bigraph::{load_edge_list, BipartiteGraph, NodeId, SimpleGraph};
pub use error::{Error, Result};
pub use eval::{cov, coverage_curve, CoverageCurve};
pub use rankcore::{mincov, shapley_cov, shapley_rank, Ranking};
