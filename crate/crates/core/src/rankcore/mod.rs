//! ShapleyCov centrality and MinCov peeling, plus the [`Ranking`] type every
//! method produces.

mod bucket;
mod mincov;
mod ranking;
mod shapley;

pub use bucket::BucketQueue;
pub use mincov::{mincov, mincov_removal_order};
pub use ranking::{check_permutation, read_labels, Ranking};
pub use shapley::{shapley_cov, shapley_rank, ShapleyScores};
