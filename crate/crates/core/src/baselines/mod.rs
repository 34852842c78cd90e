//! Comparison rankings: degree, PageRank, betweenness, bipartite min-degree
//! peeling and forward greedy coverage maximization.

mod betweenness;
mod dspeel;
mod greedy;
mod pagerank;

pub use betweenness::{betweenness_rank, betweenness_scores, DEFAULT_SIZE_GUARD};
pub use dspeel::{dspeel_rank, dspeel_removal_order};
pub use greedy::forward_greedy_rank;
pub use pagerank::{pagerank, pagerank_rank, PageRankParams, PageRankResult};

use crate::bigraph::BipartiteGraph;
use crate::rankcore::Ranking;

/// Contributors by degree descending, id ascending.
pub fn degree_rank(g: &BipartiteGraph) -> Ranking {
    let scores = g.contributors().map(|c| g.contributor_degree(c) as f64).collect();
    Ranking::from_scores(g, "degree", scores)
}
