use rayon::prelude::*;

use super::Ranking;
use crate::bigraph::BipartiteGraph;

/// Per-contributor Shapley values of the coverage game.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapleyScores(Vec<f64>);

impl ShapleyScores {
    pub fn new(values: Vec<f64>) -> Self {
        ShapleyScores(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<f64> {
        self.0
    }

    /// Sums in contributor id order. Equals |I| up to rounding.
    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// ShapleyCov: φ_c = Σ_{i ∈ Γ(c)} 1/deg(i).
///
/// Contributor c is pivotal for item i exactly when it is the last of Γ(i) to arrive,
/// which happens with probability 1/deg(i) in a uniform arrival order. Each
/// contributor's sum runs over its own adjacency in ascending order, so the
/// values do not depend on the thread count.
pub fn shapley_cov(g: &BipartiteGraph) -> ShapleyScores {
    let inv_degree: Vec<f64> = g.items().map(|i| 1.0 / g.item_degree(i) as f64).collect();
    let values = (0..g.num_contributors() as u32)
        .into_par_iter()
        .with_min_len(1024)
        .map(|c| {
            g.items_of(c)
                .iter()
                .map(|&i| inv_degree[i as usize])
                .sum()
        })
        .collect();
    ShapleyScores(values)
}

pub fn shapley_rank(g: &BipartiteGraph) -> Ranking {
    Ranking::from_scores(g, "shapley", shapley_cov(g).into_values())
}
