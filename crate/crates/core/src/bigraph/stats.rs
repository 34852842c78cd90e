use serde::Serialize;

use super::BipartiteGraph;

/// Structural statistics describing how redundant an instance is.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphStats {
    pub num_contributors: usize,
    pub num_items: usize,
    pub num_edges: usize,
    /// |E| / |C|
    pub mean_contributor_degree: f64,
    /// |E| / |I|
    pub mean_item_degree: f64,
    /// Fraction of contributors with degree exactly 1.
    pub phi_c: f64,
    /// Fraction of items with degree exactly 1.
    pub phi_i: f64,
    /// Fraction of contributors that are the sole neighbor of at least one item.
    pub gamma_c: f64,
}

pub fn degree_stats(g: &BipartiteGraph) -> GraphStats {
    let nc = g.num_contributors();
    let ni = g.num_items();
    let ne = g.num_edges();

    let deg1_contributors = g.contributors().filter(|&c| g.contributor_degree(c) == 1).count();
    let mut sole = vec![false; nc];
    let mut deg1_items = 0usize;
    for i in g.items() {
        if let [c] = g.contributors_of(i) {
            deg1_items += 1;
            sole[*c as usize] = true;
        }
    }
    let unique = sole.iter().filter(|&&s| s).count();

    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    GraphStats {
        num_contributors: nc,
        num_items: ni,
        num_edges: ne,
        mean_contributor_degree: ratio(ne, nc),
        mean_item_degree: ratio(ne, ni),
        phi_c: ratio(deg1_contributors, nc),
        phi_i: ratio(deg1_items, ni),
        gamma_c: ratio(unique, nc),
    }
}
