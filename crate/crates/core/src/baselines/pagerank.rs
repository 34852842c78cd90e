use rayon::prelude::*;

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::rankcore::Ranking;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    pub damping: f64,
    /// Stop once the L1 change between iterates drops below this.
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        PageRankParams {
            damping: 0.85,
            tol: 1e-10,
            max_iters: 200,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PageRankResult {
    /// Contributors `0..|C|` then items.
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
}

/// Power iteration on the undirected bipartite graph with uniform teleport
/// over all nodes. Mass sitting on degree-0 contributors is spread uniformly.
///
/// Each node pulls from its own adjacency in ascending order and all global
/// sums run sequentially, so results are identical for any thread count.
pub fn pagerank(g: &BipartiteGraph, params: &PageRankParams) -> Result<PageRankResult> {
    if !(params.damping > 0.0 && params.damping < 1.0) {
        return Err(Error::InvalidParams(format!(
            "damping must lie in (0, 1), got {}",
            params.damping
        )));
    }
    if params.tol.is_nan() || params.tol < 0.0 {
        return Err(Error::InvalidParams(format!("tol must be >= 0, got {}", params.tol)));
    }
    let nc = g.num_contributors();
    let n = nc + g.num_items();
    let d = params.damping;
    let nf = n as f64;

    let degree: Vec<f64> = g
        .contributors()
        .map(|c| g.contributor_degree(c) as f64)
        .chain(g.items().map(|i| g.item_degree(i) as f64))
        .collect();
    let dangling: Vec<usize> = g.contributors().filter(|&c| g.contributor_degree(c) == 0).map(|c| c as usize).collect();

    let mut x = vec![1.0 / nf; n];
    let mut share = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;

    while iterations < params.max_iters {
        share
            .par_iter_mut()
            .zip(&x)
            .zip(&degree)
            .for_each(|((s, &xv), &dv)| *s = if dv > 0.0 { xv / dv } else { 0.0 });
        let dangling_mass: f64 = dangling.iter().map(|&c| x[c]).sum();
        let base = (1.0 - d) / nf + d * dangling_mass / nf;

        let (next_c, next_i) = next.split_at_mut(nc);
        let (share_c, share_i) = share.split_at(nc);
        next_c.par_iter_mut().enumerate().for_each(|(c, out)| {
            let pulled: f64 = g.items_of(c as u32).iter().map(|&i| share_i[i as usize]).sum();
            *out = base + d * pulled;
        });
        next_i.par_iter_mut().enumerate().for_each(|(i, out)| {
            let pulled: f64 = g.contributors_of(i as u32).iter().map(|&c| share_c[c as usize]).sum();
            *out = base + d * pulled;
        });

        residual = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        iterations += 1;
        if residual < params.tol {
            break;
        }
    }

    Ok(PageRankResult {
        scores: x,
        iterations,
        converged: residual < params.tol,
        residual,
    })
}

/// Ranks contributors by PageRank. A non-converged run still returns its last
/// iterate; check [`PageRankResult::converged`].
pub fn pagerank_rank(g: &BipartiteGraph, params: &PageRankParams) -> Result<(Ranking, PageRankResult)> {
    let result = pagerank(g, params)?;
    let scores = result.scores[..g.num_contributors()].to_vec();
    Ok((Ranking::from_scores(g, "pagerank", scores), result))
}
