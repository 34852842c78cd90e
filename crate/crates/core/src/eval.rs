//! Coverage objective, coverage curves and their normalized area.

use std::io::Write;

use serde::Serialize;

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};
use crate::rankcore::{check_permutation, Ranking};

/// Number of items whose every contributor is in `set`.
///
/// Repeated ids in `set` count once.
pub fn cov(g: &BipartiteGraph, set: &[NodeId]) -> Result<usize> {
    let mut selected = vec![false; g.num_contributors()];
    for &c in set {
        *selected
            .get_mut(c as usize)
            .ok_or(Error::UnknownContributor(c))? = true;
    }
    let mut missing: Vec<u32> = g.items().map(|i| g.item_degree(i) as u32).collect();
    let mut covered = 0;
    for c in g.contributors().filter(|&c| selected[c as usize]) {
        for &i in g.items_of(c) {
            missing[i as usize] -= 1;
            if missing[i as usize] == 0 {
                covered += 1;
            }
        }
    }
    Ok(covered)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCurve {
    /// Entry `k - 1` is cov of the length-`k` prefix.
    covered: Vec<u64>,
    total_items: u64,
    auc: f64,
}

impl CoverageCurve {
    pub fn covered(&self) -> &[u64] {
        &self.covered
    }

    pub fn total_items(&self) -> u64 {
        self.total_items
    }

    pub fn auc(&self) -> f64 {
        self.auc
    }

    pub fn num_contributors(&self) -> usize {
        self.covered.len()
    }

    /// `k,covered,fraction`, starting with a `0,0,0` row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "k,covered,fraction")?;
        writeln!(out, "0,0,0")?;
        for (k, &c) in self.covered.iter().enumerate() {
            let frac = c as f64 / self.total_items as f64;
            writeln!(out, "{},{},{}", k + 1, c, frac)?;
        }
        out.flush()
    }

    pub fn summary(&self, method: &str) -> CurveSummary {
        CurveSummary {
            method: method.to_owned(),
            auc: self.auc,
            num_contributors: self.covered.len(),
            num_items: self.total_items as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSummary {
    pub method: String,
    pub auc: f64,
    pub num_contributors: usize,
    pub num_items: usize,
}

/// Builds the curve from any order of contributors in one sweep.
pub fn coverage_curve_of(g: &BipartiteGraph, order: &[NodeId]) -> Result<CoverageCurve> {
    check_permutation(order, g.num_contributors())?;
    let mut missing: Vec<u32> = g.items().map(|i| g.item_degree(i) as u32).collect();
    let mut covered = Vec::with_capacity(order.len());
    let mut running = 0u64;
    for &c in order {
        for &i in g.items_of(c) {
            let m = &mut missing[i as usize];
            *m -= 1;
            if *m == 0 {
                running += 1;
            }
        }
        covered.push(running);
    }
    let auc = auc_of(&covered, g.num_items() as u64);
    Ok(CoverageCurve {
        covered,
        total_items: g.num_items() as u64,
        auc,
    })
}

pub fn coverage_curve(g: &BipartiteGraph, ranking: &Ranking) -> Result<CoverageCurve> {
    coverage_curve_of(g, ranking.order())
}

/// (1/|C|) Σ_k covered[k]/|I|, accumulated exactly in integers.
pub fn auc_of(covered: &[u64], total_items: u64) -> f64 {
    if covered.is_empty() || total_items == 0 {
        return 0.0;
    }
    let sum: u128 = covered.iter().map(|&c| c as u128).sum();
    sum as f64 / (covered.len() as f64 * total_items as f64)
}
