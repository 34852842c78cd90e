//! Wall-clock scaling of MinCov and ShapleyCov on random bipartite graphs.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::rankcore::{mincov, shapley_cov};
use crate::synth::{generate_er, ErConfig};

/// Nodes per side of every benchmark graph.
pub const BENCH_NODES: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingRow {
    /// Requested edge count; the realized count is in `realized_edges`.
    pub edges: u64,
    pub realized_edges: usize,
    pub method: &'static str,
    pub seconds: f64,
}

impl TimingRow {
    pub fn per_edge(&self) -> f64 {
        self.seconds / self.realized_edges as f64
    }
}

/// ER graph with `BENCH_NODES` per side and expected edge count `edges`.
pub fn bench_graph(edges: u64, seed: u64) -> Result<BipartiteGraph> {
    let n = BENCH_NODES as f64;
    let p = edges as f64 / (n * n);
    if p > 1.0 {
        return Err(Error::InvalidParams(format!(
            "{edges} edges do not fit in {BENCH_NODES}x{BENCH_NODES}"
        )));
    }
    let cfg = ErConfig {
        n_contributors: BENCH_NODES,
        n_items: BENCH_NODES,
        p,
        seed,
    };
    Ok(generate_er(&cfg)?.0)
}

fn best_of<T>(repeats: usize, mut f: impl FnMut() -> T) -> Duration {
    (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .min()
        .unwrap()
}

/// Times both methods on one worker thread, keeping the best of `repeats`
/// runs. Graph generation is not timed.
pub fn run_bench(edge_counts: &[u64], seed: u64, repeats: usize) -> Result<Vec<TimingRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let mut rows = Vec::with_capacity(edge_counts.len() * 2);
    for &edges in edge_counts {
        let g = bench_graph(edges, seed)?;
        let realized_edges = g.num_edges();
        let mincov_time = pool.install(|| best_of(repeats, || mincov(&g)));
        let shapley_time = pool.install(|| best_of(repeats, || shapley_cov(&g)));
        for (method, t) in [("mincov", mincov_time), ("shapley", shapley_time)] {
            rows.push(TimingRow {
                edges,
                realized_edges,
                method,
                seconds: t.as_secs_f64(),
            });
        }
    }
    Ok(rows)
}

pub fn write_timing_csv<W: Write>(rows: &[TimingRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "edges,method,seconds")?;
    for r in rows {
        writeln!(out, "{},{},{:.6}", r.edges, r.method, r.seconds)?;
    }
    out.flush()
}
