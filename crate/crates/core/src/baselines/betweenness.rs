use rayon::prelude::*;

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::rankcore::Ranking;

pub const DEFAULT_SIZE_GUARD: usize = 50_000;

/// Sources handled by one sequential accumulator.
const SOURCES_PER_CHUNK: usize = 64;
/// Chunks processed concurrently before their partial sums are folded in.
const CHUNKS_PER_WAVE: usize = 32;

/// Exact unnormalized betweenness of every node (contributors first, then
/// items), counting each unordered pair once.
///
/// Sources are split into fixed chunks whose partial sums are added in chunk
/// order, so the result does not depend on the thread count.
pub fn betweenness_scores(g: &BipartiteGraph, size_guard: usize) -> Result<Vec<f64>> {
    let nc = g.num_contributors();
    let n = nc + g.num_items();
    if n > size_guard {
        return Err(Error::ResourceGuard {
            what: "node count",
            actual: n as u128,
            limit: size_guard as u128,
            hint: "raise --size-guard to override",
        });
    }

    let mut total = vec![0.0; n];
    let chunks: Vec<(usize, usize)> = (0..n)
        .step_by(SOURCES_PER_CHUNK)
        .map(|s| (s, (s + SOURCES_PER_CHUNK).min(n)))
        .collect();
    for wave in chunks.chunks(CHUNKS_PER_WAVE) {
        let partials: Vec<Vec<f64>> = wave
            .par_iter()
            .map(|&(lo, hi)| {
                let mut state = Brandes::new(n);
                let mut acc = vec![0.0; n];
                for s in lo..hi {
                    state.accumulate(g, s as u32, &mut acc);
                }
                acc
            })
            .collect();
        for p in partials {
            for (t, v) in total.iter_mut().zip(p) {
                *t += v;
            }
        }
    }
    for t in &mut total {
        *t /= 2.0;
    }
    Ok(total)
}

pub fn betweenness_rank(g: &BipartiteGraph, size_guard: usize) -> Result<Ranking> {
    let mut scores = betweenness_scores(g, size_guard)?;
    scores.truncate(g.num_contributors());
    Ok(Ranking::from_scores(g, "betweenness", scores))
}

/// Per-node search state, kept together so a neighbor visit touches one
/// cache line.
#[derive(Clone, Copy)]
struct NodeState {
    dist: u32,
    sigma: f64,
    delta: f64,
}

const UNSEEN: NodeState = NodeState {
    dist: u32::MAX,
    sigma: 0.0,
    delta: 0.0,
};

struct Brandes {
    nodes: Vec<NodeState>,
    stack: Vec<u32>,
}

impl Brandes {
    fn new(n: usize) -> Self {
        Brandes {
            nodes: vec![UNSEEN; n],
            stack: Vec::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &BipartiteGraph, source: u32, acc: &mut [f64]) {
        let nc = g.num_contributors() as u32;
        let neighbors = |v: u32| -> (&[u32], u32) {
            if v < nc {
                (g.items_of(v), nc)
            } else {
                (g.contributors_of(v - nc), 0)
            }
        };
        let nodes = &mut self.nodes;

        self.stack.clear();
        nodes[source as usize].dist = 0;
        nodes[source as usize].sigma = 1.0;
        self.stack.push(source);
        // The stack doubles as the BFS queue: it holds nodes in visit order.
        let mut head = 0;
        while head < self.stack.len() {
            let v = self.stack[head];
            head += 1;
            let NodeState { dist: dv, sigma: sv, .. } = nodes[v as usize];
            let (adj, offset) = neighbors(v);
            for &w in adj {
                let node = &mut nodes[(w + offset) as usize];
                if node.dist == u32::MAX {
                    node.dist = dv + 1;
                    self.stack.push(w + offset);
                }
                if node.dist == dv + 1 {
                    node.sigma += sv;
                }
            }
        }

        // A bipartite graph has no edge inside a BFS level, so every neighbor
        // closer to the source is a predecessor.
        for &w in self.stack.iter().rev() {
            let wi = w as usize;
            let NodeState { dist: dw, sigma: sw, delta: lw } = nodes[wi];
            let (adj, offset) = neighbors(w);
            let coeff = (1.0 + lw) / sw;
            for &v in adj {
                let node = &mut nodes[(v + offset) as usize];
                if node.dist < dw {
                    node.delta += node.sigma * coeff;
                }
            }
            if w != source {
                acc[wi] += lw;
            }
        }

        for &w in &self.stack {
            nodes[w as usize] = UNSEEN;
        }
    }
}
