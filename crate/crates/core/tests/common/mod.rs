#![allow(dead_code)]

use critset::bigraph::{BipartiteGraph, NodeId, SimpleGraph};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair with probability `p`; an item left without edges is given one
/// uniformly chosen contributor.
pub fn random_bipartite(rng: &mut impl Rng, nc: usize, ni: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..ni as NodeId {
        let before = edges.len();
        for c in 0..nc as NodeId {
            if rng.gen_bool(p) {
                edges.push((c, i));
            }
        }
        if edges.len() == before {
            edges.push((rng.gen_range(0..nc as NodeId), i));
        }
    }
    BipartiteGraph::from_id_edges(nc, ni, edges).unwrap().0
}

pub fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n as NodeId {
        for v in u + 1..n as NodeId {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> Vec<NodeId> {
    (0..n as NodeId).filter(|_| rng.gen_bool(0.5)).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<NodeId>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as NodeId);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// cov straight from the definition: items all of whose contributors are in `set`.
pub fn naive_cov(g: &BipartiteGraph, set: &[NodeId]) -> usize {
    g.items()
        .filter(|&i| g.contributors_of(i).iter().all(|c| set.contains(c)))
        .count()
}

pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for k in 0..5 {
        edges.push((k, (k + 1) % 5));
        edges.push((k, k + 5));
        edges.push((k + 5, (k + 2) % 5 + 5));
    }
    SimpleGraph::new(10, edges).unwrap()
}

/// Min-degree peeling with FIFO ties: a vertex's position among equal degrees
/// is its id until its degree first drops, then the time of its latest drop.
pub fn peeling_order(g: &SimpleGraph) -> Vec<NodeId> {
    let n = g.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut stamp: Vec<usize> = (0..n).collect();
    let mut clock = n;
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], stamp[v]))
            .unwrap();
        alive[v] = false;
        order.push(v as NodeId);
        for &u in &adj[v] {
            if alive[u] {
                degree[u] -= 1;
                stamp[u] = clock;
                clock += 1;
            }
        }
    }
    order
}
