//! Synthetic instances: power-law configuration model, bipartite Erdős–Rényi
//! and the densest-k-subgraph reduction.
//!
//! Generated graphs number items in canonical order (first appearance when
//! edges are listed by contributor, then item), so writing a generated graph
//! and loading it back reproduces the same ids whenever no contributor has
//! degree 0.

mod config;

pub use config::{ConfigMap, ErConfig, PowerLawConfig};

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigraph::{incidence_transform, BipartiteGraph, NodeId, SimpleGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub realized_edges: usize,
    pub duplicates_collapsed: u64,
    /// Items left without any edge (Erdős–Rényi only).
    pub dropped_items: usize,
    /// Unit decrements applied to balance the two degree sums.
    pub reconciliation_decrements: u64,
}

/// Draws `n` degrees from p(d) ∝ d^(−alpha) on `min..=max`.
pub fn sample_degrees<R: Rng>(n: usize, alpha: f64, min: u32, max: u32, rng: &mut R) -> Vec<u32> {
    assert!(1 <= min && min <= max);
    let weights = (min..=max).map(|d| (d as f64).powf(-alpha));
    let dist = WeightedIndex::new(weights).expect("positive finite weights");
    (0..n).map(|_| min + dist.sample(rng) as u32).collect()
}

/// Lowers degrees on the heavier side, one unit at a time at uniformly chosen
/// nodes still above `floor`, until both sums agree. Returns the number of
/// decrements.
pub fn reconcile_degrees<R: Rng>(
    contributors: &mut [u32],
    items: &mut [u32],
    floor_c: u32,
    floor_i: u32,
    rng: &mut R,
) -> Result<u64> {
    let sum_c: u64 = contributors.iter().map(|&d| d as u64).sum();
    let sum_i: u64 = items.iter().map(|&d| d as u64).sum();
    let (heavy, floor, excess) = match sum_c.cmp(&sum_i) {
        std::cmp::Ordering::Equal => return Ok(0),
        std::cmp::Ordering::Greater => (contributors, floor_c, sum_c - sum_i),
        std::cmp::Ordering::Less => (items, floor_i, sum_i - sum_c),
    };
    let mut candidates: Vec<usize> = (0..heavy.len()).filter(|&n| heavy[n] > floor).collect();
    for _ in 0..excess {
        if candidates.is_empty() {
            return Err(Error::Infeasible(
                "degree sums cannot be reconciled: heavier side is already at its minimum degree"
                    .into(),
            ));
        }
        let j = rng.gen_range(0..candidates.len());
        let node = candidates[j];
        heavy[node] -= 1;
        if heavy[node] == floor {
            candidates.swap_remove(j);
        }
    }
    Ok(excess)
}

/// Pairs contributor stubs (in id order) with a uniformly shuffled list of
/// item stubs, then collapses repeated pairs. Degree sums must agree.
pub fn match_stubs<R: Rng>(
    contributor_degrees: &[u32],
    item_degrees: &[u32],
    rng: &mut R,
) -> Result<(BipartiteGraph, GenerationReport)> {
    let stubs = |degrees: &[u32]| -> Vec<NodeId> {
        degrees
            .iter()
            .enumerate()
            .flat_map(|(n, &d)| std::iter::repeat_n(n as NodeId, d as usize))
            .collect()
    };
    let left = stubs(contributor_degrees);
    let mut right = stubs(item_degrees);
    if left.len() != right.len() {
        return Err(Error::Infeasible(format!(
            "stub counts differ: {} contributor stubs, {} item stubs",
            left.len(),
            right.len()
        )));
    }
    right.shuffle(rng);
    let pairs = left.into_iter().zip(right).collect();
    canonical_graph(contributor_degrees.len(), item_degrees.len(), pairs)
}

/// Sorts and dedups pairs, renumbers items by first appearance and drops
/// items that never appear.
fn canonical_graph(
    n_contributors: usize,
    n_items: usize,
    mut pairs: Vec<(NodeId, NodeId)>,
) -> Result<(BipartiteGraph, GenerationReport)> {
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    let duplicates = (before - pairs.len()) as u64;

    const UNSEEN: NodeId = NodeId::MAX;
    let mut remap = vec![UNSEEN; n_items];
    let mut next = 0;
    for (_, i) in pairs.iter_mut() {
        let slot = &mut remap[*i as usize];
        if *slot == UNSEEN {
            *slot = next;
            next += 1;
        }
        *i = *slot;
    }
    let used = next as usize;
    let realized = pairs.len();
    let (g, dups) = BipartiteGraph::from_id_edges(n_contributors, used, pairs)?;
    debug_assert_eq!(dups, 0);
    Ok((
        g,
        GenerationReport {
            realized_edges: realized,
            duplicates_collapsed: duplicates,
            dropped_items: n_items - used,
            reconciliation_decrements: 0,
        },
    ))
}

pub fn generate_powerlaw(cfg: &PowerLawConfig) -> Result<(BipartiteGraph, GenerationReport)> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut dc = sample_degrees(cfg.n_contributors, cfg.alpha_c, 1, cfg.max_degree_c, &mut rng);
    let mut di = sample_degrees(
        cfg.n_items,
        cfg.alpha_i,
        cfg.min_degree_i,
        cfg.max_degree_i,
        &mut rng,
    );
    let decrements = reconcile_degrees(&mut dc, &mut di, 1, cfg.min_degree_i, &mut rng)?;
    let (g, mut report) = match_stubs(&dc, &di, &mut rng)?;
    report.reconciliation_decrements = decrements;
    Ok((g, report))
}

/// Pairs are visited with geometric skips, so the cost is proportional to the
/// number of edges rather than |C|·|I|.
pub fn generate_er(cfg: &ErConfig) -> Result<(BipartiteGraph, GenerationReport)> {
    cfg.validate()?;
    let total = cfg.n_contributors as u64 * cfg.n_items as u64;
    let ni = cfg.n_items as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = Vec::new();
    if cfg.p >= 1.0 {
        pairs.extend((0..total).map(|k| ((k / ni) as NodeId, (k % ni) as NodeId)));
    } else if cfg.p > 0.0 {
        pairs.reserve((total as f64 * cfg.p * 1.05) as usize);
        let log_q = (1.0 - cfg.p).ln();
        let mut k: u64 = 0;
        loop {
            // 1 - U lies in (0, 1], keeping the logarithm finite.
            let u: f64 = 1.0 - rng.gen::<f64>();
            let skip = (u.ln() / log_q).floor();
            if skip >= (total - k) as f64 {
                break;
            }
            k += skip as u64;
            pairs.push(((k / ni) as NodeId, (k % ni) as NodeId));
            k += 1;
            if k >= total {
                break;
            }
        }
    }
    canonical_graph(cfg.n_contributors, cfg.n_items, pairs)
}

/// The densest-k-subgraph instance `(G, k)` as a CRITICALSET instance with
/// the same budget: cov(S) on the result equals |E(G[S])|.
pub fn dks_to_criticalset(g: &SimpleGraph, k: usize) -> Result<(BipartiteGraph, usize)> {
    Ok((incidence_transform(g)?, k))
}

/// G(n, m): `m` distinct edges chosen uniformly among all vertex pairs.
pub fn random_simple_graph(n: usize, m: usize, seed: u64) -> Result<SimpleGraph> {
    let all: Vec<(NodeId, NodeId)> = (0..n as NodeId)
        .flat_map(|u| (u + 1..n as NodeId).map(move |v| (u, v)))
        .collect();
    if m > all.len() {
        return Err(Error::Infeasible(format!("{m} edges requested, only {} pairs", all.len())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = all.choose_multiple(&mut rng, m).copied().collect();
    SimpleGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::write_edge_list;

    fn canonical_bytes(g: &BipartiteGraph) -> Vec<u8> {
        let mut out = Vec::new();
        write_edge_list(g, &mut out).unwrap();
        out
    }

    #[test]
    fn unit_degrees_give_a_perfect_matching() {
        let cfg = PowerLawConfig {
            n_contributors: 50,
            n_items: 50,
            alpha_c: 2.0,
            alpha_i: 2.0,
            max_degree_c: 1,
            max_degree_i: 1,
            min_degree_i: 1,
            seed: 3,
        };
        let (g, r) = generate_powerlaw(&cfg).unwrap();
        assert_eq!(r.realized_edges, 50);
        assert!(g.contributors().all(|c| g.contributor_degree(c) == 1));
        assert!(g.items().all(|i| g.item_degree(i) == 1));
    }

    #[test]
    fn unequal_unit_sides_are_infeasible() {
        let cfg = PowerLawConfig {
            n_contributors: 5,
            n_items: 3,
            alpha_c: 1.0,
            alpha_i: 1.0,
            max_degree_c: 1,
            max_degree_i: 1,
            min_degree_i: 1,
            seed: 0,
        };
        assert!(matches!(generate_powerlaw(&cfg), Err(Error::Infeasible(_))));
    }

    #[test]
    fn caps_and_invariants_hold() {
        let cfg = PowerLawConfig {
            n_contributors: 400,
            n_items: 300,
            alpha_c: 0.5,
            alpha_i: 0.7,
            max_degree_c: 20,
            max_degree_i: 60,
            min_degree_i: 2,
            seed: 11,
        };
        let (g, r) = generate_powerlaw(&cfg).unwrap();
        g.validate().unwrap();
        assert!(g.max_contributor_degree() <= 20);
        assert!(g.max_item_degree() <= 60);
        assert_eq!(g.num_edges(), r.realized_edges);
        assert_eq!(g.num_items(), 300);
        let (again, _) = generate_powerlaw(&cfg).unwrap();
        assert_eq!(canonical_bytes(&g), canonical_bytes(&again));
    }

    #[test]
    fn er_extremes() {
        let cfg = ErConfig { n_contributors: 3, n_items: 3, p: 0.0, seed: 1 };
        assert!(matches!(generate_er(&cfg), Err(Error::EmptyGraph)));
        let cfg = ErConfig { n_contributors: 3, n_items: 3, p: 1.0, seed: 1 };
        let (g, r) = generate_er(&cfg).unwrap();
        assert_eq!(g.num_edges(), 9);
        assert_eq!(r.dropped_items, 0);
    }

    #[test]
    fn er_keeps_isolated_contributors_and_drops_isolated_items() {
        let cfg = ErConfig { n_contributors: 40, n_items: 40, p: 0.02, seed: 4 };
        let (g, r) = generate_er(&cfg).unwrap();
        assert_eq!(g.num_contributors(), 40);
        assert_eq!(g.num_items() + r.dropped_items, 40);
        assert!(r.dropped_items > 0);
        assert!(g.contributors().any(|c| g.contributor_degree(c) == 0));
        g.validate().unwrap();
    }

    #[test]
    fn reconcile_respects_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut c = vec![5, 5, 5];
        let mut i = vec![3, 3];
        assert_eq!(reconcile_degrees(&mut c, &mut i, 1, 3, &mut rng).unwrap(), 9);
        assert_eq!(c.iter().sum::<u32>(), 6);
        assert!(c.iter().all(|&d| d >= 1));
        assert_eq!(i, vec![3, 3]);
    }

    #[test]
    fn reduction_keeps_budget() {
        let k3 = SimpleGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let (b, k) = dks_to_criticalset(&k3, 3).unwrap();
        assert_eq!(k, 3);
        assert_eq!(crate::eval::cov(&b, &[0, 1, 2]).unwrap(), 3);
        assert!(matches!(
            SimpleGraph::new(2, vec![(0, 0)]),
            Err(Error::SelfLoop(_))
        ));
    }
}
