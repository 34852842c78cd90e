//! Stochastic hill climbing over full contributor orderings.
//!
//! The objective is the coverage-curve AUC. Writing t(i) for the 0-based
//! position of the last contributor of item i, item i is covered by every
//! prefix longer than t(i), so
//!
//! ```text
//! AUC = Σ_i (|C| − t(i)) / (|C|·|I|)
//! ```
//!
//! and maximizing AUC is minimizing the integer Σ_i t(i). A swap only moves
//! two contributors, so the change in that sum is computed from their items
//! alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};
use crate::eval::coverage_curve_of;
use crate::rankcore::{mincov, Ranking};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitStrategy {
    Random,
    MinCovSeeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShcParams {
    pub seed: u64,
    pub restarts: usize,
    pub max_moves_per_restart: u64,
    /// Consecutive moves without strict improvement before a restart stops.
    pub patience: u64,
    pub init: InitStrategy,
}

impl ShcParams {
    pub fn new(seed: u64) -> Self {
        ShcParams {
            seed,
            restarts: 4,
            max_moves_per_restart: 20_000,
            patience: 5_000,
            init: InitStrategy::MinCovSeeded,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidParams("restarts must be at least 1".into()));
        }
        if self.patience > self.max_moves_per_restart {
            return Err(Error::InvalidParams(format!(
                "patience ({}) exceeds max moves per restart ({})",
                self.patience, self.max_moves_per_restart
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RestartStats {
    pub seed: u64,
    pub start_auc: f64,
    pub final_auc: f64,
    pub moves: u64,
    pub accepted: u64,
    pub improving: u64,
}

#[derive(Debug, Clone)]
pub struct ShcOutcome {
    pub ranking: Ranking,
    pub auc: f64,
    pub restarts: Vec<RestartStats>,
}

/// Runs all restarts in parallel; restart `r` uses seed `seed + r`. The best
/// ordering wins, ties going to the lowest restart index.
pub fn shc_rank(g: &BipartiteGraph, params: &ShcParams) -> Result<ShcOutcome> {
    params.validate()?;
    let seeded = initial_order(g, params.init);
    let runs: Vec<(Vec<NodeId>, u64, RestartStats)> = (0..params.restarts)
        .into_par_iter()
        .map(|r| climb(g, params, r, seeded.as_deref(), |_| {}))
        .collect();
    finish(g, runs)
}

/// Sequential variant of [`shc_rank`] reporting the AUC after every accepted
/// move as `(restart, auc)`. Produces the same result.
pub fn shc_rank_traced(
    g: &BipartiteGraph,
    params: &ShcParams,
    mut observer: impl FnMut(usize, f64),
) -> Result<ShcOutcome> {
    params.validate()?;
    let seeded = initial_order(g, params.init);
    let runs = (0..params.restarts)
        .map(|r| climb(g, params, r, seeded.as_deref(), |auc| observer(r, auc)))
        .collect();
    finish(g, runs)
}

fn initial_order(g: &BipartiteGraph, init: InitStrategy) -> Option<Vec<NodeId>> {
    match init {
        InitStrategy::Random => None,
        InitStrategy::MinCovSeeded => Some(mincov(g).into_order()),
    }
}

fn finish(g: &BipartiteGraph, runs: Vec<(Vec<NodeId>, u64, RestartStats)>) -> Result<ShcOutcome> {
    let mut best: Option<(Vec<NodeId>, u64)> = None;
    let mut stats = Vec::with_capacity(runs.len());
    for (order, cost, s) in runs {
        if best.as_ref().is_none_or(|(_, c)| cost < *c) {
            best = Some((order, cost));
        }
        stats.push(s);
    }
    let (mut order, _) = best.expect("at least one restart");
    // Equal-cost plateau moves can drift degree-0 contributors forward;
    // moving them to the tail never lowers the AUC.
    let (mut live, idle): (Vec<NodeId>, Vec<NodeId>) =
        order.drain(..).partition(|&c| g.contributor_degree(c) > 0);
    live.extend(idle);
    let auc = coverage_curve_of(g, &live)?.auc();
    Ok(ShcOutcome {
        ranking: Ranking::from_order_unchecked("shc", live),
        auc,
        restarts: stats,
    })
}

fn climb(
    g: &BipartiteGraph,
    params: &ShcParams,
    restart: usize,
    seeded: Option<&[NodeId]>,
    mut on_accept: impl FnMut(f64),
) -> (Vec<NodeId>, u64, RestartStats) {
    let seed = params.seed.wrapping_add(restart as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = match seeded {
        Some(o) => o.to_vec(),
        None => {
            let mut o: Vec<NodeId> = g.contributors().collect();
            o.shuffle(&mut rng);
            o
        }
    };
    let mut state = Completion::new(g, order);
    let n = g.num_contributors();
    let mut stats = RestartStats {
        seed,
        start_auc: state.auc(),
        final_auc: 0.0,
        moves: 0,
        accepted: 0,
        improving: 0,
    };

    let mut streak = 0u64;
    while n >= 2 && stats.moves < params.max_moves_per_restart && streak < params.patience {
        let p = rng.gen_range(0..n);
        let mut q = rng.gen_range(0..n - 1);
        if q >= p {
            q += 1;
        }
        stats.moves += 1;
        let delta = state.propose_swap(p, q);
        if delta <= 0 {
            state.commit();
            stats.accepted += 1;
            on_accept(state.auc());
        }
        if delta < 0 {
            stats.improving += 1;
            streak = 0;
        } else {
            streak += 1;
        }
    }
    stats.final_auc = state.auc();
    let cost = state.cost;
    (state.order, cost, stats)
}

/// Ordering plus the position of each item's last contributor.
struct Completion<'g> {
    g: &'g BipartiteGraph,
    order: Vec<NodeId>,
    pos: Vec<u32>,
    last: Vec<u32>,
    cost: u64,
    pending: Pending,
}

#[derive(Default)]
struct Pending {
    p: usize,
    q: usize,
    changes: Vec<(u32, u32)>,
    delta: i64,
}

impl<'g> Completion<'g> {
    fn new(g: &'g BipartiteGraph, order: Vec<NodeId>) -> Self {
        let mut pos = vec![0u32; order.len()];
        for (k, &c) in order.iter().enumerate() {
            pos[c as usize] = k as u32;
        }
        let last: Vec<u32> = g
            .items()
            .map(|i| g.contributors_of(i).iter().map(|&c| pos[c as usize]).max().unwrap())
            .collect();
        let cost = last.iter().map(|&t| t as u64).sum();
        Completion {
            g,
            order,
            pos,
            last,
            cost,
            pending: Pending::default(),
        }
    }

    fn auc(&self) -> f64 {
        let nc = self.order.len() as f64;
        let ni = self.last.len() as f64;
        (nc * ni - self.cost as f64) / (nc * ni)
    }

    /// Change in Σ t(i) if the contributors at positions `p` and `q` swap.
    fn propose_swap(&mut self, p: usize, q: usize) -> i64 {
        let u = self.order[p];
        let v = self.order[q];
        let mut pending = std::mem::take(&mut self.pending);
        pending.changes.clear();
        pending.delta = 0;
        pending.p = p;
        pending.q = q;
        for (moved, other, from, to) in [(u, v, p as u32, q as u32), (v, u, q as u32, p as u32)] {
            for &i in self.g.items_of(moved) {
                let members = self.g.contributors_of(i);
                if members.binary_search(&other).is_ok() {
                    continue;
                }
                let t = self.last[i as usize];
                let new_t = if to > t {
                    to
                } else if t == from {
                    members
                        .iter()
                        .map(|&c| if c == moved { to } else { self.pos[c as usize] })
                        .max()
                        .unwrap()
                } else {
                    continue;
                };
                if new_t != t {
                    pending.changes.push((i, new_t));
                    pending.delta += new_t as i64 - t as i64;
                }
            }
        }
        let delta = pending.delta;
        self.pending = pending;
        delta
    }

    fn commit(&mut self) {
        let Pending { p, q, delta, .. } = self.pending;
        for &(i, t) in &self.pending.changes {
            self.last[i as usize] = t;
        }
        self.order.swap(p, q);
        self.pos[self.order[p] as usize] = p as u32;
        self.pos[self.order[q] as usize] = q as u32;
        self.cost = (self.cost as i64 + delta) as u64;
    }
}
