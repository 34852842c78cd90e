use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};

pub const MAX_EXHAUSTIVE_CONTRIBUTORS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainCheck {
    /// Every pair A ⊆ B ⊆ C and every v ∉ B.
    Exhaustive,
    /// Random chains: v uniform, B ⊆ C \ {v} and A ⊆ B by fair coin flips.
    Sampled { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// cov(A ∪ {v}) − cov(A) > cov(B ∪ {v}) − cov(B)
    Supermodularity,
    /// cov(A) > cov(B)
    Monotonicity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub a: Vec<NodeId>,
    pub b: Vec<NodeId>,
    pub v: Option<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupermodularityOutcome {
    Pass { chains: u64 },
    Violation(Violation),
}

impl SupermodularityOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, SupermodularityOutcome::Pass { .. })
    }
}

/// Searches for a chain A ⊆ B, v ∉ B on which cov fails to be monotone or
/// supermodular. Returns the first witness found.
pub fn check_supermodular(g: &BipartiteGraph, mode: ChainCheck) -> Result<SupermodularityOutcome> {
    match mode {
        ChainCheck::Exhaustive => exhaustive(g),
        ChainCheck::Sampled { trials, seed } => Ok(sampled(g, trials, seed)),
    }
}

fn members(mask: u32) -> Vec<NodeId> {
    (0..32).filter(|&c| mask & (1 << c) != 0).collect()
}

fn exhaustive(g: &BipartiteGraph) -> Result<SupermodularityOutcome> {
    let n = g.num_contributors();
    if n > MAX_EXHAUSTIVE_CONTRIBUTORS {
        return Err(Error::ResourceGuard {
            what: "contributor count",
            actual: n as u128,
            limit: MAX_EXHAUSTIVE_CONTRIBUTORS as u128,
            hint: "use sampled chains instead",
        });
    }
    let item_masks: Vec<u32> = g
        .items()
        .map(|i| g.contributors_of(i).iter().fold(0u32, |m, &c| m | (1 << c)))
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let table: Vec<u32> = (0..=full)
        .map(|s| item_masks.iter().filter(|&&m| m & !s == 0).count() as u32)
        .collect();

    let mut chains = 0u64;
    for b in 0..=full {
        // Walk every submask a of b, including b itself and 0.
        let mut a = b;
        loop {
            if table[a as usize] > table[b as usize] {
                return Ok(SupermodularityOutcome::Violation(Violation {
                    kind: ViolationKind::Monotonicity,
                    a: members(a),
                    b: members(b),
                    v: None,
                }));
            }
            let mut outside = full & !b;
            while outside != 0 {
                let bit = outside & outside.wrapping_neg();
                outside &= outside - 1;
                chains += 1;
                let gain_a = table[(a | bit) as usize] - table[a as usize];
                let gain_b = table[(b | bit) as usize] - table[b as usize];
                if gain_a > gain_b {
                    return Ok(SupermodularityOutcome::Violation(Violation {
                        kind: ViolationKind::Supermodularity,
                        a: members(a),
                        b: members(b),
                        v: Some(bit.trailing_zeros()),
                    }));
                }
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    Ok(SupermodularityOutcome::Pass { chains })
}

fn cov_of(g: &BipartiteGraph, member: &[bool]) -> usize {
    g.items()
        .filter(|&i| g.contributors_of(i).iter().all(|&c| member[c as usize]))
        .count()
}

fn sampled(g: &BipartiteGraph, trials: usize, seed: u64) -> SupermodularityOutcome {
    let n = g.num_contributors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    let collect = |m: &[bool]| -> Vec<NodeId> {
        (0..n as NodeId).filter(|&c| m[c as usize]).collect()
    };
    for _ in 0..trials {
        let v = rng.gen_range(0..n);
        for c in 0..n {
            in_b[c] = c != v && rng.gen_bool(0.5);
            in_a[c] = in_b[c] && rng.gen_bool(0.5);
        }
        let cov_a = cov_of(g, &in_a);
        let cov_b = cov_of(g, &in_b);
        if cov_a > cov_b {
            return SupermodularityOutcome::Violation(Violation {
                kind: ViolationKind::Monotonicity,
                a: collect(&in_a),
                b: collect(&in_b),
                v: None,
            });
        }
        in_a[v] = true;
        in_b[v] = true;
        let gain_a = cov_of(g, &in_a) - cov_a;
        let gain_b = cov_of(g, &in_b) - cov_b;
        in_a[v] = false;
        in_b[v] = false;
        if gain_a > gain_b {
            return SupermodularityOutcome::Violation(Violation {
                kind: ViolationKind::Supermodularity,
                a: collect(&in_a),
                b: collect(&in_b),
                v: Some(v as NodeId),
            });
        }
    }
    SupermodularityOutcome::Pass { chains: trials as u64 }
}
