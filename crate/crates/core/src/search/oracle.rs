use serde::Serialize;

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};
use crate::rankcore::ShapleyScores;

pub const DEFAULT_SUBSET_LIMIT: u128 = 5_000_000;
pub const MAX_SHAPLEY_CONTRIBUTORS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub k: usize,
    /// Ascending ids.
    pub best_set: Vec<NodeId>,
    pub best_cov: usize,
    pub evaluated: u64,
}

impl OracleResult {
    /// `{k, best_cov, best_set: [labels], evaluated}`.
    pub fn to_json(&self, g: &BipartiteGraph) -> serde_json::Value {
        let labels: Vec<&str> = self.best_set.iter().map(|&c| g.contributor_label(c)).collect();
        serde_json::json!({
            "k": self.k,
            "best_cov": self.best_cov,
            "best_set": labels,
            "evaluated": self.evaluated,
        })
    }
}

/// C(n, k), saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc * (n - j) / (j + 1) stays integral at every step.
        acc = match acc.checked_mul((n - j) as u128) {
            Some(v) => v / (j + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// Exhaustive CRITICALSET solver.
///
/// cov is monotone, so only subsets of size exactly min(k, |C|) are examined.
/// Returns the lexicographically smallest maximizer.
/// Counts the items covered by a subset of contributor ids.
type SubsetCov<'a> = dyn FnMut(&[usize]) -> usize + 'a;

pub fn brute_force_best_k(g: &BipartiteGraph, k: usize, limit: u128) -> Result<OracleResult> {
    let n = g.num_contributors();
    let size = k.min(n);
    let count = binomial(n as u64, size as u64);
    if count > limit {
        return Err(Error::ResourceGuard {
            what: "subset count",
            actual: count,
            limit,
            hint: "raise --limit to override",
        });
    }

    let eval: Box<SubsetCov<'_>> = if n <= 64 {
        let masks: Vec<u64> = g
            .items()
            .map(|i| g.contributors_of(i).iter().fold(0u64, |m, &c| m | (1 << c)))
            .collect();
        Box::new(move |subset: &[usize]| {
            let s = subset.iter().fold(0u64, |m, &c| m | (1 << c));
            masks.iter().filter(|&&m| m & !s == 0).count()
        })
    } else {
        let mut selected = vec![false; n];
        Box::new(move |subset: &[usize]| {
            selected.iter_mut().for_each(|s| *s = false);
            for &c in subset {
                selected[c] = true;
            }
            g.items()
                .filter(|&i| g.contributors_of(i).iter().all(|&c| selected[c as usize]))
                .count()
        })
    };
    let mut eval = eval;

    let mut subset: Vec<usize> = (0..size).collect();
    let mut best = (eval(&subset), subset.clone());
    let mut evaluated = 1u64;
    while next_combination(&mut subset, n) {
        let v = eval(&subset);
        evaluated += 1;
        if v > best.0 {
            best = (v, subset.clone());
        }
    }
    Ok(OracleResult {
        k,
        best_set: best.1.into_iter().map(|c| c as NodeId).collect(),
        best_cov: best.0,
        evaluated,
    })
}

/// Advances to the next k-subset of `0..n` in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Shapley values by enumerating all |C|! arrival orders.
///
/// Marginal gains are summed as integers per contributor and divided by |C|!
/// once at the end.
/// Refuses graphs with more than `max_contributors` contributors; 20 is a
/// hard ceiling since 21! overflows the counters.
pub fn brute_force_shapley(g: &BipartiteGraph, max_contributors: usize) -> Result<ShapleyScores> {
    let n = g.num_contributors();
    if n > max_contributors.min(20) {
        return Err(Error::ResourceGuard {
            what: "contributor count",
            actual: n as u128,
            limit: max_contributors.min(20) as u128,
            hint: "raise --max-contributors to override (at most 20)",
        });
    }
    let degree: Vec<u32> = g.items().map(|i| g.item_degree(i) as u32).collect();
    let mut pivotal = vec![0u128; n];
    let mut missing = degree.clone();
    let mut perm: Vec<NodeId> = g.contributors().collect();
    let mut visit = |perm: &[NodeId]| {
        missing.copy_from_slice(&degree);
        for &c in perm {
            for &i in g.items_of(c) {
                missing[i as usize] -= 1;
                if missing[i as usize] == 0 {
                    pivotal[c as usize] += 1;
                }
            }
        }
    };

    // Heap's algorithm, iterative form.
    let mut counters = vec![0usize; n];
    visit(&perm);
    let mut permutations = 1u64;
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            visit(&perm);
            permutations += 1;
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    debug_assert_eq!(permutations, (1..=n as u64).product::<u64>());

    let denom = permutations as f64;
    Ok(ShapleyScores::new(
        pivotal.into_iter().map(|p| p as f64 / denom).collect(),
    ))
}
