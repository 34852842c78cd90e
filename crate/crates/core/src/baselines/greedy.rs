use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::rankcore::Ranking;

/// Forward greedy maximization of cov.
///
/// Each step appends the contributor with the largest marginal coverage gain
/// (ties by ascending id). The gain of `c` is the number of its items on which
/// it is the only unselected contributor, and it only ever grows, so a lazy
/// max-heap with stale-entry skipping suffices. When no contributor has a
/// positive gain, the next pick is the unselected contributor with the most
/// uncovered items, then ascending id. An unselected contributor's items can
/// never be covered, so that residual degree is just its degree.
pub fn forward_greedy_rank(g: &BipartiteGraph) -> Ranking {
    let nc = g.num_contributors();
    let mut missing: Vec<u32> = g.items().map(|i| g.item_degree(i) as u32).collect();
    let mut selected = vec![false; nc];
    let mut gain = vec![0u32; nc];
    for i in g.items() {
        if let [c] = g.contributors_of(i) {
            gain[*c as usize] += 1;
        }
    }
    let mut heap: BinaryHeap<(u32, Reverse<NodeId>)> = g
        .contributors()
        .filter(|&c| gain[c as usize] > 0)
        .map(|c| (gain[c as usize], Reverse(c)))
        .collect();

    let mut by_degree: Vec<NodeId> = g.contributors().collect();
    by_degree.sort_by_key(|&c| (Reverse(g.contributor_degree(c)), c));
    let mut fallback = 0usize;

    let mut order = Vec::with_capacity(nc);
    while order.len() < nc {
        let mut pick = None;
        while let Some(&(k, Reverse(c))) = heap.peek() {
            heap.pop();
            if !selected[c as usize] && gain[c as usize] == k {
                pick = Some(c);
                break;
            }
        }
        let c = match pick {
            Some(c) => c,
            None => {
                while selected[by_degree[fallback] as usize] {
                    fallback += 1;
                }
                by_degree[fallback]
            }
        };

        selected[c as usize] = true;
        order.push(c);
        for &i in g.items_of(c) {
            let m = &mut missing[i as usize];
            *m -= 1;
            if *m == 1 {
                let last = g
                    .contributors_of(i)
                    .iter()
                    .copied()
                    .find(|&o| !selected[o as usize])
                    .expect("one contributor left unselected");
                gain[last as usize] += 1;
                heap.push((gain[last as usize], Reverse(last)));
            }
        }
    }
    Ranking::from_order_unchecked("greedy", order)
}
