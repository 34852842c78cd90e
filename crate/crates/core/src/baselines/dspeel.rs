use crate::bigraph::{BipartiteGraph, NodeId};
use crate::rankcore::{BucketQueue, Ranking};

/// Classic min-degree peeling over contributors and items together.
///
/// Node ids are contributors `0..|C|` followed by items `|C|..|C|+|I|`, so at
/// equal degree contributors pop before items. Returns the full removal order
/// in that combined id space.
pub fn dspeel_removal_order(g: &BipartiteGraph) -> Vec<u32> {
    let nc = g.num_contributors();
    let keys: Vec<u32> = g
        .contributors()
        .map(|c| g.contributor_degree(c) as u32)
        .chain(g.items().map(|i| g.item_degree(i) as u32))
        .collect();
    let mut queue = BucketQueue::from_keys(&keys);
    let mut removal = Vec::with_capacity(keys.len());
    while let Some((v, _)) = queue.pop_min() {
        removal.push(v);
        if (v as usize) < nc {
            for &i in g.items_of(v) {
                let node = nc as u32 + i;
                if queue.contains(node) {
                    queue.decrement(node);
                }
            }
        } else {
            for &c in g.contributors_of(v - nc as u32) {
                if queue.contains(c) {
                    queue.decrement(c);
                }
            }
        }
    }
    removal
}

/// Reverse peeling order restricted to contributors.
pub fn dspeel_rank(g: &BipartiteGraph) -> Ranking {
    let nc = g.num_contributors() as u32;
    let order: Vec<NodeId> = dspeel_removal_order(g)
        .into_iter()
        .rev()
        .filter(|&v| v < nc)
        .collect();
    Ranking::from_order_unchecked("dspeel", order)
}
