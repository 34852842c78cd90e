use super::{BucketQueue, Ranking};
use crate::bigraph::{BipartiteGraph, NodeId};

/// MinCov ranking: the reversed removal order of [`mincov_removal_order`].
pub fn mincov(g: &BipartiteGraph) -> Ranking {
    let mut order = mincov_removal_order(g);
    order.reverse();
    Ranking::from_order_unchecked("mincov", order)
}

/// Peels contributors by the number of not-yet-covered items they touch.
///
/// The popped contributor covers all of its uncovered items; every other
/// unprocessed contributor on those items loses one unit of priority. Each
/// item triggers decrements once, so the whole run is O(|E|) queue operations.
/// Ties pop in FIFO order: initial fill by ascending id, decremented
/// contributors re-enter at the tail of their new bucket.
pub fn mincov_removal_order(g: &BipartiteGraph) -> Vec<NodeId> {
    let keys: Vec<u32> = g.contributors().map(|c| g.contributor_degree(c) as u32).collect();
    let mut queue = BucketQueue::from_keys(&keys);
    let mut covered = vec![false; g.num_items()];
    let mut removal = Vec::with_capacity(g.num_contributors());

    while let Some((c, _)) = queue.pop_min() {
        removal.push(c);
        for &i in g.items_of(c) {
            if std::mem::replace(&mut covered[i as usize], true) {
                continue;
            }
            for &other in g.contributors_of(i) {
                if queue.contains(other) {
                    queue.decrement(other);
                }
            }
        }
    }
    removal
}
