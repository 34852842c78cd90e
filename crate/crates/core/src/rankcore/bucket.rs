//! Monotone integer priority queue with FIFO buckets.
//!
//! Every bucket is an intrusive doubly linked list over element ids, so
//! insertion at the tail, removal of an arbitrary element and pop from the
//! head are all O(1). `floor` is a lower bound on the smallest occupied
//! bucket; it drops by one on each decrement and is scanned upward on pop.

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct BucketQueue {
    head: Vec<u32>,
    tail: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    /// Current bucket of each element, `NIL` when not queued.
    key: Vec<u32>,
    floor: usize,
    len: usize,
}

impl BucketQueue {
    /// An empty queue for element ids `0..capacity` and keys `0..=max_key`.
    pub fn new(capacity: usize, max_key: usize) -> Self {
        assert!(capacity < NIL as usize && max_key < NIL as usize);
        BucketQueue {
            head: vec![NIL; max_key + 1],
            tail: vec![NIL; max_key + 1],
            next: vec![NIL; capacity],
            prev: vec![NIL; capacity],
            key: vec![NIL; capacity],
            floor: max_key + 1,
            len: 0,
        }
    }

    /// Queues every element with its key, in ascending id order.
    pub fn from_keys(keys: &[u32]) -> Self {
        let max_key = keys.iter().copied().max().unwrap_or(0) as usize;
        let mut q = Self::new(keys.len(), max_key);
        for (id, &k) in keys.iter().enumerate() {
            q.push(id as u32, k);
        }
        q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, id: u32) -> bool {
        self.key[id as usize] != NIL
    }

    pub fn key(&self, id: u32) -> Option<u32> {
        let k = self.key[id as usize];
        (k != NIL).then_some(k)
    }

    /// Appends `id` to the tail of bucket `key`.
    pub fn push(&mut self, id: u32, key: u32) {
        assert!(!self.contains(id), "element {id} already queued");
        assert!((key as usize) < self.head.len(), "key {key} above max");
        self.link_tail(id, key);
        self.floor = self.floor.min(key as usize);
        self.len += 1;
    }

    /// Removes and returns the head of the lowest non-empty bucket.
    pub fn pop_min(&mut self) -> Option<(u32, u32)> {
        if self.len == 0 {
            return None;
        }
        while self.head[self.floor] == NIL {
            self.floor += 1;
        }
        let key = self.floor as u32;
        let id = self.head[self.floor];
        self.unlink(id);
        self.len -= 1;
        Some((id, key))
    }

    /// Moves `id` from its bucket to the tail of the next lower one.
    pub fn decrement(&mut self, id: u32) {
        let k = self.key[id as usize];
        assert!(k != NIL, "element {id} not queued");
        assert!(k > 0, "element {id} already at key 0");
        self.unlink(id);
        self.link_tail(id, k - 1);
        if ((k - 1) as usize) < self.floor {
            self.floor = (k - 1) as usize;
        }
    }

    fn link_tail(&mut self, id: u32, key: u32) {
        let b = key as usize;
        let t = self.tail[b];
        self.prev[id as usize] = t;
        self.next[id as usize] = NIL;
        if t == NIL {
            self.head[b] = id;
        } else {
            self.next[t as usize] = id;
        }
        self.tail[b] = id;
        self.key[id as usize] = key;
    }

    fn unlink(&mut self, id: u32) {
        let i = id as usize;
        let b = self.key[i] as usize;
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NIL {
            self.head[b] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[b] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.key[i] = NIL;
        self.prev[i] = NIL;
        self.next[i] = NIL;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fifo_within_bucket() {
        let mut q = BucketQueue::from_keys(&[2, 1, 2, 1]);
        q.decrement(2);
        assert_eq!(q.pop_min(), Some((1, 1)));
        assert_eq!(q.pop_min(), Some((3, 1)));
        assert_eq!(q.pop_min(), Some((2, 1)));
        assert_eq!(q.pop_min(), Some((0, 2)));
        assert_eq!(q.pop_min(), None);
    }

    #[test]
    fn floor_moves_down_on_decrement() {
        let mut q = BucketQueue::from_keys(&[5, 5]);
        assert_eq!(q.pop_min(), Some((0, 5)));
        for _ in 0..5 {
            q.decrement(1);
        }
        assert_eq!(q.key(1), Some(0));
        assert_eq!(q.pop_min(), Some((1, 0)));
        assert!(q.is_empty());
    }

    #[derive(Debug, Clone)]
    enum Op {
        Pop,
        Dec(usize),
    }

    // Reference model: the head of a FIFO bucket is the element that entered
    // its current key earliest.
    struct Model {
        key: Vec<Option<u32>>,
        stamp: Vec<u64>,
        clock: u64,
    }

    impl Model {
        fn pop(&mut self) -> Option<(u32, u32)> {
            let id = (0..self.key.len())
                .filter(|&i| self.key[i].is_some())
                .min_by_key(|&i| (self.key[i], self.stamp[i]))?;
            let k = self.key[id].take().unwrap();
            Some((id as u32, k))
        }
    }

    proptest! {
        #[test]
        fn matches_timestamp_model(
            keys in prop::collection::vec(0u32..6, 1..30),
            ops in prop::collection::vec(prop_oneof![Just(Op::Pop), (0usize..30).prop_map(Op::Dec)], 0..80),
        ) {
            let mut q = BucketQueue::from_keys(&keys);
            let n = keys.len();
            let mut m = Model {
                key: keys.iter().map(|&k| Some(k)).collect(),
                stamp: (0..n as u64).collect(),
                clock: n as u64,
            };
            for op in ops {
                match op {
                    Op::Pop => prop_assert_eq!(q.pop_min(), m.pop()),
                    Op::Dec(i) => {
                        let i = i % n;
                        if let Some(k) = m.key[i] {
                            if k > 0 {
                                q.decrement(i as u32);
                                m.key[i] = Some(k - 1);
                                m.stamp[i] = m.clock;
                                m.clock += 1;
                            }
                        }
                    }
                }
                prop_assert_eq!(q.len(), m.key.iter().filter(|k| k.is_some()).count());
            }
            while let Some(x) = m.pop() {
                prop_assert_eq!(q.pop_min(), Some(x));
            }
            prop_assert!(q.is_empty());
        }
    }
}
