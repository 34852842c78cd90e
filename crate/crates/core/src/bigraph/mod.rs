//! Immutable bipartite contributor/item graphs.
//!
//! Both adjacency directions are stored in compressed sparse row form with
//! dense `u32` ids. Lists are sorted ascending and free of duplicates.

mod load;
mod simple;
mod stats;

use std::collections::{HashMap, HashSet};

pub use load::{load_edge_list, write_edge_list, LoadReport};
pub use simple::{incidence_transform, SimpleGraph};
pub use stats::{degree_stats, GraphStats};

use crate::error::{Error, Result};

/// Dense node id, shared by contributors and items (each side counts from 0).
pub type NodeId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    contributor_offsets: Vec<usize>,
    contributor_items: Vec<NodeId>,
    item_offsets: Vec<usize>,
    item_contributors: Vec<NodeId>,
    contributor_labels: Vec<String>,
    item_labels: Vec<String>,
}

impl BipartiteGraph {
    /// Builds a graph from explicit `(contributor, item)` id pairs.
    ///
    /// Duplicate pairs are collapsed; the number dropped is returned alongside
    /// the graph. Contributors without edges are kept, items without edges are
    /// rejected.
    pub fn from_edges(
        contributor_labels: Vec<String>,
        item_labels: Vec<String>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<(Self, u64)> {
        check_unique(&contributor_labels)?;
        check_unique(&item_labels)?;
        Self::build(contributor_labels, item_labels, edges)
    }

    /// Like [`BipartiteGraph::from_edges`], labelling nodes `c<id>` and `i<id>`.
    pub fn from_id_edges(
        num_contributors: usize,
        num_items: usize,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<(Self, u64)> {
        let cl = (0..num_contributors).map(|c| format!("c{c}")).collect();
        let il = (0..num_items).map(|i| format!("i{i}")).collect();
        Self::build(cl, il, edges)
    }

    /// Labels are trusted to be unique.
    pub(crate) fn build(
        contributor_labels: Vec<String>,
        item_labels: Vec<String>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<(Self, u64)> {
        let nc = contributor_labels.len();
        let ni = item_labels.len();
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if nc > NodeId::MAX as usize || ni > NodeId::MAX as usize {
            return Err(Error::IdOutOfRange {
                id: nc.max(ni) as u64,
                len: NodeId::MAX as usize,
            });
        }

        let mut offsets = vec![0usize; nc + 1];
        for &(c, i) in &edges {
            if c as usize >= nc {
                return Err(Error::IdOutOfRange { id: c as u64, len: nc });
            }
            if i as usize >= ni {
                return Err(Error::IdOutOfRange { id: i as u64, len: ni });
            }
            offsets[c as usize + 1] += 1;
        }
        for c in 0..nc {
            offsets[c + 1] += offsets[c];
        }
        let mut cursor = offsets.clone();
        let mut items = vec![0 as NodeId; edges.len()];
        for (c, i) in edges {
            let slot = &mut cursor[c as usize];
            items[*slot] = i;
            *slot += 1;
        }
        drop(cursor);

        // Sort each row and compact duplicates in place.
        let mut duplicates = 0u64;
        let mut write = 0usize;
        let mut read_start = 0usize;
        for c in 0..nc {
            let read_end = offsets[c + 1];
            items[read_start..read_end].sort_unstable();
            let row_start = write;
            let mut prev = None;
            for r in read_start..read_end {
                let i = items[r];
                if prev == Some(i) {
                    duplicates += 1;
                    continue;
                }
                prev = Some(i);
                items[write] = i;
                write += 1;
            }
            offsets[c] = row_start;
            read_start = read_end;
        }
        offsets[nc] = write;
        items.truncate(write);
        items.shrink_to_fit();

        let mut item_offsets = vec![0usize; ni + 1];
        for &i in &items {
            item_offsets[i as usize + 1] += 1;
        }
        for i in 0..ni {
            if item_offsets[i + 1] == 0 {
                return Err(Error::IsolatedItem(item_labels[i].clone()));
            }
            item_offsets[i + 1] += item_offsets[i];
        }
        let mut cursor = item_offsets.clone();
        let mut item_contributors = vec![0 as NodeId; items.len()];
        for c in 0..nc {
            for &i in &items[offsets[c]..offsets[c + 1]] {
                let slot = &mut cursor[i as usize];
                item_contributors[*slot] = c as NodeId;
                *slot += 1;
            }
        }

        let graph = BipartiteGraph {
            contributor_offsets: offsets,
            contributor_items: items,
            item_offsets,
            item_contributors,
            contributor_labels,
            item_labels,
        };
        Ok((graph, duplicates))
    }

    pub fn num_contributors(&self) -> usize {
        self.contributor_labels.len()
    }

    pub fn num_items(&self) -> usize {
        self.item_labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.contributor_items.len()
    }

    /// Γ(c): items of contributor `c`, ascending.
    #[inline]
    pub fn items_of(&self, c: NodeId) -> &[NodeId] {
        let c = c as usize;
        &self.contributor_items[self.contributor_offsets[c]..self.contributor_offsets[c + 1]]
    }

    /// Γ(i): contributors of item `i`, ascending.
    #[inline]
    pub fn contributors_of(&self, i: NodeId) -> &[NodeId] {
        let i = i as usize;
        &self.item_contributors[self.item_offsets[i]..self.item_offsets[i + 1]]
    }

    #[inline]
    pub fn contributor_degree(&self, c: NodeId) -> usize {
        let c = c as usize;
        self.contributor_offsets[c + 1] - self.contributor_offsets[c]
    }

    #[inline]
    pub fn item_degree(&self, i: NodeId) -> usize {
        let i = i as usize;
        self.item_offsets[i + 1] - self.item_offsets[i]
    }

    pub fn has_edge(&self, c: NodeId, i: NodeId) -> bool {
        self.items_of(c).binary_search(&i).is_ok()
    }

    pub fn contributors(&self) -> impl ExactSizeIterator<Item = NodeId> + Clone {
        0..self.num_contributors() as NodeId
    }

    pub fn items(&self) -> impl ExactSizeIterator<Item = NodeId> + Clone {
        0..self.num_items() as NodeId
    }

    /// All edges, contributors ascending, items ascending within a contributor.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.contributors()
            .flat_map(move |c| self.items_of(c).iter().map(move |&i| (c, i)))
    }

    pub fn contributor_label(&self, c: NodeId) -> &str {
        &self.contributor_labels[c as usize]
    }

    pub fn item_label(&self, i: NodeId) -> &str {
        &self.item_labels[i as usize]
    }

    pub fn contributor_labels(&self) -> &[String] {
        &self.contributor_labels
    }

    pub fn item_labels(&self) -> &[String] {
        &self.item_labels
    }

    /// Label -> id lookup for contributors. Built on demand.
    pub fn contributor_index(&self) -> HashMap<&str, NodeId> {
        self.contributor_labels
            .iter()
            .enumerate()
            .map(|(c, l)| (l.as_str(), c as NodeId))
            .collect()
    }

    pub fn max_contributor_degree(&self) -> usize {
        self.contributors()
            .map(|c| self.contributor_degree(c))
            .max()
            .unwrap_or(0)
    }

    pub fn max_item_degree(&self) -> usize {
        self.items().map(|i| self.item_degree(i)).max().unwrap_or(0)
    }

    /// Checks every structural invariant. Intended for tests and debugging;
    /// cost is O(|E| log Δ).
    pub fn validate(&self) -> std::result::Result<(), String> {
        let nc = self.num_contributors();
        let ni = self.num_items();
        if self.contributor_offsets.len() != nc + 1 || self.item_offsets.len() != ni + 1 {
            return Err("offset arrays have wrong length".into());
        }
        if self.contributor_items.len() != self.item_contributors.len() {
            return Err("edge counts differ between directions".into());
        }
        for c in self.contributors() {
            let row = self.items_of(c);
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("contributor {c} row not strictly ascending"));
            }
            for &i in row {
                if i as usize >= ni || self.contributors_of(i).binary_search(&c).is_err() {
                    return Err(format!("edge ({c},{i}) missing from item side"));
                }
            }
        }
        for i in self.items() {
            let row = self.contributors_of(i);
            if row.is_empty() {
                return Err(format!("item {i} has degree 0"));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("item {i} row not strictly ascending"));
            }
            for &c in row {
                if c as usize >= nc || !self.has_edge(c, i) {
                    return Err(format!("edge ({c},{i}) missing from contributor side"));
                }
            }
        }
        Ok(())
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
