use std::collections::HashSet;
use std::io::BufRead;

use super::load::{for_each_line, split_line, Interner, Line};
use super::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};

/// A simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    edges: Vec<(NodeId, NodeId)>,
}

impl SimpleGraph {
    /// Vertices are labelled by their id.
    pub fn new(num_vertices: usize, edges: Vec<(NodeId, NodeId)>) -> Result<Self> {
        let labels = (0..num_vertices).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: Vec<(NodeId, NodeId)>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::IdOutOfRange { id: x as u64, len: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u as usize].clone()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(
                    labels[u as usize].clone(),
                    labels[v as usize].clone(),
                ));
            }
        }
        Ok(SimpleGraph { labels, edges })
    }

    /// Parses a `u v` edge list with the same line rules as bipartite edge lists.
    pub fn parse<R: BufRead>(source: R) -> Result<Self> {
        let mut vertices = Interner::default();
        let mut edges = Vec::new();
        let mut lines = Vec::new();
        for_each_line(source, |raw, line| {
            if let Line::Pair(a, b) = split_line(raw, line)? {
                edges.push((vertices.intern(a, line)?, vertices.intern(b, line)?));
                lines.push(line);
            }
            Ok(())
        })?;
        let labels = vertices.into_labels();
        // Re-run validation, attaching the offending line number.
        let mut seen = HashSet::with_capacity(edges.len());
        for (&(u, v), &line) in edges.iter().zip(&lines) {
            if u == v {
                return Err(Error::parse(line, format!("self-loop on `{}`", labels[u as usize])));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::parse(
                    line,
                    format!("duplicate edge `{}`-`{}`", labels[u as usize], labels[v as usize]),
                ));
            }
        }
        Ok(SimpleGraph { labels, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// |E(G[S])|: edges with both endpoints in `subset`.
    pub fn induced_edge_count(&self, subset: &[NodeId]) -> usize {
        let mut member = vec![false; self.num_vertices()];
        for &v in subset {
            member[v as usize] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| member[u as usize] && member[v as usize])
            .count()
    }
}

/// Maps vertices to contributors and edges to items; item `e` is adjacent to
/// both endpoints of edge `e`, so every item has degree 2.
pub fn incidence_transform(g: &SimpleGraph) -> Result<BipartiteGraph> {
    let mut pairs = Vec::with_capacity(2 * g.num_edges());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        pairs.push((u, e as NodeId));
        pairs.push((v, e as NodeId));
    }
    let items = (0..g.num_edges()).map(|e| format!("e{e}")).collect();
    let (b, dups) = BipartiteGraph::from_edges(g.labels.clone(), items, pairs)?;
    debug_assert_eq!(dups, 0);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let k3 = SimpleGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = incidence_transform(&k3).unwrap();
        assert_eq!((b.num_contributors(), b.num_items()), (3, 3));
        assert!(b.items().all(|i| b.item_degree(i) == 2));
    }

    #[test]
    fn path_items() {
        let p = SimpleGraph::parse("a b\nb c\n".as_bytes()).unwrap();
        let b = incidence_transform(&p).unwrap();
        assert_eq!(b.contributors_of(0), &[0, 1]);
        assert_eq!(b.contributors_of(1), &[1, 2]);
        assert_eq!(b.contributor_label(2), "c");
    }

    #[test]
    fn isolated_vertices_become_degree_zero_contributors() {
        let g = SimpleGraph::new(4, vec![(0, 1)]).unwrap();
        let b = incidence_transform(&g).unwrap();
        assert_eq!(b.contributor_degree(3), 0);
    }

    #[test]
    fn rejects_self_loops_and_parallel_edges() {
        assert!(matches!(
            SimpleGraph::new(2, vec![(1, 1)]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            SimpleGraph::new(2, vec![(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(..))
        ));
        let err = SimpleGraph::parse("a b\nc c\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn edgeless_graph_has_no_items() {
        let g = SimpleGraph::new(3, vec![]).unwrap();
        assert!(matches!(incidence_transform(&g), Err(Error::EmptyGraph)));
    }
}
