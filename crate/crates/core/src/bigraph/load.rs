use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use super::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};

/// Counters collected while reading an edge list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub lines_read: u64,
    pub comments_skipped: u64,
    pub blank_skipped: u64,
    pub duplicates_dropped: u64,
}

/// First-appearance label interner.
#[derive(Default)]
pub(crate) struct Interner {
    ids: HashMap<Box<str>, NodeId>,
    labels: Vec<String>,
}

impl Interner {
    pub(crate) fn intern(&mut self, label: &str, line: u64) -> Result<NodeId> {
        if let Some(&id) = self.ids.get(label) {
            return Ok(id);
        }
        let id = NodeId::try_from(self.labels.len())
            .map_err(|_| Error::parse(line, "too many distinct labels"))?;
        self.ids.insert(label.into(), id);
        self.labels.push(label.to_owned());
        Ok(id)
    }

    pub(crate) fn into_labels(self) -> Vec<String> {
        self.labels
    }
}

/// One parsed line of a whitespace-separated pair list.
pub(crate) enum Line<'a> {
    Comment,
    Blank,
    Pair(&'a str, &'a str),
}

pub(crate) fn split_line(raw: &[u8], line: u64) -> Result<Line<'_>> {
    let text = std::str::from_utf8(raw).map_err(|_| Error::parse(line, "invalid UTF-8"))?;
    let text = text.trim_end_matches(['\n', '\r']);
    let trimmed = text.trim_start_matches([' ', '\t']);
    if trimmed.starts_with('%') || trimmed.starts_with('#') {
        return Ok(Line::Comment);
    }
    let mut fields = trimmed.split([' ', '\t']).filter(|f| !f.is_empty());
    match (fields.next(), fields.next()) {
        (None, _) => Ok(Line::Blank),
        (Some(_), None) => Err(Error::parse(line, "expected two fields")),
        (Some(a), Some(b)) => Ok(Line::Pair(a, b)),
    }
}

/// Drives `f` over every line of `source`, tracking line numbers.
pub(crate) fn for_each_line<R: BufRead>(
    mut source: R,
    mut f: impl FnMut(&[u8], u64) -> Result<()>,
) -> Result<u64> {
    let mut buf = Vec::with_capacity(128);
    let mut line = 0u64;
    loop {
        buf.clear();
        if source.read_until(b'\n', &mut buf)? == 0 {
            return Ok(line);
        }
        line += 1;
        f(&buf, line)?;
    }
}

/// Reads a whitespace-separated `contributor item` edge list.
///
/// Lines starting with `%` or `#` are comments, blank lines are skipped and
/// fields beyond the second are ignored. Ids are assigned per side in order
/// of first appearance.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<(BipartiteGraph, LoadReport)> {
    let mut report = LoadReport::default();
    let mut contributors = Interner::default();
    let mut items = Interner::default();
    let mut edges = Vec::new();

    report.lines_read = for_each_line(source, |raw, line| {
        match split_line(raw, line)? {
            Line::Comment => report.comments_skipped += 1,
            Line::Blank => report.blank_skipped += 1,
            Line::Pair(c, i) => {
                let c = contributors.intern(c, line)?;
                let i = items.intern(i, line)?;
                edges.push((c, i));
            }
        }
        Ok(())
    })?;

    let (graph, dups) =
        BipartiteGraph::build(contributors.into_labels(), items.into_labels(), edges)?;
    report.duplicates_dropped = dups;
    Ok((graph, report))
}

/// Writes the canonical edge list: `contributor<TAB>item`, contributors by
/// ascending id, items ascending within each contributor.
///
/// Contributors of degree 0 have no line and are not preserved.
pub fn write_edge_list<W: Write>(graph: &BipartiteGraph, mut out: W) -> std::io::Result<()> {
    for (c, i) in graph.edges() {
        writeln!(out, "{}\t{}", graph.contributor_label(c), graph.item_label(i))?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<(BipartiteGraph, LoadReport)> {
        load_edge_list(s.as_bytes())
    }

    #[test]
    fn toy_file() {
        let (g, r) = load("% comment\na x\na y\nb y\n").unwrap();
        assert_eq!((g.num_contributors(), g.num_items(), g.num_edges()), (2, 2, 3));
        assert_eq!(g.contributors_of(1), &[0, 1]);
        assert_eq!(g.item_label(1), "y");
        assert_eq!(r.comments_skipped, 1);
        assert_eq!(r.lines_read, 4);
    }

    #[test]
    fn duplicates_counted() {
        let (g, r) = load("a x\na x").unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(r.duplicates_dropped, 1);
    }

    #[test]
    fn konect_style_extra_columns_and_tabs() {
        let (g, r) = load("%% bip unweighted\n% 3 2 2\n1\t10 1 1234\n  2   10\t1\n\n1 11\r\n")
            .unwrap();
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.contributor_label(1), "2");
        assert_eq!(g.item_label(1), "11");
        assert_eq!(r.comments_skipped, 2);
        assert_eq!(r.blank_skipped, 1);
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = load("a x\n# c\nlonely\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn invalid_utf8_is_a_parse_error() {
        let err = load_edge_list(&b"a x\n\xff\xfe y\n"[..]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_input() {
        assert!(matches!(load(""), Err(Error::EmptyGraph)));
        assert!(matches!(load("% only\n\n"), Err(Error::EmptyGraph)));
    }

    #[test]
    fn canonical_writer() {
        let (g, _) = load("b y\na z\na x\n").unwrap();
        let mut out = Vec::new();
        write_edge_list(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "b\ty\na\tz\na\tx\n");
    }
}
