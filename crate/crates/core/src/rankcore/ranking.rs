use std::io::{BufRead, Read, Write};

use crate::bigraph::{BipartiteGraph, NodeId};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 3] = ["rank", "contributor", "score"];

/// A permutation of all contributors, most critical first.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    order: Vec<NodeId>,
    method: String,
    /// Indexed by contributor id, not by rank.
    scores: Option<Vec<f64>>,
}

impl Ranking {
    /// Orders contributors by score descending, then id ascending.
    /// Contributors of degree 0 always go last.
    pub fn from_scores(g: &BipartiteGraph, method: impl Into<String>, scores: Vec<f64>) -> Self {
        assert_eq!(scores.len(), g.num_contributors());
        let mut order: Vec<NodeId> = g.contributors().collect();
        order.sort_by(|&a, &b| {
            let za = g.contributor_degree(a) == 0;
            let zb = g.contributor_degree(b) == 0;
            za.cmp(&zb)
                .then_with(|| scores[b as usize].total_cmp(&scores[a as usize]))
                .then_with(|| a.cmp(&b))
        });
        Ranking {
            order,
            method: method.into(),
            scores: Some(scores),
        }
    }

    /// Wraps an explicit order, checking that it is a permutation of `0..n`.
    pub fn from_order(
        num_contributors: usize,
        method: impl Into<String>,
        order: Vec<NodeId>,
    ) -> Result<Self> {
        check_permutation(&order, num_contributors)?;
        Ok(Ranking {
            order,
            method: method.into(),
            scores: None,
        })
    }

    pub(crate) fn from_order_unchecked(method: impl Into<String>, order: Vec<NodeId>) -> Self {
        debug_assert!(check_permutation(&order, order.len()).is_ok());
        Ranking {
            order,
            method: method.into(),
            scores: None,
        }
    }

    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn into_order(self) -> Vec<NodeId> {
        self.order
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    pub fn scores(&self) -> Option<&[f64]> {
        self.scores.as_deref()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// One contributor label per line, most critical first.
    pub fn write_text<W: Write>(&self, g: &BipartiteGraph, mut out: W) -> std::io::Result<()> {
        for &c in &self.order {
            writeln!(out, "{}", g.contributor_label(c))?;
        }
        out.flush()
    }

    /// `rank,contributor,score` with 1-based ranks; score is empty when the
    /// method is not score-based.
    pub fn write_csv<W: Write>(&self, g: &BipartiteGraph, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for (r, &c) in self.order.iter().enumerate() {
            let score = match &self.scores {
                Some(s) => format!("{:e}", s[c as usize]),
                None => String::new(),
            };
            w.write_record([(r + 1).to_string().as_str(), g.contributor_label(c), &score])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads a ranking in either serialization (CSV is recognised by its
    /// header) and resolves labels against `g`.
    pub fn read<R: Read>(g: &BipartiteGraph, source: R) -> Result<Self> {
        let labels = read_labels(std::io::BufReader::new(source))?;
        Self::from_labels(g, &labels)
    }

    pub fn from_labels<S: AsRef<str>>(g: &BipartiteGraph, labels: &[S]) -> Result<Self> {
        let index = g.contributor_index();
        let mut seen = vec![false; g.num_contributors()];
        let mut order = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            let &c = index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_owned()))?;
            if std::mem::replace(&mut seen[c as usize], true) {
                return Err(Error::DuplicateLabel(l.to_owned()));
            }
            order.push(c);
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return Err(Error::MissingContributor(g.contributor_label(c as NodeId).to_owned()));
        }
        Ok(Ranking {
            order,
            method: String::from("file"),
            scores: None,
        })
    }
}

/// Extracts contributor labels from ranking text, without resolving them.
pub fn read_labels<R: BufRead>(mut source: R) -> Result<Vec<String>> {
    let mut first = String::new();
    source.read_line(&mut first)?;
    let header = first.trim_end_matches(['\n', '\r']);
    if header == CSV_HEADER.join(",") {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(false)
            .from_reader(source);
        let mut labels = Vec::new();
        for (n, rec) in r.records().enumerate() {
            let rec = rec?;
            let line = n as u64 + 2;
            if rec.len() != 3 {
                return Err(Error::parse(line, "expected rank,contributor,score"));
            }
            let rank: usize = rec[0]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad rank `{}`", &rec[0])))?;
            if rank != n + 1 {
                return Err(Error::parse(line, format!("rank {rank} out of sequence")));
            }
            labels.push(rec[1].to_owned());
        }
        return Ok(labels);
    }

    let mut labels = Vec::new();
    let mut push = |raw: &str, line: u64| -> Result<()> {
        let l = raw.trim_end_matches(['\n', '\r']);
        if l.is_empty() {
            return Ok(());
        }
        if l.contains(['\t', ' ']) {
            return Err(Error::parse(line, "label contains whitespace"));
        }
        labels.push(l.to_owned());
        Ok(())
    };
    if !first.is_empty() {
        push(&first, 1)?;
    }
    let mut line = 1;
    let mut buf = String::new();
    loop {
        buf.clear();
        if source.read_line(&mut buf)? == 0 {
            break;
        }
        line += 1;
        push(&buf, line)?;
    }
    Ok(labels)
}

pub fn check_permutation(order: &[NodeId], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotPermutation(format!(
            "length {} but {} contributors",
            order.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &c in order {
        let slot = seen
            .get_mut(c as usize)
            .ok_or(Error::UnknownContributor(c))?;
        if *slot {
            return Err(Error::NotPermutation(format!("contributor {c} repeated")));
        }
        *slot = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::load_edge_list;

    fn toy() -> BipartiteGraph {
        load_edge_list("a x\na y\nb y\nc,q y\n".as_bytes()).unwrap().0
    }

    #[test]
    fn score_order_with_id_ties() {
        let g = toy();
        let r = Ranking::from_scores(&g, "t", vec![1.0, 2.0, 1.0]);
        assert_eq!(r.order(), &[1, 0, 2]);
    }

    #[test]
    fn degree_zero_contributors_go_last() {
        let g = crate::bigraph::SimpleGraph::new(3, vec![(1, 2)]).unwrap();
        let b = crate::bigraph::incidence_transform(&g).unwrap();
        // Vertex 0 is isolated; its score is ignored.
        let r = Ranking::from_scores(&b, "t", vec![5.0, 0.0, 0.0]);
        assert_eq!(r.order(), &[1, 2, 0]);
    }

    #[test]
    fn text_and_csv_read_back() {
        let g = toy();
        let r = Ranking::from_scores(&g, "t", vec![0.5, 2.0, 1.0]);
        let mut text = Vec::new();
        r.write_text(&g, &mut text).unwrap();
        assert_eq!(Ranking::read(&g, &text[..]).unwrap().order(), r.order());
        let mut csv = Vec::new();
        r.write_csv(&g, &mut csv).unwrap();
        let s = String::from_utf8(csv.clone()).unwrap();
        assert!(s.starts_with("rank,contributor,score\n1,b,2e0\n2,\"c,q\",1e0\n"), "{s}");
        assert_eq!(Ranking::read(&g, &csv[..]).unwrap().order(), r.order());
    }

    #[test]
    fn label_errors() {
        let g = toy();
        assert!(matches!(
            Ranking::read(&g, "a\nzz\nb\n".as_bytes()),
            Err(Error::UnknownLabel(l)) if l == "zz"
        ));
        assert!(matches!(
            Ranking::read(&g, "a\nb\n".as_bytes()),
            Err(Error::MissingContributor(l)) if l == "c,q"
        ));
        assert!(matches!(
            Ranking::read(&g, "a\na\nb\n".as_bytes()),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn permutation_check() {
        assert!(check_permutation(&[1, 0, 2], 3).is_ok());
        assert!(check_permutation(&[1, 1, 2], 3).is_err());
        assert!(matches!(
            check_permutation(&[0, 3, 1], 3),
            Err(Error::UnknownContributor(3))
        ));
        assert!(check_permutation(&[0], 2).is_err());
    }
}
