use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use log::info;

use super::{Dropped, Graph, NodeId};
use crate::error::{Error, Result};

/// What to do with an edge that would break simplicity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Policy {
    #[default]
    Drop,
    Reject,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    pub duplicates: Policy,
    pub self_loops: Policy,
    /// Accept lines with more than two tokens (e.g. weighted edge lists) and
    /// use only the first two.
    pub ignore_extra_columns: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub lines: usize,
    pub edges_read: usize,
    pub dropped: Dropped,
}

/// Parses a whitespace-separated edge list. Lines starting with `#` or `%`
/// and blank lines are skipped. Labels become dense ids in order of first
/// appearance; the labels are kept on the returned graph.
pub fn load_edge_list<R: BufRead>(reader: R, options: &LoadOptions) -> Result<(Graph, LoadReport)> {
    let mut index: HashMap<String, NodeId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut report = LoadReport::default();
    let mut seen = std::collections::HashSet::new();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> NodeId {
        if let Some(&id) = index.get(label) {
            return id;
        }
        let id = labels.len();
        labels.push(label.to_string());
        index.insert(label.to_string(), id);
        id
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        report.lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    content: line,
                })
            }
        };
        if tokens.next().is_some() && !options.ignore_extra_columns {
            return Err(Error::Parse {
                line: lineno + 1,
                content: line,
            });
        }
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        report.edges_read += 1;
        if u == v && options.self_loops == Policy::Reject {
            return Err(Error::Rejected {
                line: lineno + 1,
                what: "self-loop",
            });
        }
        if options.duplicates == Policy::Reject && u != v && !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Rejected {
                line: lineno + 1,
                what: "duplicate edge",
            });
        }
        edges.push((u, v));
    }

    let (graph, dropped) = Graph::build(labels.len(), &edges);
    report.dropped = dropped;
    if dropped.duplicates > 0 || dropped.self_loops > 0 {
        info!(
            "dropped {} duplicate edges and {} self-loops",
            dropped.duplicates, dropped.self_loops
        );
    }
    let graph = graph.with_labels(labels)?;
    Ok((graph, report))
}

pub fn read_edge_list_file<P: AsRef<Path>>(path: P, options: &LoadOptions) -> Result<Graph> {
    let file = File::open(path.as_ref())?;
    let (graph, report) = load_edge_list(BufReader::new(file), options)?;
    info!(
        "{}: {} nodes, {} edges ({} edge lines)",
        path.as_ref().display(),
        graph.node_count(),
        graph.edge_count(),
        report.edges_read
    );
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<(Graph, LoadReport)> {
        load_edge_list(text.as_bytes(), &LoadOptions::default())
    }

    #[test]
    fn two_edges() {
        let (g, _) = load("0 1\n1 2").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
    }

    #[test]
    fn duplicates_and_self_loops_dropped() {
        let (g, report) = load("a b\nb a\na a").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (2, 1));
        assert_eq!(report.dropped, Dropped { duplicates: 1, self_loops: 1 });
        assert_eq!(g.labels().unwrap(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn labels_in_first_appearance_order() {
        let (g, _) = load("# header\n% mtx comment\n10 7\n\n7 3\n").unwrap();
        assert_eq!(g.label(0), "10");
        assert_eq!(g.label(1), "7");
        assert_eq!(g.label(2), "3");
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let (g, _) = load("").unwrap();
        assert!(g.is_empty());
        let (g, _) = load("# only comments\n").unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match load("0 1\n2\n") {
            Err(Error::Parse { line, content }) => {
                assert_eq!(line, 2);
                assert_eq!(content, "2");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load("0 1 5\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn extra_columns_can_be_ignored() {
        let opts = LoadOptions {
            ignore_extra_columns: true,
            ..Default::default()
        };
        let (g, _) = load_edge_list("0 1 0.5\n1 2 3".as_bytes(), &opts).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn reject_policies() {
        let opts = LoadOptions {
            duplicates: Policy::Reject,
            self_loops: Policy::Reject,
            ..Default::default()
        };
        assert!(matches!(
            load_edge_list("a b\nb a".as_bytes(), &opts),
            Err(Error::Rejected { line: 2, .. })
        ));
        assert!(matches!(
            load_edge_list("a a".as_bytes(), &opts),
            Err(Error::Rejected { line: 1, .. })
        ));
    }
}
