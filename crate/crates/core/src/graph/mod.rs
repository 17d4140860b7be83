//! Immutable undirected simple graphs with dense node ids.

mod components;
mod io;
mod kcore;
mod stats;
mod traverse;

use std::borrow::Cow;
use std::collections::HashMap;

use crate::error::{Error, Result};

pub use components::{connected_components, largest_connected_component, remove_random_nodes, Subgraph};
pub use io::{load_edge_list, read_edge_list_file, LoadOptions, LoadReport, Policy};
pub use kcore::{coreness, CorenessMap};
pub use stats::{network_stats, DistanceMode, NetworkStats, EXACT_DISTANCE_LIMIT, SAMPLED_SOURCES};
pub use traverse::{neighborhood_orders, shortest_distance, BoundedBfs};

pub type NodeId = usize;

/// Undirected simple graph stored as sorted adjacency lists in CSR form.
///
/// Adjacency is symmetric, free of self-loops and duplicate entries. Node ids
/// are dense in `[0, node_count)`; when the graph was built from labelled
/// input the original labels are kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    labels: Option<Vec<String>>,
}

/// Counts of input edges that did not make it into the simple graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Dropped {
    pub duplicates: usize,
    pub self_loops: usize,
}

impl Graph {
    pub fn empty() -> Self {
        Graph {
            offsets: vec![0],
            targets: Vec::new(),
            labels: None,
        }
    }

    /// Builds a simple graph on `node_count` nodes, collapsing duplicate
    /// edges and dropping self-loops.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= node_count {
                    return Err(Error::InvalidNode { node: w, node_count });
                }
            }
        }
        Ok(Self::build(node_count, &edges).0)
    }

    pub(crate) fn build(node_count: usize, edges: &[(NodeId, NodeId)]) -> (Self, Dropped) {
        let mut dropped = Dropped::default();
        let mut degree = vec![0usize; node_count];
        for &(u, v) in edges {
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..node_count].to_vec();
        let mut targets = vec![0; *offsets.last().unwrap()];
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }

        // sort + dedup each list, then compact
        let mut compact = Vec::with_capacity(targets.len());
        let mut new_offsets = Vec::with_capacity(node_count + 1);
        new_offsets.push(0);
        let mut removed = 0;
        for v in 0..node_count {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            let before = compact.len();
            for &w in list.iter() {
                if compact.len() == before || *compact.last().unwrap() != w {
                    compact.push(w);
                }
            }
            removed += list.len() - (compact.len() - before);
            new_offsets.push(compact.len());
        }
        // every duplicate undirected edge was removed from both endpoints
        dropped.duplicates = removed / 2;

        let g = Graph {
            offsets: new_offsets,
            targets: compact,
            labels: None,
        };
        (g, dropped)
    }

    /// Attaches labels; `labels.len()` must equal the node count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.node_count() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.node_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nodes().map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes()
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v)))
            .filter(|(u, v)| u < v)
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The original label of `v`, or its dense id when the graph is unlabelled.
    pub fn label(&self, v: NodeId) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn label_index(&self) -> HashMap<String, NodeId> {
        self.nodes().map(|v| (self.label(v).into_owned(), v)).collect()
    }

    pub fn node_by_label(&self, label: &str) -> Result<NodeId> {
        match &self.labels {
            Some(labels) => labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string())),
            None => label
                .parse::<NodeId>()
                .ok()
                .filter(|&v| v < self.node_count())
                .ok_or_else(|| Error::UnknownLabel(label.to_string())),
        }
    }

    /// Induced subgraph on `keep` (which must be sorted and distinct). Labels
    /// are inherited, so the subgraph still reports the parent's labels.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> Subgraph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut position = vec![usize::MAX; self.node_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let mut offsets = Vec::with_capacity(keep.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &v in keep {
            // parent lists are sorted and `position` is monotone, so the
            // remapped lists stay sorted
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| position[w])
                    .filter(|&p| p != usize::MAX),
            );
            offsets.push(targets.len());
        }
        let labels = keep.iter().map(|&v| self.label(v).into_owned()).collect();
        Subgraph {
            graph: Graph {
                offsets,
                targets,
                labels: Some(labels),
            },
            parent_ids: keep.to_vec(),
        }
    }
}
