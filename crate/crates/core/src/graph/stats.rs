use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{largest_connected_component, BoundedBfs, Graph, NodeId};
use crate::error::{Error, Result};

/// Above this many nodes the automatic mode samples BFS sources.
pub const EXACT_DISTANCE_LIMIT: usize = 5000;
pub const SAMPLED_SOURCES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum DistanceMode {
    Exact,
    Sampled { sources: usize, seed: u64 },
}

impl DistanceMode {
    /// Exact up to [`EXACT_DISTANCE_LIMIT`] nodes, otherwise
    /// [`SAMPLED_SOURCES`] uniformly chosen sources.
    pub fn auto(node_count: usize, seed: u64) -> Self {
        if node_count <= EXACT_DISTANCE_LIMIT {
            DistanceMode::Exact
        } else {
            DistanceMode::Sampled {
                sources: SAMPLED_SOURCES,
                seed,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetworkStats {
    pub n_nodes: usize,
    pub n_edges: usize,
    pub avg_degree: f64,
    pub avg_distance: f64,
    pub clustering: f64,
    pub epidemic_threshold: f64,
    pub distance_mode: DistanceMode,
    /// Set when the graph is disconnected and `avg_distance` was measured on
    /// its largest component.
    pub distance_on_lcc: bool,
}

pub fn network_stats(g: &Graph, mode: DistanceMode) -> Result<NetworkStats> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let avg_degree = 2.0 * g.edge_count() as f64 / n as f64;
    let sum_sq: u64 = g.nodes().map(|v| (g.degree(v) as u64).pow(2)).sum();
    let mean_sq = sum_sq as f64 / n as f64;

    let lcc = largest_connected_component(g);
    let distance_on_lcc = lcc.graph.node_count() != n;
    let avg_distance = average_distance(&lcc.graph, mode);

    Ok(NetworkStats {
        n_nodes: n,
        n_edges: g.edge_count(),
        avg_degree,
        avg_distance,
        clustering: average_clustering(g),
        epidemic_threshold: avg_degree / mean_sq,
        distance_mode: mode,
        distance_on_lcc,
    })
}

fn local_clustering(g: &Graph, v: NodeId) -> f64 {
    let k = g.degree(v);
    if k < 2 {
        return 0.0;
    }
    let nbrs = g.neighbors(v);
    let mut links = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        links += count_common(g.neighbors(a), &nbrs[i + 1..]);
    }
    2.0 * links as f64 / (k * (k - 1)) as f64
}

fn count_common(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn average_clustering(g: &Graph) -> f64 {
    let local: Vec<f64> = g.nodes().into_par_iter().map(|v| local_clustering(g, v)).collect();
    local.iter().sum::<f64>() / g.node_count() as f64
}

/// Mean hop distance over ordered pairs of distinct nodes of a connected graph.
fn average_distance(g: &Graph, mode: DistanceMode) -> f64 {
    let n = g.node_count();
    if n < 2 {
        return 0.0;
    }
    let sources: Vec<NodeId> = match mode {
        DistanceMode::Exact => g.nodes().collect(),
        DistanceMode::Sampled { sources, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = rand::seq::index::sample(&mut rng, n, sources.min(n)).into_vec();
            picked.sort_unstable();
            picked
        }
    };
    // integer sums keep the result independent of scheduling
    let total: u64 = sources
        .par_iter()
        .map_init(
            || BoundedBfs::new(n),
            |bfs, &s| {
                bfs.run(g, s, None);
                bfs.visited().iter().map(|&v| bfs.distance(v).unwrap() as u64).sum::<u64>()
            },
        )
        .sum();
    total as f64 / (sources.len() as f64 * (n - 1) as f64)
}
