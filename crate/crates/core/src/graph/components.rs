use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, NodeId};
use crate::error::{Error, Result};

/// A node-induced subgraph together with the ids its nodes had in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `parent_ids[v]` is the parent id of subgraph node `v`; ascending.
    pub parent_ids: Vec<NodeId>,
}

impl Subgraph {
    pub fn identity(g: &Graph) -> Self {
        Subgraph {
            graph: g.clone(),
            parent_ids: g.nodes().collect(),
        }
    }

    pub fn to_parent(&self, v: NodeId) -> NodeId {
        self.parent_ids[v]
    }
}

/// Component index per node; components are numbered in order of their
/// smallest node id.
pub fn connected_components(g: &Graph) -> (Vec<usize>, usize) {
    let mut component = vec![usize::MAX; g.node_count()];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in g.nodes() {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if component[w] == usize::MAX {
                    component[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (component, count)
}

/// The largest connected component as an induced subgraph. Among equally
/// large components the one holding the smallest node id wins.
pub fn largest_connected_component(g: &Graph) -> Subgraph {
    if g.is_empty() {
        return Subgraph::identity(g);
    }
    let (component, count) = connected_components(g);
    let mut sizes = vec![0usize; count];
    for &c in &component {
        sizes[c] += 1;
    }
    // components are numbered by smallest member, so the first maximum wins ties
    let best = (0..count).fold(0, |best, c| if sizes[c] > sizes[best] { c } else { best });
    if sizes[best] == g.node_count() {
        return Subgraph::identity(g);
    }
    let keep: Vec<NodeId> = g.nodes().filter(|&v| component[v] == best).collect();
    g.induced_subgraph(&keep)
}

/// Deletes `floor(fraction * N)` nodes sampled uniformly without replacement
/// and returns the subgraph induced by the survivors.
pub fn remove_random_nodes(g: &Graph, fraction: f64, seed: u64) -> Result<Subgraph> {
    if !(0.0..1.0).contains(&fraction) {
        return Err(Error::InvalidArgument(format!(
            "removal fraction {fraction} outside [0, 1)"
        )));
    }
    let n = g.node_count();
    let remove = (fraction * n as f64).floor() as usize;
    if remove == 0 {
        return Ok(Subgraph::identity(g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut removed = vec![false; n];
    for v in rand::seq::index::sample(&mut rng, n, remove) {
        removed[v] = true;
    }
    let keep: Vec<NodeId> = g.nodes().filter(|&v| !removed[v]).collect();
    Ok(g.induced_subgraph(&keep))
}
