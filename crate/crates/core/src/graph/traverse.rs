use std::collections::VecDeque;

use super::{Graph, NodeId};
use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

/// Reusable breadth-first search with an optional depth limit.
///
/// The distance buffer is sized once per graph and reset lazily, so repeated
/// searches only pay for the nodes they actually reach.
#[derive(Debug)]
pub struct BoundedBfs {
    dist: Vec<u32>,
    visited: Vec<NodeId>,
    queue: VecDeque<NodeId>,
}

impl BoundedBfs {
    pub fn new(node_count: usize) -> Self {
        BoundedBfs {
            dist: vec![UNSEEN; node_count],
            visited: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    /// Runs from `source` up to depth `radius` (unbounded when `None`),
    /// traversing only nodes for which `alive` holds. Returns the reached
    /// nodes in BFS order, source first; distances via [`Self::distance`].
    pub fn run_filtered<F>(&mut self, g: &Graph, source: NodeId, radius: Option<u32>, alive: F) -> &[NodeId]
    where
        F: Fn(NodeId) -> bool,
    {
        for &v in &self.visited {
            self.dist[v] = UNSEEN;
        }
        self.visited.clear();
        self.queue.clear();

        self.dist[source] = 0;
        self.visited.push(source);
        self.queue.push_back(source);
        let limit = radius.unwrap_or(UNSEEN - 1);
        while let Some(u) = self.queue.pop_front() {
            let d = self.dist[u];
            if d >= limit {
                continue;
            }
            for &w in g.neighbors(u) {
                if self.dist[w] == UNSEEN && alive(w) {
                    self.dist[w] = d + 1;
                    self.visited.push(w);
                    self.queue.push_back(w);
                }
            }
        }
        &self.visited
    }

    pub fn run(&mut self, g: &Graph, source: NodeId, radius: Option<u32>) -> &[NodeId] {
        self.run_filtered(g, source, radius, |_| true)
    }

    /// Distance from the last source, or `None` if `v` was not reached.
    #[inline]
    pub fn distance(&self, v: NodeId) -> Option<u32> {
        match self.dist[v] {
            UNSEEN => None,
            d => Some(d),
        }
    }

    pub fn visited(&self) -> &[NodeId] {
        &self.visited
    }
}

/// `N_1(v) .. N_max_order(v)`: the nodes at shortest distance exactly `i`
/// from `v`, each sorted ascending.
pub fn neighborhood_orders(g: &Graph, v: NodeId, max_order: u32) -> Result<Vec<Vec<NodeId>>> {
    g.check_node(v)?;
    if max_order == 0 {
        return Err(Error::InvalidArgument("max_order must be at least 1".into()));
    }
    let mut bfs = BoundedBfs::new(g.node_count());
    let mut orders = vec![Vec::new(); max_order as usize];
    bfs.run(g, v, Some(max_order));
    for &w in bfs.visited() {
        let d = bfs.dist[w];
        if d > 0 {
            orders[d as usize - 1].push(w);
        }
    }
    for set in &mut orders {
        set.sort_unstable();
    }
    Ok(orders)
}

/// Hop distance between `u` and `v`. `None` when they are disconnected or,
/// with a cutoff, farther apart than the cutoff.
pub fn shortest_distance(g: &Graph, u: NodeId, v: NodeId, cutoff: Option<u32>) -> Result<Option<u32>> {
    g.check_node(u)?;
    g.check_node(v)?;
    if u == v {
        return Ok(Some(0));
    }
    let mut bfs = BoundedBfs::new(g.node_count());
    bfs.run(g, u, cutoff);
    Ok(bfs.distance(v))
}
