//! Attenuated influence of a spreader set on the nodes around it.
//!
//! A spreader at shortest distance `d` from a node exerts influence `beta^d`
//! for `d <= 3` and nothing beyond. Spreaders at the same distance act
//! independently, so `n` of them at distance `d` together exert
//! `1 - (1 - beta^d)^n`; the three orders are then summed. Whatever exceeds 1
//! is redundant influence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BoundedBfs, Graph, NodeId};

/// Spreaders farther than this many hops exert no influence.
pub const INFLUENCE_RANGE: u32 = 3;

/// A candidate is infeasible only if it pushes some node above `1 + RI_TOLERANCE`.
pub const RI_TOLERANCE: f64 = 1e-12;

/// Per-edge infection probability, restricted to `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Beta(f64);

impl Beta {
    pub fn new(beta: f64) -> Result<Self> {
        if beta > 0.0 && beta <= 1.0 {
            Ok(Beta(beta))
        } else {
            Err(Error::BetaDomain(beta, "(0, 1]"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Spreader counts at distance exactly 1, 2 and 3.
pub type Exposure = [u32; 3];

/// Influence of one spreader on a node `distance` hops away. Distance 0 is
/// the spreader itself (influence 1).
pub fn pair_influence(distance: u32, beta: Beta) -> f64 {
    match distance {
        0 => 1.0,
        d if d <= INFLUENCE_RANGE => beta.0.powi(d as i32),
        _ => 0.0,
    }
}

/// Total influence on a non-spreader with the given exposure; lies in `[0, 3)`.
pub fn total_influence(counts: Exposure, beta: Beta) -> f64 {
    counts
        .iter()
        .zip(1..=INFLUENCE_RANGE)
        .map(|(&n, d)| 1.0 - (1.0 - pair_influence(d, beta)).powi(n as i32))
        .sum()
}

/// The part of the total influence above 1.
pub fn redundant_influence(counts: Exposure, beta: Beta) -> f64 {
    (total_influence(counts, beta) - 1.0).max(0.0)
}

/// Whether `counts` keeps a node within its influence bound (up to
/// [`RI_TOLERANCE`]).
#[inline]
pub fn within_bound(counts: Exposure, beta: Beta) -> bool {
    total_influence(counts, beta) <= 1.0 + RI_TOLERANCE
}

/// Exposure of every non-seed node to a seed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExposureCounts {
    counts: Vec<Exposure>,
    is_seed: Vec<bool>,
    seeds: Vec<NodeId>,
}

impl ExposureCounts {
    pub fn new(node_count: usize) -> Self {
        ExposureCounts {
            counts: vec![[0; 3]; node_count],
            is_seed: vec![false; node_count],
            seeds: Vec::new(),
        }
    }

    /// Counts by a depth-3 BFS outward from every seed. Paths may run
    /// through other seeds.
    pub fn compute(g: &Graph, seeds: &[NodeId]) -> Result<Self> {
        let mut counts = Self::new(g.node_count());
        for &s in seeds {
            g.check_node(s)?;
            if counts.is_seed[s] {
                return Err(Error::DuplicateSeed(s));
            }
            counts.is_seed[s] = true;
        }
        counts.seeds = seeds.to_vec();
        let mut bfs = BoundedBfs::new(g.node_count());
        for &s in seeds {
            counts.spread_from(g, &mut bfs, s);
        }
        Ok(counts)
    }

    fn spread_from(&mut self, g: &Graph, bfs: &mut BoundedBfs, s: NodeId) {
        bfs.run(g, s, Some(INFLUENCE_RANGE));
        for &w in &bfs.visited()[1..] {
            let d = bfs.distance(w).unwrap() as usize;
            self.counts[w][d - 1] += 1;
        }
    }

    /// Makes `s` a seed, updating only nodes within three hops of it.
    /// Returns the non-seed nodes whose counts changed.
    pub fn add_seed(&mut self, g: &Graph, s: NodeId) -> Result<Vec<NodeId>> {
        let mut bfs = BoundedBfs::new(g.node_count());
        self.add_seed_with(g, &mut bfs, s)
    }

    /// As [`Self::add_seed`], reusing a caller-owned BFS buffer.
    pub fn add_seed_with(&mut self, g: &Graph, bfs: &mut BoundedBfs, s: NodeId) -> Result<Vec<NodeId>> {
        g.check_node(s)?;
        if self.is_seed[s] {
            return Err(Error::AlreadySeed(s));
        }
        self.is_seed[s] = true;
        self.seeds.push(s);
        self.spread_from(g, bfs, s);
        Ok(bfs.visited()[1..]
            .iter()
            .copied()
            .filter(|&w| !self.is_seed[w])
            .collect())
    }

    /// `None` for seeds.
    pub fn get(&self, v: NodeId) -> Option<Exposure> {
        (!self.is_seed[v]).then(|| self.counts[v])
    }

    pub fn is_seed(&self, v: NodeId) -> bool {
        self.is_seed[v]
    }

    pub fn seeds(&self) -> &[NodeId] {
        &self.seeds
    }

    pub fn node_count(&self) -> usize {
        self.counts.len()
    }

    /// Non-seed nodes with their counts, ascending by id.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, Exposure)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(v, _)| !self.is_seed[v])
            .map(|(v, &c)| (v, c))
    }
}

pub fn exposure_counts(g: &Graph, seeds: &[NodeId]) -> Result<ExposureCounts> {
    ExposureCounts::compute(g, seeds)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RiEntry {
    pub node: NodeId,
    pub counts: Exposure,
    pub influence: f64,
    pub redundant: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RiReport {
    pub beta: Beta,
    /// One entry per non-seed node, ascending by id.
    pub entries: Vec<RiEntry>,
    pub total_ri: f64,
    pub violating_nodes: Vec<NodeId>,
}

pub fn ri_report(g: &Graph, seeds: &[NodeId], beta: Beta) -> Result<RiReport> {
    let counts = exposure_counts(g, seeds)?;
    Ok(RiReport::from_counts(&counts, beta))
}

impl RiReport {
    pub fn from_counts(counts: &ExposureCounts, beta: Beta) -> Self {
        let entries: Vec<RiEntry> = counts
            .iter()
            .map(|(node, c)| {
                let influence = total_influence(c, beta);
                RiEntry {
                    node,
                    counts: c,
                    influence,
                    redundant: (influence - 1.0).max(0.0),
                }
            })
            .collect();
        let total_ri = entries.iter().map(|e| e.redundant).sum();
        let violating_nodes = entries.iter().filter(|e| e.redundant > 0.0).map(|e| e.node).collect();
        RiReport {
            beta,
            entries,
            total_ri,
            violating_nodes,
        }
    }
}
