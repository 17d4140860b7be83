//! Comparison selectors: neighborhood coreness (NC), disconnected
//! degree/coreness ranking (ND) and collective influence (CI).

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use super::{check_m, degree_order, ConvergedReason, SeedSet};
use crate::error::{Error, Result};
use crate::graph::{coreness, BoundedBfs, Graph, NodeId};

pub const DEFAULT_CI_RADIUS: u32 = 2;

/// Sum of the neighbors' coreness, top `m` by score, then degree, then id.
pub fn select_nc(g: &Graph, m: usize) -> Result<SeedSet> {
    check_m(m)?;
    if m > g.node_count() {
        return Err(Error::TooManySeeds { m, n: g.node_count() });
    }
    let core = coreness(g);
    let score = |v: NodeId| -> u64 { g.neighbors(v).iter().map(|&u| core[u] as u64).sum() };
    let mut order: Vec<NodeId> = g.nodes().collect();
    order.sort_by_key(|&v| (Reverse(score(v)), Reverse(g.degree(v)), v));
    order.truncate(m);
    Ok(SeedSet::finish(order, m, ConvergedReason::NoFeasibleCandidate))
}

/// Ranking used by the ND selector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NdRanking {
    #[default]
    Degree,
    /// Coreness descending, then degree, then id.
    Coreness,
}

/// Walks the ranking and keeps a candidate only if it is not adjacent to any
/// node already kept.
pub fn select_nd(g: &Graph, m: usize, ranking: NdRanking) -> Result<SeedSet> {
    check_m(m)?;
    let order = match ranking {
        NdRanking::Degree => degree_order(g),
        NdRanking::Coreness => {
            let core = coreness(g);
            let mut order: Vec<NodeId> = g.nodes().collect();
            order.sort_by_key(|&v| (Reverse(core[v]), Reverse(g.degree(v)), v));
            order
        }
    };
    let mut blocked = vec![false; g.node_count()];
    let mut seeds = Vec::new();
    for v in order {
        if seeds.len() == m {
            break;
        }
        if blocked[v] {
            continue;
        }
        blocked[v] = true;
        for &u in g.neighbors(v) {
            blocked[u] = true;
        }
        seeds.push(v);
    }
    Ok(SeedSet::finish(seeds, m, ConvergedReason::NoFeasibleCandidate))
}

/// `CI_l(v) = (k_v - 1) * sum over u at distance exactly l of (k_u - 1)`, on
/// the subgraph of `alive` nodes with residual degrees `degree`.
pub fn ci_score(
    g: &Graph,
    bfs: &mut BoundedBfs,
    alive: &[bool],
    degree: &[usize],
    v: NodeId,
    radius: u32,
) -> u64 {
    if degree[v] <= 1 {
        return 0;
    }
    bfs.run_filtered(g, v, Some(radius), |w| alive[w]);
    let frontier: u64 = bfs
        .visited()
        .iter()
        .filter(|&&w| bfs.distance(w) == Some(radius))
        .map(|&w| degree[w] as u64 - 1)
        .sum();
    (degree[v] as u64 - 1) * frontier
}

/// Repeatedly picks the highest-CI node (ties: residual degree, then id) and
/// removes it. Stops early once every remaining node is isolated.
pub fn select_ci(g: &Graph, m: usize, radius: u32) -> Result<SeedSet> {
    check_m(m)?;
    if radius == 0 {
        return Err(Error::InvalidArgument("CI radius must be at least 1".into()));
    }
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut degree = g.degrees();
    let mut bfs = BoundedBfs::new(n);
    let mut score: Vec<u64> = (0..n)
        .map(|v| ci_score(g, &mut bfs, &alive, &degree, v, radius))
        .collect();

    let mut seeds = Vec::new();
    while seeds.len() < m {
        let best = (0..n)
            .filter(|&v| alive[v] && degree[v] > 0)
            .max_by_key(|&v| (score[v], degree[v], Reverse(v)));
        let Some(best) = best else { break };

        // nodes whose ball of radius `radius` can see `best` or one of its
        // neighbors; computed before removal
        let affected: Vec<NodeId> = bfs
            .run_filtered(g, best, Some(radius + 1), |w| alive[w])
            .to_vec();
        alive[best] = false;
        for &u in g.neighbors(best) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        degree[best] = 0;
        score[best] = 0;
        for w in affected.into_iter().filter(|&w| alive[w]) {
            score[w] = ci_score(g, &mut bfs, &alive, &degree, w, radius);
        }
        seeds.push(best);
    }
    Ok(SeedSet::finish(seeds, m, ConvergedReason::NoFeasibleCandidate))
}
