//! Multi-spreader selection.
//!
//! Every selector is deterministic: scores are ranked descending with ties
//! broken by ascending node id (after degree, where a selector says so).

mod baselines;
mod dri;
mod dsn;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::influence::Beta;

pub use baselines::{ci_score, select_ci, select_nc, select_nd, NdRanking, DEFAULT_CI_RADIUS};
pub use dri::select_dri;
pub use dsn::select_dsn;

/// Why a selector stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergedReason {
    ReachedM,
    /// Every candidate was examined and none could be added.
    NoFeasibleCandidate,
    /// The degree-ordered scan reached nodes of degree below 2.
    ExhaustedDegreeFilter,
}

impl fmt::Display for ConvergedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvergedReason::ReachedM => "reached_m",
            ConvergedReason::NoFeasibleCandidate => "no_feasible_candidate",
            ConvergedReason::ExhaustedDegreeFilter => "exhausted_degree_filter",
        })
    }
}

/// Selected spreaders in selection order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedSet {
    pub nodes: Vec<NodeId>,
    pub converged_reason: ConvergedReason,
}

impl SeedSet {
    fn finish(nodes: Vec<NodeId>, m: usize, otherwise: ConvergedReason) -> Self {
        let converged_reason = if nodes.len() >= m {
            ConvergedReason::ReachedM
        } else {
            otherwise
        };
        SeedSet {
            nodes,
            converged_reason,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Node ids by degree descending, ties by ascending id.
pub fn degree_order(g: &Graph) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = g.nodes().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(())
}

/// The `m` highest-degree nodes.
pub fn select_degree(g: &Graph, m: usize) -> Result<SeedSet> {
    check_m(m)?;
    if m > g.node_count() {
        return Err(Error::TooManySeeds { m, n: g.node_count() });
    }
    let mut order = degree_order(g);
    order.truncate(m);
    Ok(SeedSet::finish(order, m, ConvergedReason::NoFeasibleCandidate))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Degree,
    Dri,
    Dsn,
    Nc,
    Nd,
    Ci,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Degree,
        Algorithm::Dri,
        Algorithm::Dsn,
        Algorithm::Nc,
        Algorithm::Nd,
        Algorithm::Ci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Degree => "degree",
            Algorithm::Dri => "dri",
            Algorithm::Dsn => "dsn",
            Algorithm::Nc => "nc",
            Algorithm::Nd => "nd",
            Algorithm::Ci => "ci",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm {s:?}")))
    }
}

/// Per-selector knobs; `beta` is only read by DRI.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelectOptions {
    pub beta: Option<Beta>,
    pub ci_radius: u32,
    pub nd_ranking: NdRanking,
}

impl Default for SelectOptions {
    fn default() -> Self {
        SelectOptions {
            beta: None,
            ci_radius: DEFAULT_CI_RADIUS,
            nd_ranking: NdRanking::Degree,
        }
    }
}

pub fn select(g: &Graph, algo: Algorithm, m: usize, options: &SelectOptions) -> Result<SeedSet> {
    match algo {
        Algorithm::Degree => select_degree(g, m),
        Algorithm::Dri => {
            let beta = options
                .beta
                .ok_or_else(|| Error::InvalidArgument("DRI needs an infection probability".into()))?;
            select_dri(g, beta, m)
        }
        Algorithm::Dsn => select_dsn(g, m),
        Algorithm::Nc => select_nc(g, m),
        Algorithm::Nd => select_nd(g, m, options.nd_ranking),
        Algorithm::Ci => select_ci(g, m, options.ci_radius),
    }
}
