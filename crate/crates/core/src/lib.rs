//! Redundant-influence measurement and multi-spreader selection on social
//! graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable undirected graphs, edge-list ingestion, bounded BFS,
//!   k-core decomposition, components and descriptive statistics.
//! - [`influence`]: per-node exposure counts by neighbor order and the
//!   attenuated influence / redundant influence calculus built on them.
//! - [`placement`]: enumeration of maximal zero-redundancy spreader placements
//!   around a single node.
//! - [`select`]: degree-ordered selectors (DRI, DSN) and the Degree, NC, ND
//!   and CI baselines.
//! - [`sir`]: seeded synchronous SIR Monte-Carlo with an exact small-graph
//!   oracle.
//! - [`harness`]: experiment orchestration and CSV/JSON output used by the
//!   `spreaders` binary.

pub mod error;
pub mod graph;
pub mod harness;
pub mod influence;
pub mod placement;
pub mod select;
pub mod sir;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
pub use influence::Beta;
pub use select::{ConvergedReason, SeedSet};
