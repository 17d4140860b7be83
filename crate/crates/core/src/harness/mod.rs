//! Experiment orchestration: configuration, the table-producing runs behind
//! the CLI, and their CSV/JSON renderings.

mod config;
mod experiments;
pub mod output;

pub use config::{BetaGrid, ExperimentConfig, PerturbationSpec};
pub use experiments::{
    read_seed_file, run_curve, run_properties, run_stability, run_stats, run_sweep, stability_spread, CurveTable,
    Experiment, PropertyRow, StabilityRow, StatsRow, SweepRow,
};
