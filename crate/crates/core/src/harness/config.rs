use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::select::{Algorithm, NdRanking, DEFAULT_CI_RADIUS};
use crate::sir::DEFAULT_REPLICATIONS;

/// Infection probabilities, either absolute or as multiples of the graph's
/// epidemic threshold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaGrid {
    Absolute(Vec<f64>),
    ThresholdMultiples(Vec<f64>),
}

impl Default for BetaGrid {
    fn default() -> Self {
        BetaGrid::ThresholdMultiples(vec![4.0, 5.0, 6.0, 7.0, 8.0])
    }
}

impl BetaGrid {
    /// Concrete betas; multiples are capped at 1.
    pub fn resolve(&self, epidemic_threshold: f64) -> Result<Vec<f64>> {
        let betas: Vec<f64> = match self {
            BetaGrid::Absolute(b) => b.clone(),
            BetaGrid::ThresholdMultiples(k) => k.iter().map(|k| (k * epidemic_threshold).min(1.0)).collect(),
        };
        if betas.is_empty() {
            return Err(Error::Config("beta grid is empty".into()));
        }
        if let Some(b) = betas.iter().find(|&&b| !(b > 0.0 && b <= 1.0)) {
            return Err(Error::Config(format!("beta {b} outside (0, 1]")));
        }
        Ok(betas)
    }

    pub fn needs_threshold(&self) -> bool {
        matches!(self, BetaGrid::ThresholdMultiples(_))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PerturbationSpec {
    pub fractions: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for PerturbationSpec {
    fn default() -> Self {
        PerturbationSpec {
            fractions: vec![0.05, 0.10, 0.15, 0.20, 0.25, 0.30],
            trials: 1,
            seed: 0,
        }
    }
}

fn default_algorithms() -> Vec<Algorithm> {
    Algorithm::ALL.to_vec()
}

fn default_m_grid() -> Vec<usize> {
    (1..=10).map(|i| 10 * i).collect()
}

fn default_replications() -> usize {
    DEFAULT_REPLICATIONS
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

fn default_ci_radius() -> u32 {
    DEFAULT_CI_RADIUS
}

/// JSON experiment description. Relative paths resolve against the
/// directory of the config file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph: PathBuf,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "default_m_grid")]
    pub m_grid: Vec<usize>,
    #[serde(default)]
    pub betas: BetaGrid,
    #[serde(default = "default_replications")]
    pub replications: usize,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default = "default_ci_radius")]
    pub ci_radius: u32,
    #[serde(default)]
    pub nd_ranking: NdRanking,
    #[serde(default)]
    pub perturbation: PerturbationSpec,
    /// Accept edge lists with extra columns (weights, timestamps).
    #[serde(default)]
    pub ignore_extra_columns: bool,
}

impl ExperimentConfig {
    pub fn new(graph: impl Into<PathBuf>) -> Self {
        ExperimentConfig {
            graph: graph.into(),
            name: None,
            algorithms: default_algorithms(),
            m_grid: default_m_grid(),
            betas: BetaGrid::default(),
            replications: default_replications(),
            master_seed: 0,
            output_dir: default_output_dir(),
            ci_radius: default_ci_radius(),
            nd_ranking: NdRanking::default(),
            perturbation: PerturbationSpec::default(),
            ignore_extra_columns: false,
        }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut config: ExperimentConfig = serde_json::from_str(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        if config.graph.is_relative() {
            config.graph = base.join(&config.graph);
        }
        if config.output_dir.is_relative() {
            config.output_dir = base.join(&config.output_dir);
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m_grid.is_empty() || self.m_grid[0] == 0 {
            return Err(Error::Config("m grid must be non-empty and start at 1 or more".into()));
        }
        if self.m_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("m grid must be strictly increasing".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms listed".into()));
        }
        if self.replications == 0 {
            return Err(Error::Config("replications must be at least 1".into()));
        }
        if self.ci_radius == 0 {
            return Err(Error::Config("ci_radius must be at least 1".into()));
        }
        let (BetaGrid::Absolute(b) | BetaGrid::ThresholdMultiples(b)) = &self.betas;
        if b.is_empty() || b.iter().any(|&x| x.is_nan() || x <= 0.0) {
            return Err(Error::Config("betas must be non-empty and positive".into()));
        }
        let p = &self.perturbation;
        if p.trials == 0 || p.fractions.iter().any(|f| !(0.0..1.0).contains(f)) {
            return Err(Error::Config("perturbation fractions must lie in [0, 1) with trials >= 1".into()));
        }
        if !self.graph.is_file() {
            return Err(Error::Config(format!("graph file {} not found", self.graph.display())));
        }
        Ok(())
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            self.graph
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".into())
        })
    }
}
