use std::path::{Path, PathBuf};

use log::{info, warn};
use serde::Serialize;

use super::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::graph::{
    coreness, largest_connected_component, network_stats, read_edge_list_file, remove_random_nodes, DistanceMode,
    Graph, LoadOptions, NetworkStats, NodeId,
};
use crate::influence::{ri_report, Beta};
use crate::select::{select, select_dsn, Algorithm, SeedSet, SelectOptions};
use crate::sir::{aif_normalized, replication_seed, simulate, SpreadParams, SpreadSummary};

/// A validated config together with its loaded graph.
#[derive(Debug)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub graph: Graph,
    epidemic_threshold: Option<f64>,
}

impl Experiment {
    pub fn load(config: ExperimentConfig) -> Result<Self> {
        config.validate()?;
        let options = LoadOptions {
            ignore_extra_columns: config.ignore_extra_columns,
            ..Default::default()
        };
        let graph = read_edge_list_file(&config.graph, &options)?;
        Ok(Self::with_graph(config, graph))
    }

    /// Uses an already loaded graph; the config's graph path is not read.
    pub fn with_graph(config: ExperimentConfig, graph: Graph) -> Self {
        Experiment {
            config,
            graph,
            epidemic_threshold: None,
        }
    }

    /// `<k> / <k^2>` of the loaded graph.
    pub fn epidemic_threshold(&mut self) -> Result<f64> {
        if let Some(t) = self.epidemic_threshold {
            return Ok(t);
        }
        let g = &self.graph;
        if g.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        let n = g.node_count() as f64;
        let k: f64 = 2.0 * g.edge_count() as f64 / n;
        let k2: f64 = g.nodes().map(|v| (g.degree(v) as f64).powi(2)).sum::<f64>() / n;
        self.epidemic_threshold = Some(k / k2);
        Ok(k / k2)
    }

    pub fn betas(&mut self) -> Result<Vec<f64>> {
        let threshold = if self.config.betas.needs_threshold() {
            self.epidemic_threshold()?
        } else {
            f64::NAN
        };
        self.config.betas.resolve(threshold)
    }

    fn select_options(&self, beta: f64) -> SelectOptions {
        SelectOptions {
            beta: Beta::new(beta).ok(),
            ci_radius: self.config.ci_radius,
            nd_ranking: self.config.nd_ranking,
        }
    }

    pub fn select(&self, algo: Algorithm, m: usize, beta: f64) -> Result<SeedSet> {
        let seeds = select(&self.graph, algo, m, &self.select_options(beta))?;
        if seeds.is_empty() {
            return Err(Error::InvalidArgument(format!("{algo} selected no seeds")));
        }
        if seeds.len() < m {
            info!("{algo}: {} of {m} seeds ({})", seeds.len(), seeds.converged_reason);
        }
        Ok(seeds)
    }

    fn params(&self, beta: f64) -> SpreadParams {
        SpreadParams::new(beta, self.config.replications, self.config.master_seed)
    }
}

/// Step-indexed spreading curve for one (algorithm, m, beta) cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveTable {
    pub algorithm: Algorithm,
    pub m: usize,
    pub beta: f64,
    pub seeds: SeedSet,
    pub summary: SpreadSummary,
}

/// Selects seeds and simulates them. Every cell of an experiment uses the
/// same master seed, so algorithms are compared on common random numbers.
pub fn run_curve(exp: &Experiment, algo: Algorithm, m: usize, beta: f64) -> Result<CurveTable> {
    let seeds = exp.select(algo, m, beta)?;
    let summary = simulate(&exp.graph, &seeds.nodes, &exp.params(beta))?;
    Ok(CurveTable {
        algorithm: algo,
        m,
        beta,
        seeds,
        summary,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub algorithm: Algorithm,
    pub m: usize,
    pub beta: f64,
    pub n_seeds: usize,
    pub total_ri: f64,
    pub aif: f64,
    /// Relative to the DRI row of the same (m, beta).
    pub aif_star: f64,
}

/// Redundant influence and final AIF over the whole (algorithm, m, beta)
/// grid. For each (beta, m) the DRI row comes first and normalizes the rest.
pub fn run_sweep(exp: &mut Experiment) -> Result<Vec<SweepRow>> {
    if !exp.config.algorithms.contains(&Algorithm::Dri) {
        return Err(Error::Config("sweep needs dri in the algorithm list".into()));
    }
    let mut algos = vec![Algorithm::Dri];
    algos.extend(exp.config.algorithms.iter().copied().filter(|&a| a != Algorithm::Dri));
    let betas = exp.betas()?;
    let mut rows = Vec::new();
    for &beta in &betas {
        let b = Beta::new(beta)?;
        for &m in &exp.config.m_grid {
            let mut baseline = None;
            for &algo in &algos {
                let cell = run_curve(exp, algo, m, beta)?;
                let total_ri = ri_report(&exp.graph, &cell.seeds.nodes, b)?.total_ri;
                let aif = cell.summary.final_aif_mean;
                let base = *baseline.get_or_insert(aif);
                rows.push(SweepRow {
                    algorithm: algo,
                    m,
                    beta,
                    n_seeds: cell.seeds.len(),
                    total_ri,
                    aif,
                    aif_star: aif_normalized(aif, base)?,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityRow {
    pub fraction: f64,
    pub trial: usize,
    pub m: usize,
    pub beta: f64,
    pub lcc_nodes: usize,
    pub n_seeds: usize,
    pub aif: f64,
    /// Fewer than `m` seeds could be selected on the perturbed graph.
    pub short: bool,
}

/// Seed used to perturb the graph for fraction `fraction_index`, trial `trial`.
fn perturbation_seed(seed: u64, fraction_index: usize, trial: usize) -> u64 {
    replication_seed(replication_seed(seed, fraction_index as u64), trial as u64)
}

/// Robustness of DSN to missing structure: remove a fraction of nodes, pick
/// DSN seeds on the largest remaining component, and simulate those seeds on
/// the original graph.
pub fn run_stability(exp: &mut Experiment) -> Result<Vec<StabilityRow>> {
    let betas = exp.betas()?;
    let spec = exp.config.perturbation.clone();
    let m_max = *exp.config.m_grid.last().unwrap();
    let mut rows = Vec::new();
    for (fi, &fraction) in spec.fractions.iter().enumerate() {
        for trial in 0..spec.trials {
            let reduced = remove_random_nodes(&exp.graph, fraction, perturbation_seed(spec.seed, fi, trial))?;
            let lcc = largest_connected_component(&reduced.graph);
            // DSN is a prefix-stable greedy scan, so one run at the largest m
            // serves every smaller m
            let picked = select_dsn(&lcc.graph, m_max)?;
            let original: Vec<NodeId> = picked
                .nodes
                .iter()
                .map(|&v| reduced.to_parent(lcc.to_parent(v)))
                .collect();
            for &beta in &betas {
                for &m in &exp.config.m_grid {
                    let seeds = &original[..m.min(original.len())];
                    if seeds.is_empty() {
                        return Err(Error::InvalidArgument("DSN selected no seeds on perturbed graph".into()));
                    }
                    if seeds.len() < m {
                        warn!("fraction {fraction} trial {trial}: only {} of {m} DSN seeds", seeds.len());
                    }
                    let summary = simulate(&exp.graph, seeds, &exp.params(beta))?;
                    rows.push(StabilityRow {
                        fraction,
                        trial,
                        m,
                        beta,
                        lcc_nodes: lcc.graph.node_count(),
                        n_seeds: seeds.len(),
                        aif: summary.final_aif_mean,
                        short: seeds.len() < m,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// For each (m, beta): the largest minus the smallest per-fraction mean AIF
/// (means taken over trials).
pub fn stability_spread(rows: &[StabilityRow]) -> Vec<(usize, f64, f64)> {
    let mut cells: Vec<(usize, f64)> = Vec::new();
    for r in rows {
        if !cells.contains(&(r.m, r.beta)) {
            cells.push((r.m, r.beta));
        }
    }
    cells
        .into_iter()
        .map(|(m, beta)| {
            let mut fractions: Vec<f64> = Vec::new();
            for r in rows.iter().filter(|r| r.m == m && r.beta == beta) {
                if !fractions.contains(&r.fraction) {
                    fractions.push(r.fraction);
                }
            }
            let means: Vec<f64> = fractions
                .iter()
                .map(|&f| {
                    let xs: Vec<f64> = rows
                        .iter()
                        .filter(|r| r.m == m && r.beta == beta && r.fraction == f)
                        .map(|r| r.aif)
                        .collect();
                    xs.iter().sum::<f64>() / xs.len() as f64
                })
                .collect();
            let hi = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = means.iter().copied().fold(f64::INFINITY, f64::min);
            (m, beta, hi - lo)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyRow {
    pub algorithm: Algorithm,
    pub m: usize,
    /// Only DRI depends on beta; other rows leave it empty.
    pub beta: Option<f64>,
    pub n_seeds: usize,
    pub avg_degree: f64,
    pub avg_coreness: f64,
}

/// Mean degree and mean coreness of each selector's seeds.
pub fn run_properties(exp: &mut Experiment) -> Result<Vec<PropertyRow>> {
    let core = coreness(&exp.graph);
    let betas = exp.betas()?;
    let mut rows = Vec::new();
    for &algo in &exp.config.algorithms {
        let beta_cells: Vec<Option<f64>> = if algo == Algorithm::Dri {
            betas.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for beta in beta_cells {
            for &m in &exp.config.m_grid {
                let seeds = exp.select(algo, m, beta.unwrap_or(f64::NAN))?;
                let k = seeds.len() as f64;
                rows.push(PropertyRow {
                    algorithm: algo,
                    m,
                    beta,
                    n_seeds: seeds.len(),
                    avg_degree: seeds.nodes.iter().map(|&v| exp.graph.degree(v) as f64).sum::<f64>() / k,
                    avg_coreness: seeds.nodes.iter().map(|&v| core[v] as f64).sum::<f64>() / k,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Debug)]
pub struct StatsRow {
    pub name: String,
    pub path: PathBuf,
    pub stats: Result<NetworkStats>,
}

/// One stats row per file; a failure on one file does not stop the others.
/// `mode` of `None` picks [`DistanceMode::auto`] per graph.
pub fn run_stats(paths: &[PathBuf], options: &LoadOptions, mode: Option<DistanceMode>, seed: u64) -> Vec<StatsRow> {
    paths
        .iter()
        .map(|path| {
            let stats = read_edge_list_file(path, options)
                .and_then(|g| network_stats(&g, mode.unwrap_or_else(|| DistanceMode::auto(g.node_count(), seed))));
            if let Err(e) = &stats {
                warn!("{}: {e}", path.display());
            }
            StatsRow {
                name: stem(path),
                path: path.clone(),
                stats,
            }
        })
        .collect()
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads seed labels: either `select` output (a CSV with a `node_label`
/// column) or one label per line. Blank lines and `#` comments are skipped.
pub fn read_seed_file(path: &Path, g: &Graph) -> Result<Vec<NodeId>> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut labels = Vec::new();
    let header_column = lines
        .peek()
        .and_then(|h| h.split(',').position(|c| c.trim() == "node_label"));
    if let Some(col) = header_column {
        let body = lines.collect::<Vec<_>>().join("\n");
        let mut reader = csv::ReaderBuilder::new().from_reader(body.as_bytes());
        for record in reader.records() {
            let record = record?;
            let label = record
                .get(col)
                .ok_or_else(|| Error::InvalidArgument("seed row without node_label".into()))?;
            labels.push(label.to_string());
        }
    } else {
        for line in lines {
            let token = line.split([',', ' ', '\t']).next().unwrap_or(line);
            labels.push(token.to_string());
        }
    }
    let index = g.label_index();
    labels
        .iter()
        .map(|l| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.clone())))
        .collect()
}
