use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spreaders::graph::{read_edge_list_file, DistanceMode, Graph, LoadOptions};
use spreaders::harness::{self, output, Experiment, ExperimentConfig};
use spreaders::influence::{ri_report, Beta};
use spreaders::placement::{default_bound, maximal_triples};
use spreaders::select::{select, Algorithm, NdRanking, SelectOptions, DEFAULT_CI_RADIUS};
use spreaders::sir::{simulate, SpreadParams, DEFAULT_REPLICATIONS};

#[derive(Parser)]
#[command(name = "spreaders", version, about = "Redundant-influence-aware spreader selection and SIR experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge list: two labels per line, '#' or '%' comments.
    #[arg(long)]
    graph: PathBuf,
    /// Use only the first two columns of each line.
    #[arg(long)]
    ignore_extra_columns: bool,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        let options = LoadOptions {
            ignore_extra_columns: self.ignore_extra_columns,
            ..Default::default()
        };
        read_edge_list_file(&self.graph, &options).with_context(|| format!("loading {}", self.graph.display()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Degree,
    Dri,
    Dsn,
    Nc,
    Nd,
    Ci,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Degree => Algorithm::Degree,
            AlgoArg::Dri => Algorithm::Dri,
            AlgoArg::Dsn => Algorithm::Dsn,
            AlgoArg::Nc => Algorithm::Nc,
            AlgoArg::Nd => Algorithm::Nd,
            AlgoArg::Ci => Algorithm::Ci,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NdArg {
    Degree,
    Coreness,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceArg {
    /// Exact up to 5000 nodes, sampled above.
    Auto,
    Exact,
    Sampled,
}

#[derive(Args)]
struct ConfigArgs {
    /// JSON experiment config.
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's output directory.
    #[arg(long)]
    output_dir: Option<PathBuf>,
}

impl ConfigArgs {
    fn experiment(&self) -> Result<Experiment> {
        let mut config = ExperimentConfig::from_file(&self.config)
            .with_context(|| format!("reading config {}", self.config.display()))?;
        if let Some(dir) = &self.output_dir {
            config.output_dir = dir.clone();
        }
        Ok(Experiment::load(config)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Descriptive statistics, one CSV row per graph.
    Stats {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        distance: DistanceArg,
        /// BFS sources when sampling.
        #[arg(long, default_value_t = spreaders::graph::SAMPLED_SOURCES)]
        sources: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        ignore_extra_columns: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Select spreaders with one algorithm.
    Select {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        m: usize,
        /// Infection probability (required by dri).
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CI_RADIUS)]
        ci_radius: u32,
        #[arg(long, value_enum, default_value = "degree")]
        nd_ranking: NdArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exposure counts and redundant influence of a seed set.
    Ri {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo SIR from a seed set.
    Simulate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = DEFAULT_REPLICATIONS)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Curve CSV destination (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summary JSON destination (stderr if absent).
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// AIF against spreading step for one algorithm, m and beta.
    Curve {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        beta: f64,
    },
    /// Redundant influence, AIF and DRI-normalized AIF over the config grid.
    Sweep {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// DSN seeds chosen on randomly thinned graphs, simulated on the original.
    Stability {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Mean degree and coreness of each algorithm's seeds.
    Properties {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Maximal zero-redundancy placements (x1, x2, x3) for one beta.
    Table1 {
        #[arg(long)]
        beta: f64,
        /// Per-coordinate enumeration bound (default: large enough for beta).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => output::write_file(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn write_pair(dir: &Path, stem: &str, csv: &[u8], sidecar: serde_json::Value) -> Result<()> {
    output::write_file(&dir.join(format!("{stem}.csv")), csv)?;
    output::write_file(&dir.join(format!("{stem}.json")), &output::json(&sidecar)?)?;
    eprintln!("wrote {}", dir.join(format!("{stem}.csv")).display());
    Ok(())
}

fn provenance(exp: &mut Experiment, command: &str) -> Result<serde_json::Value> {
    let betas = exp.betas()?;
    let threshold = exp.epidemic_threshold().ok();
    Ok(json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "config": exp.config,
        "graph": {
            "nodes": exp.graph.node_count(),
            "edges": exp.graph.edge_count(),
            "epidemic_threshold": threshold,
        },
        "betas": betas,
    }))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Stats {
            graphs,
            distance,
            sources,
            seed,
            ignore_extra_columns,
            out,
        } => {
            let options = LoadOptions {
                ignore_extra_columns,
                ..Default::default()
            };
            let mode = match distance {
                DistanceArg::Auto => None,
                DistanceArg::Exact => Some(DistanceMode::Exact),
                DistanceArg::Sampled => Some(DistanceMode::Sampled { sources, seed }),
            };
            let rows = harness::run_stats(&graphs, &options, mode, seed);
            for row in &rows {
                match &row.stats {
                    Ok(s) => eprintln!(
                        "{}: distance {:?}{}",
                        row.name,
                        s.distance_mode,
                        if s.distance_on_lcc { " (largest component)" } else { "" }
                    ),
                    Err(e) => eprintln!("{}: {e}", row.path.display()),
                }
            }
            emit(out.as_deref(), &output::stats_csv(&rows)?)?;
            if let Some(out) = &out {
                let sidecar: Vec<_> = rows
                    .iter()
                    .map(|r| match &r.stats {
                        Ok(s) => json!({"name": r.name, "path": r.path, "stats": s}),
                        Err(e) => json!({"name": r.name, "path": r.path, "error": e.to_string()}),
                    })
                    .collect();
                output::write_file(&out.with_extension("json"), &output::json(&sidecar)?)?;
            }
            if rows.iter().all(|r| r.stats.is_err()) {
                bail!("no graph could be processed");
            }
        }
        Command::Select {
            graph,
            algo,
            m,
            beta,
            ci_radius,
            nd_ranking,
            out,
        } => {
            let g = graph.load()?;
            let options = SelectOptions {
                beta: beta.map(Beta::new).transpose()?,
                ci_radius,
                nd_ranking: match nd_ranking {
                    NdArg::Degree => NdRanking::Degree,
                    NdArg::Coreness => NdRanking::Coreness,
                },
            };
            let seeds = select(&g, algo.into(), m, &options)?;
            emit(out.as_deref(), &output::seeds_csv(&g, &seeds)?)?;
        }
        Command::Ri { graph, seeds, beta, out } => {
            let g = graph.load()?;
            let seeds = harness::read_seed_file(&seeds, &g)?;
            let report = ri_report(&g, &seeds, Beta::new(beta)?)?;
            emit(out.as_deref(), &output::ri_csv(&g, &report)?)?;
        }
        Command::Simulate {
            graph,
            seeds,
            beta,
            reps,
            seed,
            max_steps,
            out,
            summary,
        } => {
            let g = graph.load()?;
            let seeds = harness::read_seed_file(&seeds, &g)?;
            let mut params = SpreadParams::new(beta, reps, seed);
            params.max_steps = max_steps;
            let result = simulate(&g, &seeds, &params)?;
            emit(out.as_deref(), &output::curve_csv(&result)?)?;
            let body = output::summary_json(&result)?;
            match summary {
                Some(path) => output::write_file(&path, &body)?,
                None => std::io::stderr().write_all(&body)?,
            }
        }
        Command::Curve { config, algo, m, beta } => {
            let mut exp = config.experiment()?;
            let algo: Algorithm = algo.into();
            let table = harness::run_curve(&exp, algo, m, beta)?;
            let mut sidecar = provenance(&mut exp, "curve")?;
            sidecar["cell"] = json!({
                "algo": algo,
                "m": m,
                "beta": beta,
                "n_seeds": table.seeds.len(),
                "converged_reason": table.seeds.converged_reason,
                "seeds": table.seeds.nodes.iter().map(|&v| exp.graph.label(v).into_owned()).collect::<Vec<_>>(),
                "final_aif_mean": table.summary.final_aif_mean,
                "final_aif_std": table.summary.final_aif_std,
            });
            let stem = format!("curve_{algo}_m{m}_beta{beta}");
            write_pair(&exp.config.output_dir.clone(), &stem, &output::curve_table_csv(&table)?, sidecar)?;
        }
        Command::Sweep { config } => {
            let mut exp = config.experiment()?;
            let rows = harness::run_sweep(&mut exp)?;
            let sidecar = provenance(&mut exp, "sweep")?;
            write_pair(&exp.config.output_dir.clone(), "sweep", &output::sweep_csv(&rows)?, sidecar)?;
        }
        Command::Stability { config } => {
            let mut exp = config.experiment()?;
            let rows = harness::run_stability(&mut exp)?;
            let mut sidecar = provenance(&mut exp, "stability")?;
            sidecar["spread"] = json!(harness::stability_spread(&rows)
                .into_iter()
                .map(|(m, beta, spread)| json!({"m": m, "beta": beta, "aif_spread": spread}))
                .collect::<Vec<_>>());
            write_pair(&exp.config.output_dir.clone(), "stability", &output::stability_csv(&rows)?, sidecar)?;
        }
        Command::Properties { config } => {
            let mut exp = config.experiment()?;
            let rows = harness::run_properties(&mut exp)?;
            let sidecar = provenance(&mut exp, "properties")?;
            write_pair(&exp.config.output_dir.clone(), "properties", &output::properties_csv(&rows)?, sidecar)?;
        }
        Command::Table1 { beta, bound, out } => {
            let beta = Beta::new(beta)?;
            let triples = maximal_triples(beta, bound.unwrap_or_else(|| default_bound(beta)))?;
            emit(out.as_deref(), &output::table1_csv(beta, &triples)?)?;
        }
    }
    Ok(())
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
