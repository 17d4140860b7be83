//! CSV and JSON renderings of every table. Floats use Rust's shortest
//! round-trip formatting, so identical inputs give identical bytes.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use super::experiments::{CurveTable, PropertyRow, StabilityRow, StatsRow, SweepRow};
use crate::error::Result;
use crate::graph::{coreness, Graph};
use crate::influence::RiReport;
use crate::placement::PlacementTriple;
use crate::influence::Beta;
use crate::select::SeedSet;
use crate::sir::SpreadSummary;

fn render<F>(header: &[&str], fill: F) -> Result<Vec<u8>>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    fill(&mut w)?;
    w.flush()?;
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}

fn f(x: f64) -> String {
    format!("{x}")
}

pub fn stats_csv(rows: &[StatsRow]) -> Result<Vec<u8>> {
    render(&["name", "N", "E", "avg_k", "avg_d", "C", "beta_c"], |w| {
        for row in rows {
            if let Ok(s) = &row.stats {
                w.write_record([
                    row.name.clone(),
                    s.n_nodes.to_string(),
                    s.n_edges.to_string(),
                    f(s.avg_degree),
                    f(s.avg_distance),
                    f(s.clustering),
                    f(s.epidemic_threshold),
                ])?;
            }
        }
        Ok(())
    })
}

/// Seeds with their degree and coreness, plus a `# converged_reason=` trailer.
pub fn seeds_csv(g: &Graph, seeds: &SeedSet) -> Result<Vec<u8>> {
    let core = coreness(g);
    let mut out = render(&["rank", "node_label", "degree", "coreness"], |w| {
        for (rank, &v) in seeds.nodes.iter().enumerate() {
            w.write_record([
                (rank + 1).to_string(),
                g.label(v).into_owned(),
                g.degree(v).to_string(),
                core[v].to_string(),
            ])?;
        }
        Ok(())
    })?;
    writeln!(out, "# converged_reason={}", seeds.converged_reason)?;
    Ok(out)
}

/// Per non-seed node exposure and influence, plus a summary trailer.
pub fn ri_csv(g: &Graph, report: &RiReport) -> Result<Vec<u8>> {
    let mut out = render(&["node_label", "n1", "n2", "n3", "I", "RI"], |w| {
        for e in &report.entries {
            w.write_record([
                g.label(e.node).into_owned(),
                e.counts[0].to_string(),
                e.counts[1].to_string(),
                e.counts[2].to_string(),
                f(e.influence),
                f(e.redundant),
            ])?;
        }
        Ok(())
    })?;
    writeln!(
        out,
        "# beta={},total_ri={},violating_nodes={}",
        report.beta.get(),
        report.total_ri,
        report.violating_nodes.len()
    )?;
    Ok(out)
}

pub fn curve_csv(summary: &SpreadSummary) -> Result<Vec<u8>> {
    render(&["step", "mean_S", "mean_I", "mean_R", "mean_AIF"], |w| {
        for step in 0..summary.mean_aif.len() {
            w.write_record([
                step.to_string(),
                f(summary.mean_susceptible[step]),
                f(summary.mean_infected[step]),
                f(summary.mean_recovered[step]),
                f(summary.mean_aif[step]),
            ])?;
        }
        Ok(())
    })
}

#[derive(Serialize)]
struct SimulationJson {
    final_aif_mean: f64,
    final_aif_std: f64,
    reps: usize,
    beta: f64,
    n_seeds: usize,
}

pub fn summary_json(summary: &SpreadSummary) -> Result<Vec<u8>> {
    let body = SimulationJson {
        final_aif_mean: summary.final_aif_mean,
        final_aif_std: summary.final_aif_std,
        reps: summary.replications,
        beta: summary.beta,
        n_seeds: summary.seeds.len(),
    };
    let mut out = serde_json::to_vec_pretty(&body)?;
    out.push(b'\n');
    Ok(out)
}

pub fn table1_csv(beta: Beta, triples: &[PlacementTriple]) -> Result<Vec<u8>> {
    render(&["beta", "x1", "x2", "x3", "I"], |w| {
        for t in triples {
            w.write_record([
                f(beta.get()),
                t.x1.to_string(),
                t.x2.to_string(),
                t.x3.to_string(),
                f(t.influence(beta)),
            ])?;
        }
        Ok(())
    })
}

/// Curve rows, with the seed count actually used (DRI may stop short of m).
pub fn curve_table_csv(table: &CurveTable) -> Result<Vec<u8>> {
    let s = &table.summary;
    render(
        &["algo", "m", "n_seeds", "beta", "step", "mean_S", "mean_I", "mean_R", "mean_AIF"],
        |w| {
            for step in 0..s.mean_aif.len() {
                w.write_record([
                    table.algorithm.to_string(),
                    table.m.to_string(),
                    table.seeds.len().to_string(),
                    f(table.beta),
                    step.to_string(),
                    f(s.mean_susceptible[step]),
                    f(s.mean_infected[step]),
                    f(s.mean_recovered[step]),
                    f(s.mean_aif[step]),
                ])?;
            }
            Ok(())
        },
    )
}

pub fn sweep_csv(rows: &[SweepRow]) -> Result<Vec<u8>> {
    render(&["algo", "m", "beta", "n_seeds", "total_RI", "AIF", "AIF_star"], |w| {
        for r in rows {
            w.write_record([
                r.algorithm.to_string(),
                r.m.to_string(),
                f(r.beta),
                r.n_seeds.to_string(),
                f(r.total_ri),
                f(r.aif),
                f(r.aif_star),
            ])?;
        }
        Ok(())
    })
}

pub fn stability_csv(rows: &[StabilityRow]) -> Result<Vec<u8>> {
    render(
        &["fraction", "trial", "m", "beta", "lcc_nodes", "n_seeds", "AIF", "short"],
        |w| {
            for r in rows {
                w.write_record([
                    f(r.fraction),
                    r.trial.to_string(),
                    r.m.to_string(),
                    f(r.beta),
                    r.lcc_nodes.to_string(),
                    r.n_seeds.to_string(),
                    f(r.aif),
                    r.short.to_string(),
                ])?;
            }
            Ok(())
        },
    )
}

pub fn properties_csv(rows: &[PropertyRow]) -> Result<Vec<u8>> {
    render(&["algo", "m", "beta", "n_seeds", "avg_degree", "avg_coreness"], |w| {
        for r in rows {
            w.write_record([
                r.algorithm.to_string(),
                r.m.to_string(),
                r.beta.map(f).unwrap_or_default(),
                r.n_seeds.to_string(),
                f(r.avg_degree),
                f(r.avg_coreness),
            ])?;
        }
        Ok(())
    })
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, bytes)?;
    Ok(())
}
