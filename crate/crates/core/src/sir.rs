//! Discrete-time SIR spreading with recovery probability 1.
//!
//! At every step each node infected in the previous step makes one
//! Bernoulli(beta) attempt on each neighbor that is still susceptible, then
//! recovers. Seeds are infected at step 0. The average infected fraction
//! (AIF) counts every node ever infected, seeds included.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const DEFAULT_REPLICATIONS: usize = 100;
/// Largest graph [`exact_aif_small`] accepts.
pub const EXACT_MAX_NODES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpreadParams {
    pub beta: f64,
    pub replications: usize,
    pub max_steps: Option<usize>,
    pub master_seed: u64,
}

impl SpreadParams {
    pub fn new(beta: f64, replications: usize, master_seed: u64) -> Self {
        SpreadParams {
            beta,
            replications,
            max_steps: None,
            master_seed,
        }
    }

    fn validate(&self) -> Result<()> {
        check_beta(self.beta)?;
        if self.replications == 0 {
            return Err(Error::InvalidArgument("replications must be at least 1".into()));
        }
        Ok(())
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&beta) {
        Ok(())
    } else {
        Err(Error::BetaDomain(beta, "[0, 1]"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StepCounts {
    pub susceptible: usize,
    pub infected: usize,
    pub recovered: usize,
}

impl StepCounts {
    pub fn ever_infected(self) -> usize {
        self.infected + self.recovered
    }
}

/// Compartment sizes at steps `0..=T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub node_count: usize,
    pub steps: Vec<StepCounts>,
}

impl Trajectory {
    /// Number of steps taken; `steps.len() - 1`.
    pub fn duration(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn aif_curve(&self) -> Vec<f64> {
        self.steps
            .iter()
            .map(|c| c.ever_infected() as f64 / self.node_count as f64)
            .collect()
    }

    pub fn final_counts(&self) -> StepCounts {
        *self.steps.last().unwrap()
    }

    pub fn final_aif(&self) -> f64 {
        self.final_counts().ever_infected() as f64 / self.node_count as f64
    }
}

fn check_seeds(g: &Graph, seeds: &[NodeId]) -> Result<()> {
    if seeds.is_empty() {
        return Err(Error::EmptySeedSet);
    }
    let mut seen = vec![false; g.node_count()];
    for &s in seeds {
        g.check_node(s)?;
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::DuplicateSeed(s));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Susceptible,
    Infected,
    Recovered,
}

/// One stochastic run until no node is infected.
pub fn simulate_once<R: Rng + ?Sized>(g: &Graph, seeds: &[NodeId], beta: f64, rng: &mut R) -> Result<Trajectory> {
    check_beta(beta)?;
    check_seeds(g, seeds)?;
    Ok(run(g, seeds, beta, None, rng))
}

fn run<R: Rng + ?Sized>(g: &Graph, seeds: &[NodeId], beta: f64, max_steps: Option<usize>, rng: &mut R) -> Trajectory {
    let n = g.node_count();
    let mut state = vec![State::Susceptible; n];
    let mut infected = seeds.to_vec();
    for &s in seeds {
        state[s] = State::Infected;
    }
    let mut counts = StepCounts {
        susceptible: n - seeds.len(),
        infected: seeds.len(),
        recovered: 0,
    };
    let mut steps = vec![counts];
    let mut next = Vec::new();

    while !infected.is_empty() && max_steps.is_none_or(|cap| steps.len() <= cap) {
        next.clear();
        for &u in &infected {
            for &w in g.neighbors(u) {
                if state[w] == State::Susceptible && rng.gen::<f64>() < beta {
                    state[w] = State::Infected;
                    next.push(w);
                }
            }
        }
        for &u in &infected {
            state[u] = State::Recovered;
        }
        counts = StepCounts {
            susceptible: counts.susceptible - next.len(),
            infected: next.len(),
            recovered: counts.recovered + infected.len(),
        };
        steps.push(counts);
        std::mem::swap(&mut infected, &mut next);
    }
    Trajectory { node_count: n, steps }
}

/// SplitMix64 finaliser.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of replication `index`: `mix64(master + (index + 1) * 0x9e3779b97f4a7c15)`.
pub fn replication_seed(master_seed: u64, index: u64) -> u64 {
    mix64(master_seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub fn replication_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(replication_seed(master_seed, index))
}

/// Replication-averaged spreading.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpreadSummary {
    pub beta: f64,
    pub replications: usize,
    pub seeds: Vec<NodeId>,
    pub mean_susceptible: Vec<f64>,
    pub mean_infected: Vec<f64>,
    pub mean_recovered: Vec<f64>,
    /// Mean ever-infected fraction per step; non-decreasing.
    pub mean_aif: Vec<f64>,
    pub final_aif_mean: f64,
    /// Sample standard deviation (0 for a single replication).
    pub final_aif_std: f64,
    /// Final AIF of every replication, in replication order.
    pub final_aifs: Vec<f64>,
}

/// Runs `params.replications` independent trajectories. Replication `i` uses
/// [`replication_rng`]`(master_seed, i)`, so results do not depend on thread
/// scheduling. Shorter runs are padded with their terminal counts.
pub fn simulate(g: &Graph, seeds: &[NodeId], params: &SpreadParams) -> Result<SpreadSummary> {
    params.validate()?;
    check_seeds(g, seeds)?;
    let runs: Vec<Trajectory> = (0..params.replications as u64)
        .into_par_iter()
        .map(|i| run(g, seeds, params.beta, params.max_steps, &mut replication_rng(params.master_seed, i)))
        .collect();
    Ok(summarize(g.node_count(), seeds, params, &runs))
}

fn summarize(n: usize, seeds: &[NodeId], params: &SpreadParams, runs: &[Trajectory]) -> SpreadSummary {
    let len = runs.iter().map(|t| t.steps.len()).max().unwrap_or(1);
    let reps = runs.len() as f64;
    let mut sums = vec![[0usize; 3]; len];
    for t in runs {
        for (step, acc) in sums.iter_mut().enumerate() {
            let c = t.steps.get(step).copied().unwrap_or_else(|| t.final_counts());
            acc[0] += c.susceptible;
            acc[1] += c.infected;
            acc[2] += c.recovered;
        }
    }
    let mean = |k: usize| -> Vec<f64> { sums.iter().map(|s| s[k] as f64 / reps).collect() };
    let mean_aif = sums
        .iter()
        .map(|s| (s[1] + s[2]) as f64 / (reps * n as f64))
        .collect();

    let final_aifs: Vec<f64> = runs.iter().map(Trajectory::final_aif).collect();
    // integer total keeps boundary cases (beta 0 or 1) exact
    let ever: usize = runs.iter().map(|t| t.final_counts().ever_infected()).sum();
    let final_aif_mean = ever as f64 / (reps * n as f64);
    let final_aif_std = if runs.len() > 1 {
        let ss: f64 = final_aifs.iter().map(|x| (x - final_aif_mean).powi(2)).sum();
        (ss / (reps - 1.0)).sqrt()
    } else {
        0.0
    };
    SpreadSummary {
        beta: params.beta,
        replications: runs.len(),
        seeds: seeds.to_vec(),
        mean_susceptible: mean(0),
        mean_infected: mean(1),
        mean_recovered: mean(2),
        mean_aif,
        final_aif_mean,
        final_aif_std,
        final_aifs,
    }
}

/// `(aif - aif_baseline) / aif_baseline`.
pub fn aif_normalized(aif: f64, aif_baseline: f64) -> Result<f64> {
    if aif_baseline <= 0.0 {
        return Err(Error::ZeroBaseline);
    }
    Ok((aif - aif_baseline) / aif_baseline)
}

/// Exact expected final AIF by expanding every branch of the process.
///
/// A state is the pair (susceptible set, currently infected set). From it,
/// each susceptible node with `k` infected neighbors is infected
/// independently with probability `1 - (1 - beta)^k`; the expansion sums
/// over every subset of such nodes.
pub fn exact_aif_small(g: &Graph, seeds: &[NodeId], beta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_seeds(g, seeds)?;
    let n = g.node_count();
    if n > EXACT_MAX_NODES {
        return Err(Error::TooLarge { n, max: EXACT_MAX_NODES });
    }
    let adjacency: Vec<u32> = g
        .nodes()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let infected: u32 = seeds.iter().fold(0, |m, &s| m | 1 << s);
    let susceptible = ((1u32 << n) - 1) & !infected;
    let mut memo = HashMap::new();
    let expected = expected_infections(&adjacency, beta, susceptible, infected, &mut memo);
    Ok(expected / n as f64)
}

/// Expected number of nodes that are, or will become, infected from this state.
fn expected_infections(adjacency: &[u32], beta: f64, susceptible: u32, infected: u32, memo: &mut HashMap<(u32, u32), f64>) -> f64 {
    if infected == 0 {
        return 0.0;
    }
    if let Some(&e) = memo.get(&(susceptible, infected)) {
        return e;
    }
    let mut exposed = Vec::new();
    let mut probs = Vec::new();
    for (v, &neighbors) in adjacency.iter().enumerate() {
        if susceptible >> v & 1 == 1 {
            let k = (neighbors & infected).count_ones();
            if k > 0 {
                exposed.push(v);
                probs.push(1.0 - (1.0 - beta).powi(k as i32));
            }
        }
    }
    let mut future = 0.0;
    for subset in 0u32..(1 << exposed.len()) {
        let mut p = 1.0;
        let mut newly = 0u32;
        for (i, (&v, &q)) in exposed.iter().zip(&probs).enumerate() {
            if subset >> i & 1 == 1 {
                p *= q;
                newly |= 1 << v;
            } else {
                p *= 1.0 - q;
            }
        }
        if p > 0.0 {
            future += p * expected_infections(adjacency, beta, susceptible & !newly, newly, memo);
        }
    }
    let e = infected.count_ones() as f64 + future;
    memo.insert((susceptible, infected), e);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn edge() -> Graph {
        Graph::from_edges(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn zero_beta_ends_after_one_step() {
        let g = cycle(6);
        let t = simulate_once(&g, &[0, 3], 0.0, &mut replication_rng(1, 0)).unwrap();
        assert_eq!(t.duration(), 1);
        assert_eq!(t.final_aif(), 2.0 / 6.0);
        assert_eq!(
            t.final_counts(),
            StepCounts { susceptible: 4, infected: 0, recovered: 2 }
        );
    }

    #[test]
    fn full_beta_floods() {
        let g = path(6);
        let t = simulate_once(&g, &[1], 1.0, &mut replication_rng(7, 0)).unwrap();
        assert_eq!(t.final_aif(), 1.0);
        // farthest node (5) is 4 hops away, plus one recovery step
        assert_eq!(t.duration(), 5);
    }

    #[test]
    fn conservation_and_monotonicity() {
        let g = complete(7);
        for i in 0..20 {
            let t = simulate_once(&g, &[0], 0.3, &mut replication_rng(3, i)).unwrap();
            assert!(t.steps.iter().all(|c| c.susceptible + c.infected + c.recovered == 7));
            assert!(t.steps.windows(2).all(|w| w[0].recovered <= w[1].recovered));
            assert!(t.aif_curve().windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(t.final_counts().infected, 0);
        }
    }

    #[test]
    fn two_node_outcomes() {
        for i in 0..50 {
            let aif = simulate_once(&edge(), &[0], 0.5, &mut replication_rng(11, i))
                .unwrap()
                .final_aif();
            assert!(aif == 0.5 || aif == 1.0);
        }
    }

    #[test]
    fn seed_validation() {
        let g = path(3);
        let mut rng = replication_rng(0, 0);
        assert!(matches!(simulate_once(&g, &[], 0.5, &mut rng), Err(Error::EmptySeedSet)));
        assert!(simulate_once(&g, &[5], 0.5, &mut rng).is_err());
        assert!(simulate_once(&g, &[1, 1], 0.5, &mut rng).is_err());
        assert!(simulate_once(&g, &[1], 1.5, &mut rng).is_err());
    }

    #[test]
    fn one_replication_matches_single_run() {
        let g = cycle(9);
        let params = SpreadParams::new(0.4, 1, 99);
        let summary = simulate(&g, &[0], &params).unwrap();
        let t = simulate_once(&g, &[0], 0.4, &mut replication_rng(99, 0)).unwrap();
        assert_eq!(summary.final_aif_mean, t.final_aif());
        assert_eq!(summary.mean_aif, t.aif_curve());
        assert_eq!(summary.final_aif_std, 0.0);
    }

    #[test]
    fn two_node_mean() {
        let summary = simulate(&edge(), &[0], &SpreadParams::new(0.5, 10_000, 5)).unwrap();
        assert!((summary.final_aif_mean - 0.75).abs() < 0.02);
    }

    #[test]
    fn simulate_is_deterministic() {
        let g = cycle(12);
        let params = SpreadParams::new(0.6, 64, 2024);
        assert_eq!(simulate(&g, &[0, 6], &params).unwrap(), simulate(&g, &[0, 6], &params).unwrap());
    }

    #[test]
    fn padded_curve_is_monotone_and_ends_at_mean() {
        let g = path(10);
        let s = simulate(&g, &[0], &SpreadParams::new(0.7, 200, 1)).unwrap();
        assert!(s.mean_aif.windows(2).all(|w| w[0] <= w[1] + 1e-15));
        assert!((s.mean_aif.last().unwrap() - s.final_aif_mean).abs() < 1e-12);
        assert!(s.final_aif_mean >= 0.1);
    }

    #[test]
    fn max_steps_truncates() {
        let g = path(10);
        let mut params = SpreadParams::new(1.0, 3, 1);
        params.max_steps = Some(2);
        let s = simulate(&g, &[0], &params).unwrap();
        assert_eq!(s.mean_aif.len(), 3);
        assert_eq!(s.final_aif_mean, 0.3);
    }

    #[test]
    fn normalization() {
        assert_eq!(aif_normalized(0.5, 0.5).unwrap(), 0.0);
        assert!((aif_normalized(0.55, 0.5).unwrap() - 0.1).abs() < 1e-12);
        assert!((aif_normalized(0.4, 0.5).unwrap() + 0.2).abs() < 1e-12);
        assert!(matches!(aif_normalized(0.4, 0.0), Err(Error::ZeroBaseline)));
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(exact_aif_small(&edge(), &[0], 0.5).unwrap(), 0.75);
        assert_eq!(exact_aif_small(&star(4), &[1, 2], 0.0).unwrap(), 0.4);
        assert_eq!(exact_aif_small(&complete(3), &[0], 1.0).unwrap(), 1.0);
        // path 0-1-2 from 0: 1/3 + p/3 + p^2/3
        let p: f64 = 0.3;
        let expect = (1.0 + p + p * p) / 3.0;
        assert!((exact_aif_small(&path(3), &[0], p).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn exact_triangle_hand_expansion() {
        // from 0: both others hit w.p. p^2 -> 3; exactly one hit (2p(1-p)) -> the
        // hit node then tries the last one once: 2 + p; none -> 1
        let p: f64 = 0.4;
        let expect = (p * p * 3.0 + 2.0 * p * (1.0 - p) * (2.0 + p) + (1.0 - p).powi(2)) / 3.0;
        assert!((exact_aif_small(&complete(3), &[0], p).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn exact_rejects_large_graphs() {
        assert!(matches!(
            exact_aif_small(&path(13), &[0], 0.5),
            Err(Error::TooLarge { n: 13, .. })
        ));
    }
}
