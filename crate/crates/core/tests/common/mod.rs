//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spreaders::Graph;

pub const INF: u32 = u32::MAX;

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Preferential attachment: a clique on `m + 1` nodes, then every new node
/// links to `m` distinct existing nodes chosen proportionally to degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n > m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut endpoints = Vec::new();
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    for new in m + 1..n {
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            edges.push((new, t));
            endpoints.extend([new, t]);
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn k23() -> Graph {
    Graph::from_edges(5, [0, 1].into_iter().flat_map(|u| (2..5).map(move |v| (u, v)))).unwrap()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// All-pairs hop distances by Floyd-Warshall; `INF` when disconnected.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Coreness by repeatedly deleting nodes of degree below k, for each k.
pub fn brute_coreness(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let mut core = vec![0u32; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && (0..n).filter(|&u| alive[u] && a[v][u]).count() < k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
            }
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k as u32;
            }
        }
    }
    core
}

/// `n_i(v) = |{s in seeds : dist(v, s) = i}|` for non-seeds; `None` for seeds.
pub fn brute_exposure(g: &Graph, seeds: &[usize]) -> Vec<Option<[u32; 3]>> {
    let d = floyd_warshall(g);
    (0..g.node_count())
        .map(|v| {
            if seeds.contains(&v) {
                return None;
            }
            let mut c = [0u32; 3];
            for &s in seeds {
                if (1..=3).contains(&d[v][s]) {
                    c[d[v][s] as usize - 1] += 1;
                }
            }
            Some(c)
        })
        .collect()
}

/// Influence by explicit products, independent of the library formula.
pub fn brute_influence(counts: [u32; 3], beta: f64) -> f64 {
    let mut total = 0.0;
    let mut p = 1.0;
    for &n in &counts {
        p *= beta;
        let mut miss = 1.0;
        for _ in 0..n {
            miss *= 1.0 - p;
        }
        total += 1.0 - miss;
    }
    total
}

/// Random seed set of distinct nodes.
pub fn random_seeds(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rand::seq::index::sample(&mut rng, n, k.min(n)).into_vec()
}

/// Proptest settings without on-disk regression files, which proptest cannot
/// place for integration tests.
pub fn cases(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}
