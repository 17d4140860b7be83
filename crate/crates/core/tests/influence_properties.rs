mod common;

use common::*;
use proptest::prelude::*;
use spreaders::influence::{
    exposure_counts, redundant_influence, ri_report, total_influence, Beta, ExposureCounts,
};
use spreaders::Graph;

fn graph_and_seeds() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=50, 0.02f64..0.25, any::<u64>(), 0usize..=12).prop_map(|(n, p, seed, k)| {
        let g = erdos_renyi(n, p, seed);
        let seeds = random_seeds(n, k, seed.wrapping_add(1));
        (g, seeds)
    })
}

fn beta() -> impl Strategy<Value = f64> {
    (1u32..=100).prop_map(|x| x as f64 / 100.0)
}

proptest! {
    #![proptest_config(cases(128))]

    #[test]
    fn exposure_matches_definition((g, seeds) in graph_and_seeds()) {
        let counts = exposure_counts(&g, &seeds).unwrap();
        let expect = brute_exposure(&g, &seeds);
        for v in g.nodes() {
            prop_assert_eq!(counts.get(v), expect[v]);
            if let Some(c) = expect[v] {
                prop_assert!((c.iter().sum::<u32>() as usize) <= seeds.len());
            }
        }
    }

    #[test]
    fn insertion_order_does_not_matter((g, seeds) in graph_and_seeds(), shuffle in any::<u64>()) {
        let order = random_seeds(seeds.len(), seeds.len(), shuffle);
        let mut a = ExposureCounts::new(g.node_count());
        let mut b = ExposureCounts::new(g.node_count());
        for (i, &s) in seeds.iter().enumerate() {
            a.add_seed(&g, s).unwrap();
            b.add_seed(&g, seeds[order[i]]).unwrap();
        }
        prop_assert!(a.iter().eq(b.iter()));
        let batch = exposure_counts(&g, &seeds).unwrap();
        prop_assert!(a.iter().eq(batch.iter()));
    }

    #[test]
    fn touched_nodes_are_exactly_the_changed_ones((g, seeds) in graph_and_seeds()) {
        prop_assume!(!seeds.is_empty());
        let (last, rest) = seeds.split_last().unwrap();
        let mut counts = exposure_counts(&g, rest).unwrap();
        let before = counts.clone();
        let mut touched = counts.add_seed(&g, *last).unwrap();
        touched.sort_unstable();
        let changed: Vec<usize> = g
            .nodes()
            .filter(|&v| v != *last && counts.get(v).is_some() && counts.get(v) != before.get(v))
            .collect();
        prop_assert_eq!(touched, changed);
    }

    #[test]
    fn influence_matches_product_form(n1 in 0u32..30, n2 in 0u32..30, n3 in 0u32..30, b in beta()) {
        let beta = Beta::new(b).unwrap();
        let i = total_influence([n1, n2, n3], beta);
        prop_assert!((i - brute_influence([n1, n2, n3], b)).abs() < 1e-12);
        prop_assert!((0.0..=3.0).contains(&i));
        prop_assert_eq!(redundant_influence([n1, n2, n3], beta), (i - 1.0).max(0.0));
    }

    #[test]
    fn influence_is_monotone(n in prop::array::uniform3(0u32..20), which in 0usize..3, b in 1u32..=99) {
        let beta = Beta::new(b as f64 / 100.0).unwrap();
        let mut up = n;
        up[which] += 1;
        let (lo, hi) = (total_influence(n, beta), total_influence(up, beta));
        prop_assert!(hi >= lo, "{lo} > {hi}");
        let higher = Beta::new((b + 1) as f64 / 100.0).unwrap();
        prop_assert!(total_influence(n, higher) >= lo);
    }

    #[test]
    fn single_spreader_never_redundant(g in (1usize..=50, 0.0f64..0.5, any::<u64>()).prop_map(|(n, p, s)| erdos_renyi(n, p, s)),
                                      pick in any::<prop::sample::Index>(), b in beta()) {
        let s = pick.index(g.node_count());
        let report = ri_report(&g, &[s], Beta::new(b).unwrap()).unwrap();
        prop_assert_eq!(report.total_ri, 0.0);
        prop_assert!(report.entries.iter().all(|e| e.influence <= b + 1e-15));
    }

    #[test]
    fn report_is_consistent((g, seeds) in graph_and_seeds(), b in beta()) {
        let report = ri_report(&g, &seeds, Beta::new(b).unwrap()).unwrap();
        prop_assert_eq!(report.entries.len(), g.node_count() - seeds.len());
        let mut total = 0.0;
        for e in &report.entries {
            prop_assert_eq!(e.redundant, (e.influence - 1.0).max(0.0));
            total += e.redundant;
        }
        prop_assert_eq!(report.total_ri, total);
        let violating: Vec<usize> = report.entries.iter().filter(|e| e.redundant > 0.0).map(|e| e.node).collect();
        prop_assert_eq!(&report.violating_nodes, &violating);
        prop_assert!(report.violating_nodes.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn sequential_updates_equal_batch_on_fifty_graphs() {
    for i in 0..50u64 {
        let g = if i % 2 == 0 {
            erdos_renyi(40, 0.1, i)
        } else {
            barabasi_albert(40, 2, i)
        };
        let seeds = random_seeds(40, 2, i + 100);
        let mut inc = ExposureCounts::new(40);
        for &s in &seeds {
            inc.add_seed(&g, s).unwrap();
        }
        assert_eq!(inc, exposure_counts(&g, &seeds).unwrap(), "graph {i}");
    }
}
