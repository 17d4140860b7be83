use super::{check_m, degree_order, ConvergedReason, SeedSet};
use crate::error::Result;
use crate::graph::{BoundedBfs, Graph};
use crate::placement::min_pairwise_distance_rule;

/// Degree-ordered selection keeping every pair of spreaders at least
/// [`min_pairwise_distance_rule`] hops apart, skipping degree-1 nodes.
///
/// Rather than measuring the distance from each candidate to every chosen
/// spreader, each accepted spreader marks its ball of radius 2; a candidate
/// is admissible iff it is unmarked.
pub fn select_dsn(g: &Graph, m: usize) -> Result<SeedSet> {
    check_m(m)?;
    let radius = min_pairwise_distance_rule() - 1;
    let mut blocked = vec![false; g.node_count()];
    let mut bfs = BoundedBfs::new(g.node_count());
    let mut seeds = Vec::new();

    for candidate in degree_order(g) {
        if seeds.len() == m {
            break;
        }
        if g.degree(candidate) < 2 {
            return Ok(SeedSet::finish(seeds, m, ConvergedReason::ExhaustedDegreeFilter));
        }
        if blocked[candidate] {
            continue;
        }
        for &w in bfs.run(g, candidate, Some(radius)) {
            blocked[w] = true;
        }
        seeds.push(candidate);
    }
    Ok(SeedSet::finish(seeds, m, ConvergedReason::NoFeasibleCandidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn star_yields_center_only() {
        let s = select_dsn(&star(5), 2).unwrap();
        assert_eq!(s.nodes, vec![0]);
        assert_eq!(s.converged_reason, ConvergedReason::ExhaustedDegreeFilter);
    }

    #[test]
    fn path_of_seven() {
        // interior nodes all have degree 2; 2 and 3 are too close to 1
        let s = select_dsn(&path(7), 2).unwrap();
        assert_eq!(s.nodes, vec![1, 4]);
        assert_eq!(s.converged_reason, ConvergedReason::ReachedM);
    }

    #[test]
    fn single_pick_is_top_degree() {
        assert_eq!(select_dsn(&triangle_pendant(), 1).unwrap().nodes, vec![0]);
    }

    #[test]
    fn exhausted_scan_without_leaves() {
        let s = select_dsn(&cycle(6), 5).unwrap();
        assert_eq!(s.nodes, vec![0, 3]);
        assert_eq!(s.converged_reason, ConvergedReason::NoFeasibleCandidate);
    }
}
