use super::{check_m, degree_order, ConvergedReason, SeedSet};
use crate::error::Result;
use crate::graph::{BoundedBfs, Graph, NodeId};
use crate::influence::{within_bound, Beta, ExposureCounts, INFLUENCE_RANGE};

/// Degree-ordered greedy selection that never lets any non-spreader exceed
/// its influence bound.
///
/// Candidates are scanned by degree; each is kept only if adding it leaves
/// every non-spreader with total influence at most 1. Only nodes within three
/// hops of the candidate can change, so only those are re-checked. The scan
/// stops at `m` spreaders or at the first node of degree below 2.
pub fn select_dri(g: &Graph, beta: Beta, m: usize) -> Result<SeedSet> {
    check_m(m)?;
    let mut counts = ExposureCounts::new(g.node_count());
    let mut bfs = BoundedBfs::new(g.node_count());
    let mut seeds = Vec::new();

    for candidate in degree_order(g) {
        if seeds.len() == m {
            break;
        }
        if g.degree(candidate) < 2 {
            return Ok(SeedSet::finish(seeds, m, ConvergedReason::ExhaustedDegreeFilter));
        }
        if keeps_bound(g, &counts, &mut bfs, candidate, beta) {
            counts.add_seed_with(g, &mut bfs, candidate)?;
            seeds.push(candidate);
        }
    }
    Ok(SeedSet::finish(seeds, m, ConvergedReason::NoFeasibleCandidate))
}

fn keeps_bound(g: &Graph, counts: &ExposureCounts, bfs: &mut BoundedBfs, candidate: NodeId, beta: Beta) -> bool {
    bfs.run(g, candidate, Some(INFLUENCE_RANGE));
    bfs.visited()[1..].iter().all(|&w| match counts.get(w) {
        None => true,
        Some(mut exposure) => {
            exposure[bfs.distance(w).unwrap() as usize - 1] += 1;
            within_bound(exposure, beta)
        }
    })
}
