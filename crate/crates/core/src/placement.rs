//! Maximal zero-redundancy spreader placements around a single node.
//!
//! A placement `(x1, x2, x3)` puts `x_i` spreaders at distance `i` from a
//! non-spreader, with `x1 <= x2 <= x3`. It is feasible when the node's total
//! influence stays within 1, and maximal when no coordinate can grow by one
//! (re-sorting afterwards) without losing feasibility.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::influence::{total_influence, within_bound, Beta};

/// Floor for [`default_bound`].
pub const DEFAULT_BOUND: u32 = 64;

/// Minimum pairwise hop distance between spreaders that rules out shared
/// first-order neighbors.
pub const fn min_pairwise_distance_rule() -> u32 {
    3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlacementTriple {
    pub x1: u32,
    pub x2: u32,
    pub x3: u32,
}

impl PlacementTriple {
    pub fn new(x1: u32, x2: u32, x3: u32) -> Result<Self> {
        if x1 <= x2 && x2 <= x3 {
            Ok(PlacementTriple { x1, x2, x3 })
        } else {
            Err(Error::Unordered(x1, x2, x3))
        }
    }

    fn sorted(mut xs: [u32; 3]) -> Self {
        xs.sort_unstable();
        PlacementTriple {
            x1: xs[0],
            x2: xs[1],
            x3: xs[2],
        }
    }

    pub fn as_array(self) -> [u32; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn total(self) -> u32 {
        self.x1 + self.x2 + self.x3
    }

    pub fn influence(self, beta: Beta) -> f64 {
        total_influence(self.as_array(), beta)
    }

    /// The three single-coordinate increments, each re-sorted.
    pub fn increments(self) -> [PlacementTriple; 3] {
        let xs = self.as_array();
        std::array::from_fn(|i| {
            let mut next = xs;
            next[i] += 1;
            Self::sorted(next)
        })
    }
}

pub fn feasible(x: PlacementTriple, beta: Beta) -> Result<bool> {
    if !(x.x1 <= x.x2 && x.x2 <= x.x3) {
        return Err(Error::Unordered(x.x1, x.x2, x.x3));
    }
    Ok(within_bound(x.as_array(), beta))
}

/// Smallest coordinate bound that no feasible triple with `x2 >= 1` reaches.
///
/// The largest `x3` in any such triple comes from `(0, 1, x3)`, which is
/// feasible while `(1 - beta^3)^x3 >= beta^2`.
pub fn required_bound(beta: Beta) -> u32 {
    let b = beta.get();
    let estimate = if b >= 1.0 {
        0.0
    } else {
        ((b * b).ln() / (1.0 - b.powi(3)).ln()).floor().max(0.0)
    };
    let mut x3 = estimate.min(u32::MAX as f64 / 2.0) as u32;
    let feasible_at = |x3: u32| x3 >= 1 && within_bound([0, 1, x3], beta);
    while x3 > 0 && !feasible_at(x3) {
        x3 -= 1;
    }
    while feasible_at(x3 + 1) {
        x3 += 1;
    }
    x3 + 1
}

/// `max(DEFAULT_BOUND, required_bound(beta))`.
pub fn default_bound(beta: Beta) -> u32 {
    DEFAULT_BOUND.max(required_bound(beta))
}

/// All maximal feasible triples with coordinates up to `bound`, sorted by
/// `x1` then coordinate total, both descending.
///
/// Triples `(0, 0, x3)` are feasible for every `x3` and therefore never
/// maximal. Any other feasible triple reaching the bound cannot be decided
/// and yields [`Error::BoundTooSmall`].
pub fn maximal_triples(beta: Beta, bound: u32) -> Result<Vec<PlacementTriple>> {
    if bound == 0 {
        return Err(Error::BoundTooSmall(bound));
    }
    let is_feasible = |t: PlacementTriple| within_bound(t.as_array(), beta);
    let mut found = Vec::new();
    // influence grows with every coordinate, so each loop stops at its
    // first infeasible value
    'x1: for x1 in 0..=bound {
        'x2: for x2 in x1.max(1)..=bound {
            for x3 in x2..=bound {
                let t = PlacementTriple { x1, x2, x3 };
                if !is_feasible(t) {
                    match (x3 == x2, x2 == x1.max(1)) {
                        (true, true) => break 'x1,
                        (true, false) => break 'x2,
                        _ => break,
                    }
                }
                if x3 == bound {
                    return Err(Error::BoundTooSmall(bound));
                }
                if t.increments().iter().all(|&up| !is_feasible(up)) {
                    found.push(t);
                }
            }
        }
    }
    found.sort_by(|a, b| b.x1.cmp(&a.x1).then(b.total().cmp(&a.total())).then(b.cmp(a)));
    Ok(found)
}
