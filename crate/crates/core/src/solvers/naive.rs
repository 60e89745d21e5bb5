//! Unpruned reference search. It shares nothing with the pruned search
//! except the predicates themselves.

use std::time::Instant;

use itertools::Itertools;

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::kernel::{Invariant, VertexSet};

pub const ORACLE_VERTEX_LIMIT: usize = 14;

/// Tries every subset by increasing size, in lexicographic order.
pub fn naive_minimum(g: &Graph, invariant: Invariant) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(Error::TooLargeForOracle { n, limit: ORACLE_VERTEX_LIMIT });
    }
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let start = Instant::now();
    let dm = if invariant.needs_distances() { Some(all_pairs_distances(g)?) } else { None };

    let mut tested = 0u64;
    for size in invariant.min_set_size()..=n {
        for subset in (0..n).combinations(size) {
            tested += 1;
            if invariant.holds_unchecked(g, dm.as_ref(), &subset) {
                return Ok(SolveResult {
                    invariant,
                    value: size,
                    witness: VertexSet::new(subset)?,
                    method: Method::BruteForce,
                    nodes_explored: tested,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the full vertex set satisfies every predicate on n >= 2 vertices")
}
