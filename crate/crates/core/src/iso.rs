//! Backtracking isomorphism test for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count [`are_isomorphic`] accepts.
pub const ISO_VERTEX_LIMIT: usize = 16;

/// Searches for an edge-preserving bijection `g1 -> g2`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > ISO_VERTEX_LIMIT {
            return Err(Error::TooLargeForIso { n: g.vertex_count(), limit: ISO_VERTEX_LIMIT });
        }
    }
    if n != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }

    // Map high-degree vertices first; ties by index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g1.degree(v)), v));

    let mut state = Search {
        g1,
        g2,
        order,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(state.extend(0).then_some(state.mapping))
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g1, g2)?.is_some())
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for target in 0..self.g2.vertex_count() {
            if self.used[target] || self.g2.degree(target) != self.g1.degree(u) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&prev| {
                self.g1.is_adjacent(u, prev) == self.g2.is_adjacent(target, self.mapping[prev])
            });
            if !consistent {
                continue;
            }
            self.mapping[u] = target;
            self.used[target] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[target] = false;
            self.mapping[u] = usize::MAX;
        }
        false
    }
}
