//! Strong metric dimension through mutually maximally distant pairs.
//!
//! `u, v` are mutually maximally distant (MMD) when no neighbor of `u` is
//! farther from `v` and no neighbor of `v` is farther from `u`. The strong
//! resolving sets are exactly the vertex covers of the MMD graph, so the
//! strong metric dimension is its vertex cover number.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Largest MMD graph (non-isolated vertices) the cover search accepts.
pub const MMD_VERTEX_LIMIT: usize = 40;

pub fn is_mmd_pair(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    let d = dm.get(u, v);
    g.neighbors(u).iter().all(|&x| dm.get(x, v) <= d)
        && g.neighbors(v).iter().all(|&y| dm.get(u, y) <= d)
}

/// All MMD pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn mmd_pairs(g: &Graph, dm: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| is_mmd_pair(g, dm, u, v))
        .collect()
}

/// Vertices incident to at least one MMD pair.
pub fn mmd_vertices(pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut vs: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Minimum vertex cover of the graph given by `edges`.
///
/// Returns the cover (sorted, original labels) and the number of search
/// nodes visited.
pub fn min_vertex_cover(edges: &[(usize, usize)]) -> Result<(Vec<usize>, u64)> {
    let verts = mmd_vertices(edges);
    if verts.len() > MMD_VERTEX_LIMIT {
        return Err(Error::MmdTooLarge { n: verts.len(), limit: MMD_VERTEX_LIMIT });
    }
    let index = |v: usize| verts.binary_search(&v).expect("endpoint is a listed vertex");
    let mut adj = vec![0u64; verts.len()];
    for &(u, v) in edges {
        let (a, b) = (index(u), index(v));
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let all = if verts.is_empty() { 0 } else { u64::MAX >> (64 - verts.len()) };
    let mut bb = BranchAndBound { adj, best: all, best_size: verts.len(), nodes: 0 };
    bb.branch(all, 0);
    let cover = (0..verts.len()).filter(|&i| bb.best >> i & 1 == 1).map(|i| verts[i]).collect();
    Ok((cover, bb.nodes))
}

struct BranchAndBound {
    adj: Vec<u64>,
    best: u64,
    best_size: usize,
    nodes: u64,
}

impl BranchAndBound {
    fn degree(&self, v: usize, alive: u64) -> u32 {
        (self.adj[v] & alive).count_ones()
    }

    fn branch(&mut self, mut alive: u64, mut cover: u64) {
        self.nodes += 1;

        // Drop isolated vertices; a degree-one vertex can be traded for
        // its neighbor in any cover.
        loop {
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if alive >> v & 1 == 0 {
                    continue;
                }
                match self.degree(v, alive) {
                    0 => {
                        alive &= !(1 << v);
                        changed = true;
                    }
                    1 => {
                        let u = (self.adj[v] & alive).trailing_zeros() as usize;
                        cover |= 1 << u;
                        alive &= !(1 << u) & !(1 << v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let size = cover.count_ones() as usize;
        if size >= self.best_size {
            return;
        }
        let mut edges = 0u32;
        let mut pick = None;
        let mut max_deg = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.degree(v, alive);
            edges += d;
            if d > max_deg {
                max_deg = d;
                pick = Some(v);
            }
        }
        edges /= 2;
        let Some(v) = pick else {
            self.best = cover;
            self.best_size = size;
            return;
        };
        // Each cover vertex removes at most max_deg edges.
        if size + edges.div_ceil(max_deg) as usize >= self.best_size {
            return;
        }

        self.branch(alive & !(1 << v), cover | 1 << v);
        let nbrs = self.adj[v] & alive;
        self.branch(alive & !(1 << v) & !nbrs, cover | nbrs);
    }
}
