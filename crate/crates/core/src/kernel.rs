//! Representation vectors and the four resolvability predicates.
//!
//! Every solver and every closed-form witness is checked through the
//! functions in this module, so they follow the textbook definitions
//! literally:
//!
//! * `W` resolves `G` when the distance vectors `r(v | W)` are pairwise
//!   distinct.
//! * `Z` doubly resolves `G` when every pair `u != v` has `x, y` in `Z` with
//!   `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
//! * `N` strongly resolves `G` when every pair `u != v` has `w` in `N` with
//!   `u` on a shortest `v-w` path or `v` on a shortest `u-w` path.
//! * `W` is adjacency resolving when the truncated vectors (0 self,
//!   1 adjacent, 2 otherwise) are pairwise distinct.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Ordered set of distinct vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: Vec<usize>) -> Result<Self> {
        let mut sorted = members.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(members))
    }

    /// Like [`VertexSet::new`] and additionally checks every member is `< n`.
    pub fn for_graph(members: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&vertex) = members.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertex { vertex, n });
        }
        Self::new(members)
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Space separated member list, e.g. `3 5 7`.
    pub fn to_list_string(&self) -> String {
        self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
    }
}

/// Coordinates of a vertex relative to an ordered set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepVector(pub Vec<u32>);

/// The four invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    MetricDim,
    DoublyDim,
    StrongDim,
    AdjacencyDim,
}

impl Invariant {
    pub const ALL: [Invariant; 4] =
        [Invariant::MetricDim, Invariant::DoublyDim, Invariant::StrongDim, Invariant::AdjacencyDim];

    /// ASCII name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Invariant::MetricDim => "beta",
            Invariant::DoublyDim => "psi",
            Invariant::StrongDim => "sdim",
            Invariant::AdjacencyDim => "adjdim",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Invariant::MetricDim => "β",
            Invariant::DoublyDim => "ψ",
            Invariant::StrongDim => "sdim",
            Invariant::AdjacencyDim => "β̂",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Invariant::MetricDim => "metric dimension",
            Invariant::DoublyDim => "minimal doubly resolving set size",
            Invariant::StrongDim => "strong metric dimension",
            Invariant::AdjacencyDim => "adjacency dimension",
        }
    }

    /// Smallest admissible set size.
    pub(crate) fn min_set_size(self) -> usize {
        match self {
            Invariant::DoublyDim => 2,
            _ => 1,
        }
    }

    /// Evaluates the predicate for this invariant.
    pub fn holds(self, g: &Graph, dm: &DistanceMatrix, set: &VertexSet) -> Result<bool> {
        match self {
            Invariant::MetricDim => Ok(is_resolving_set(g, dm, set)),
            Invariant::DoublyDim => is_doubly_resolving_set(g, dm, set),
            Invariant::StrongDim => Ok(is_strong_resolving_set(g, dm, set)),
            Invariant::AdjacencyDim => Ok(is_adjacency_resolving_set(g, set)),
        }
    }

    /// Whether the predicate reads distances (all but adjacency).
    pub fn needs_distances(self) -> bool {
        self != Invariant::AdjacencyDim
    }

    /// Slice version used by the solvers. Size preconditions are the
    /// caller's responsibility; `dm` must be present when
    /// [`Invariant::needs_distances`] holds.
    pub(crate) fn holds_unchecked(
        self,
        g: &Graph,
        dm: Option<&DistanceMatrix>,
        set: &[usize],
    ) -> bool {
        let dist = || dm.expect("distance-based predicate without a distance matrix");
        match self {
            Invariant::MetricDim => resolves(dist(), set),
            Invariant::DoublyDim => doubly_resolves_all(dist(), set),
            Invariant::StrongDim => strongly_resolves_all(dist(), set),
            Invariant::AdjacencyDim => adjacency_resolves(g, set),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "beta" | "metric" => Ok(Invariant::MetricDim),
            "psi" | "doubly" => Ok(Invariant::DoublyDim),
            "sdim" | "strong" => Ok(Invariant::StrongDim),
            "adjdim" | "adjacency" => Ok(Invariant::AdjacencyDim),
            other => Err(Error::InvalidParam(format!("unknown invariant `{other}`"))),
        }
    }
}

/// `r(v | W) = (d(v, w_1), ..., d(v, w_k))`.
pub fn metric_representation(dm: &DistanceMatrix, v: usize, w: &VertexSet) -> RepVector {
    let row = dm.row(v);
    RepVector(w.iter().map(|&x| row[x]).collect())
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in set {
        mask[v] = true;
    }
    mask
}

pub(crate) fn resolves(dm: &DistanceMatrix, w: &[usize]) -> bool {
    let n = dm.vertex_count();
    let inside = membership(n, w);
    let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    for (i, &u) in outside.iter().enumerate() {
        let ru = dm.row(u);
        for &v in &outside[i + 1..] {
            let rv = dm.row(v);
            if w.iter().all(|&x| ru[x] == rv[x]) {
                return false;
            }
        }
    }
    true
}

/// True iff the vertices outside `w` have pairwise distinct metric
/// representations. Members of `w` are distinguished by their zero
/// coordinate and need no check.
pub fn is_resolving_set(_g: &Graph, dm: &DistanceMatrix, w: &VertexSet) -> bool {
    resolves(dm, w)
}

/// `x, y` doubly resolve `u, v` iff `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
pub fn doubly_resolves(dm: &DistanceMatrix, x: usize, y: usize, u: usize, v: usize) -> bool {
    let lhs = dm.get(u, x) as i64 - dm.get(u, y) as i64;
    let rhs = dm.get(v, x) as i64 - dm.get(v, y) as i64;
    lhs != rhs
}

// Some pair `x, y` of `z` doubly resolves `u, v` exactly when
// `d(u,.) - d(v,.)` is not constant on `z`.
pub(crate) fn doubly_resolves_all(dm: &DistanceMatrix, z: &[usize]) -> bool {
    let n = dm.vertex_count();
    let Some((&first, rest)) = z.split_first() else {
        return n <= 1;
    };
    for u in 0..n {
        let ru = dm.row(u);
        for v in u + 1..n {
            let rv = dm.row(v);
            let base = ru[first] as i64 - rv[first] as i64;
            if rest.iter().all(|&x| ru[x] as i64 - rv[x] as i64 == base) {
                return false;
            }
        }
    }
    true
}

/// True iff every pair of distinct vertices is doubly resolved by two
/// members of `z`.
pub fn is_doubly_resolving_set(g: &Graph, dm: &DistanceMatrix, z: &VertexSet) -> Result<bool> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    if z.len() < 2 {
        return Err(Error::SetTooSmall(z.len()));
    }
    Ok(doubly_resolves_all(dm, z))
}

/// True iff `u` lies on a shortest `v-w` path or `v` on a shortest `u-w` path.
pub fn strongly_resolves(dm: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let uv = dm.get(u, v);
    dm.get(v, w) == uv + dm.get(u, w) || dm.get(u, w) == uv + dm.get(v, w)
}

pub(crate) fn strongly_resolves_all(dm: &DistanceMatrix, s: &[usize]) -> bool {
    let n = dm.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&w| strongly_resolves(dm, w, u, v))))
}

pub fn is_strong_resolving_set(_g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    strongly_resolves_all(dm, s)
}

#[inline]
fn adjacency_coord(g: &Graph, v: usize, w: usize) -> u32 {
    if v == w {
        0
    } else if g.is_adjacent(v, w) {
        1
    } else {
        2
    }
}

/// Coordinates 0 (self), 1 (adjacent) or 2 (otherwise) against each `w_i`.
pub fn adjacency_representation(g: &Graph, v: usize, w: &VertexSet) -> RepVector {
    RepVector(w.iter().map(|&x| adjacency_coord(g, v, x)).collect())
}

pub(crate) fn adjacency_resolves(g: &Graph, w: &[usize]) -> bool {
    let n = g.vertex_count();
    let inside = membership(n, w);
    let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            if w.iter().all(|&x| g.is_adjacent(u, x) == g.is_adjacent(v, x)) {
                return false;
            }
        }
    }
    true
}

/// True iff all adjacency representations are pairwise distinct.
pub fn is_adjacency_resolving_set(g: &Graph, w: &VertexSet) -> bool {
    adjacency_resolves(g, w)
}
