//! Exact minimum-cardinality search for the four invariants.
//!
//! The pruned search scans cardinalities upward and, within each, the
//! admissible subsets in lexicographic order; the first success is
//! returned. Admissible means "satisfies the necessary conditions in
//! [`pruning`]", which every feasible set does, so the witness is the
//! lexicographically smallest minimum set overall and matches
//! [`naive_minimum`] exactly.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::kernel::{Invariant, VertexSet};

pub mod mmd;
mod naive;
pub mod pruning;
mod search;

pub use mmd::{min_vertex_cover, mmd_pairs, MMD_VERTEX_LIMIT};
pub use naive::{naive_minimum, ORACLE_VERTEX_LIMIT};
pub use pruning::{twin_classes, SearchConstraints};

/// Environment variable capping the worker count; `0` means sequential.
pub const THREADS_ENV: &str = "RESOLVEDIM_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    PrunedSearch,
    MmdVertexCover,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "brute",
            Method::PrunedSearch => "pruned",
            Method::MmdVertexCover => "mmd",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A requested search method; `Auto` picks one per instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    #[default]
    Auto,
    Fixed(Method),
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => MethodChoice::Auto,
            "brute" => MethodChoice::Fixed(Method::BruteForce),
            "pruned" => MethodChoice::Fixed(Method::PrunedSearch),
            "mmd" => MethodChoice::Fixed(Method::MmdVertexCover),
            other => return Err(Error::InvalidParam(format!("unknown method `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    /// Candidate sets tested (subset searches) or branch nodes (MMD route).
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Worker configuration. Results never depend on it.
#[derive(Clone, Default)]
pub struct SolverOptions {
    sequential: bool,
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl fmt::Debug for SolverOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let threads = self.pool.as_ref().map(|p| p.current_num_threads());
        f.debug_struct("SolverOptions")
            .field("sequential", &self.sequential)
            .field("threads", &threads)
            .finish()
    }
}

impl SolverOptions {
    pub fn sequential() -> Self {
        SolverOptions { sequential: true, pool: None }
    }

    /// `0` runs sequentially.
    pub fn with_threads(threads: usize) -> Result<Self> {
        if threads == 0 {
            return Ok(Self::sequential());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParam(format!("thread pool: {e}")))?;
        Ok(SolverOptions { sequential: false, pool: Some(Arc::new(pool)) })
    }

    /// Reads [`THREADS_ENV`]; unset means rayon's default pool.
    pub fn from_env() -> Result<Self> {
        match std::env::var(THREADS_ENV) {
            Ok(v) => {
                let threads = v.trim().parse().map_err(|_| {
                    Error::InvalidParam(format!("{THREADS_ENV} must be a non-negative integer"))
                })?;
                Self::with_threads(threads)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn is_sequential(&self) -> bool {
        self.sequential
    }

    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Solver {
    options: SolverOptions,
}

impl Solver {
    pub fn new(options: SolverOptions) -> Self {
        Solver { options }
    }

    pub fn options(&self) -> &SolverOptions {
        &self.options
    }

    /// Pruned subset search. `dm` is required for the distance-based
    /// invariants and ignored for adjacency dimension.
    pub fn pruned(
        &self,
        g: &Graph,
        dm: Option<&DistanceMatrix>,
        invariant: Invariant,
    ) -> Result<SolveResult> {
        let n = g.vertex_count();
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        if invariant.needs_distances() && dm.is_none() {
            return Err(Error::DisconnectedGraph);
        }
        let start = Instant::now();
        let constraints = SearchConstraints::for_invariant(g, dm, invariant);
        let pred = |set: &[usize]| invariant.holds_unchecked(g, dm, set);

        let mut tested = 0u64;
        let first = constraints.lower_bound().max(invariant.min_set_size());
        for size in first..=n {
            let scan = search::first_success(n, size, &constraints, &self.options, pred);
            tested += scan.tested;
            if let Some(witness) = scan.found {
                return Ok(SolveResult {
                    invariant,
                    value: size,
                    witness: VertexSet::new(witness)?,
                    method: Method::PrunedSearch,
                    nodes_explored: tested,
                    elapsed: start.elapsed(),
                });
            }
        }
        unreachable!("the full vertex set satisfies every predicate on n >= 2 vertices")
    }

    pub fn min_resolving_set(&self, g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
        self.pruned(g, Some(dm), Invariant::MetricDim)
    }

    pub fn min_doubly_resolving_set(&self, g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
        self.pruned(g, Some(dm), Invariant::DoublyDim)
    }

    pub fn min_strong_resolving_set(&self, g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
        self.pruned(g, Some(dm), Invariant::StrongDim)
    }

    pub fn min_adjacency_resolving_set(&self, g: &Graph) -> Result<SolveResult> {
        self.pruned(g, None, Invariant::AdjacencyDim)
    }

    /// Strong metric dimension as the vertex cover number of the MMD graph.
    pub fn min_strong_resolving_via_mmd(
        &self,
        g: &Graph,
        dm: &DistanceMatrix,
    ) -> Result<SolveResult> {
        let n = g.vertex_count();
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let start = Instant::now();
        let pairs = mmd_pairs(g, dm);
        let (cover, nodes) = min_vertex_cover(&pairs)?;
        Ok(SolveResult {
            invariant: Invariant::StrongDim,
            value: cover.len(),
            witness: VertexSet::new(cover)?,
            method: Method::MmdVertexCover,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
        })
    }

    /// Method `Auto` uses the pruned search, except for strong dimension
    /// when the MMD graph has fewer vertices than the graph itself (and
    /// fits the cover guard).
    pub fn resolve_method(
        &self,
        g: &Graph,
        dm: Option<&DistanceMatrix>,
        invariant: Invariant,
        choice: MethodChoice,
    ) -> Method {
        match (choice, invariant, dm) {
            (MethodChoice::Fixed(m), _, _) => m,
            (MethodChoice::Auto, Invariant::StrongDim, Some(dm)) => {
                let mmd_size = mmd::mmd_vertices(&mmd_pairs(g, dm)).len();
                if mmd_size < g.vertex_count() && mmd_size <= MMD_VERTEX_LIMIT {
                    Method::MmdVertexCover
                } else {
                    Method::PrunedSearch
                }
            }
            (MethodChoice::Auto, _, _) => Method::PrunedSearch,
        }
    }

    pub fn solve(
        &self,
        g: &Graph,
        dm: Option<&DistanceMatrix>,
        invariant: Invariant,
        choice: MethodChoice,
    ) -> Result<SolveResult> {
        match self.resolve_method(g, dm, invariant, choice) {
            Method::PrunedSearch => self.pruned(g, dm, invariant),
            Method::BruteForce => naive_minimum(g, invariant),
            Method::MmdVertexCover => {
                if invariant != Invariant::StrongDim {
                    return Err(Error::InvalidParam(format!(
                        "the mmd method only computes sdim, not {invariant}"
                    )));
                }
                let dm = dm.ok_or(Error::DisconnectedGraph)?;
                self.min_strong_resolving_via_mmd(g, dm)
            }
        }
    }
}

pub fn min_resolving_set(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    Solver::default().min_resolving_set(g, dm)
}

pub fn min_doubly_resolving_set(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    Solver::default().min_doubly_resolving_set(g, dm)
}

pub fn min_strong_resolving_set(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    Solver::default().min_strong_resolving_set(g, dm)
}

pub fn min_strong_resolving_via_mmd(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    Solver::default().min_strong_resolving_via_mmd(g, dm)
}

pub fn min_adjacency_resolving_set(g: &Graph) -> Result<SolveResult> {
    Solver::default().min_adjacency_resolving_set(g)
}
