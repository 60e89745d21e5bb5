//! Exact resolvability invariants of small graphs.
//!
//! The crate computes four invariants by exact search:
//!
//! | name     | symbol | meaning                              |
//! |----------|--------|--------------------------------------|
//! | `beta`   | β      | metric dimension                     |
//! | `psi`    | ψ      | minimal doubly resolving set size    |
//! | `sdim`   | sdim   | strong metric dimension              |
//! | `adjdim` | β̂      | adjacency dimension                  |
//!
//! It also generates jellyfish graphs, cocktail party graphs and their
//! Cayley realizations, and checks the known closed forms for those
//! families against the solvers.
//!
//! ```
//! use resolvedim::{all_pairs_distances, gen_jellyfish, min_resolving_set};
//!
//! let g = gen_jellyfish(3, 2).unwrap();
//! let dm = all_pairs_distances(&g).unwrap();
//! let basis = min_resolving_set(&g, &dm).unwrap();
//! assert_eq!(basis.value, 3);
//! assert_eq!(basis.witness.members(), &[3, 5, 7]);
//! ```

pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod kernel;
pub mod solvers;
pub mod theorems;

pub use error::{Error, Result};
pub use families::{
    gen_cayley_dihedral, gen_cayley_zn, gen_cocktail_party, gen_complete, gen_cycle,
    gen_jellyfish, FamilyKind, FamilySpec,
};
pub use graph::{all_pairs_distances, build_graph, is_connected, DistanceMatrix, Graph};
pub use iso::are_isomorphic;
pub use kernel::{
    adjacency_representation, doubly_resolves, is_adjacency_resolving_set,
    is_doubly_resolving_set, is_resolving_set, is_strong_resolving_set, metric_representation,
    strongly_resolves, Invariant, RepVector, VertexSet,
};
pub use solvers::{
    min_adjacency_resolving_set, min_doubly_resolving_set, min_resolving_set,
    min_strong_resolving_set, min_strong_resolving_via_mmd, naive_minimum, Method, MethodChoice,
    SolveResult, Solver, SolverOptions,
};
pub use theorems::{
    cp_dimensions, jfg_beta, jfg_diameter, jfg_psi, jfg_sdim, predicted_value, TheoremClaim,
};
