//! Kernelization for Bounded-Degree Vertex Deletion.
//!
//! Given a graph `G` and a degree bound `d`, the problem asks for a minimum set
//! of vertices whose deletion leaves every remaining vertex with degree at most
//! `d` (for `d = 0` this is Vertex Cover). This crate computes *d-bounded
//! decompositions* `(I, C, T, J)` and iterates them into a kernel: two disjoint
//! sets `C` and `I` such that for every minimum solution `K'` of
//! `G[V \ (C ∪ I)]`, `K' ∪ C` is a minimum solution of `G`, and the kernel has
//! at most `(d³ + 4d² + 5d + 3)` times its own optimum vertices.
//!
//! Modules, bottom-up:
//! * [`graph`]: immutable simple graphs with stable labels.
//! * [`matching`]: the bipartite graph `H`, its `(d+1)`-copy auxiliary graph,
//!   Hopcroft-Karp, matching projection and alternating-path reachability.
//! * [`star_packing`]: maximal `(d+1)`-star packings and tag classification.
//! * [`decomposition`]: `basic`, `decompose` (with packing upgrades and the
//!   bad-vertex repair loop), the trivial reduction and a validator.
//! * [`kernelization`]: the outer fixpoint loop, bound factor and lifting.
//! * [`exact`]: an exponential oracle for small instances.
//! * [`format`](mod@format) and [`generate`]: instance files and seeded random graphs.

pub mod decomposition;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod kernelization;
pub mod matching;
pub mod star_packing;

pub use decomposition::{
    bad_vertices, basic, decompose, decompose_with_stats, trivial_reduction,
    validate_decomposition, BasicResult, DBoundedDecomposition, DecomposeStats, RepairState,
    ValidationReport,
};
pub use exact::{optimum_size, solve_exact, ExactConfig, ExactError, Strategy};
pub use graph::{DegreeBound, Graph, GraphError, VertexSet};
pub use kernelization::{
    bound_factor, is_deletion_set, kernelize, lift_solution, DeletionSet, KernelError,
    KernelResult, RoundStats,
};
pub use matching::{
    alternating_reachable, build_auxiliary, build_bipartite, maximum_matching, project_matching,
    AuxiliaryGraph, BipartiteGraph, MarkedEdgeSet, Matching, MatchingError,
};
pub use star_packing::{
    classify, full_star_packing_exists, maximal_star_packing, Star, StarPacking, TagClassification,
};
