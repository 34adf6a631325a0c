//! Crown-decomposition kernelization and exact solvers for three problems on
//! a side-information graph `G` over alphabet size `q`:
//!
//! * storage capacity `Capa_q(G) >= k`,
//! * index coding length `Ind_q(G) <= n - k`,
//! * minrank over GF(p) `<= n - k`.
//!
//! [`kernelize`] shrinks an instance to at most `max(3k' - 3, 0)` vertices with
//! a replayable [`ReductionTrace`]; the [`pipeline`] functions then solve the
//! kernel exactly through the confusion graph or a minrank search.
//!
//! ```
//! use crownkit_core::{decide_storage_capacity, Graph, SolverCaps};
//!
//! let star = Graph::star(6);
//! let report = decide_storage_capacity(&star, 2, 2, &SolverCaps::default()).unwrap();
//! assert!(!report.answer);
//! assert_eq!((report.kernel_n, report.kernel_k), (0, 1));
//! ```

pub mod bitset;
pub mod crown;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod pipeline;

pub use bitset::BitSet;
pub use crown::{
    find_crown_or_matching, verify_crown, CrownDecomposition, CrownDefect, CrownOutcome,
};
pub use error::{Error, Result};
pub use exact::SolverCaps;
pub use graph::{
    greedy_clique_cover, greedy_maximal_matching, induced_subgraph, isolated_vertices,
    max_bipartite_matching, min_vertex_cover_bipartite, CliqueCover, Graph, Matching, Relabeling,
};
pub use kernel::{
    apply_crown_rule, apply_isolated_rule, kernelize, lift_value, reduce_for_values, replay,
    Kernel, ProblemValue, ReductionStep, ReductionTrace, Residual,
};
pub use pipeline::{
    compute_values, decide, decide_dual_index_coding, decide_dual_minrank, decide_storage_capacity,
    DecisionReport, PhaseTimings, PipelineFailure, PipelineResult, Problem, ValueReport,
};
