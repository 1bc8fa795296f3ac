//! Multiagent minimum spanning tree cover.
//!
//! Given one connected graph and `k` agents that each rank the edges
//! ordinally, find a small edge set that contains a minimum spanning tree of
//! every agent. The crate provides:
//!
//! - [`graph`]: graphs, union-find and Kruskal over an ordinal edge order;
//! - [`preferences`]: rank-vector preferences, lexicographic aggregation and
//!   the tie-breaking refinement used to measure progress;
//! - [`cover`]: progress, the perfect-cover test and the greedy solvers;
//! - [`matroid`]: rank oracles, the MST matroid and the matroid greedy;
//! - [`oracle`]: brute-force exact solvers for small instances;
//! - [`instances`]: random and set-cover-reduction generators and JSON I/O.

pub mod cover;
pub mod error;
pub mod graph;
pub mod instances;
pub mod matroid;
pub mod oracle;
pub mod preferences;

pub use cover::{
    greedy_cover, is_feasible, perfect_cover, progress, total_progress, weighted_greedy_cover,
    CostModel, CoverSolution, Round, SolveOptions,
};
pub use error::{Error, Result};
pub use graph::{is_spanning_tree, kruskal, DisjointSets, Graph, SpanningTree};
pub use instances::{Instance, SetCoverInput};
pub use matroid::{matroid_greedy, MstMatroid, RankOracle};
pub use preferences::{degrade, is_consistent, lex_aggregate, Preference, Profile, WeightFunction};
