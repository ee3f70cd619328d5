//! Maximum connectivity improvement on DAGs: add at most `B` edges to a
//! directed acyclic graph so that the number of ordered reachable pairs
//! `f(G) = sum_v |reach(v)|` is as large as possible.
//!
//! ```
//! use mci::{solve, Dag, SolveOptions, StrategyChoice};
//!
//! let g = Dag::from_edges(4, [(0, 1), (2, 3)]).unwrap();
//! let out = solve(&g, 1, StrategyChoice::Auto, &SolveOptions::default()).unwrap();
//! assert_eq!(out.value, 10);
//! ```

pub mod cli;
pub mod format;
pub mod generators;
pub mod graph;
pub mod reach;
pub mod solvers;
pub mod structure;

pub use graph::{Classification, Dag, Digraph, Edge, GraphError};
pub use reach::{count_pairs, reach_sets, ReachabilityMatrix};
pub use solvers::{
    augment_strongly_connected, brute_force, solve, solve_by_matching, solve_by_st,
    solve_by_v_minus_b, solve_large_budget, SolveError, SolveOptions, SolveOutcome, Strategy,
    StrategyChoice,
};
pub use structure::{normalize_solution, Solution};
