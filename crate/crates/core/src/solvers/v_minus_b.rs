//! Exact solver parameterized by `|V| - B`.
//!
//! When `2(|V| - B) >= |V|` the sink-to-source search is bounded in terms of
//! `|V| - B`; otherwise `B > |V| / 2` and the budget already covers every
//! non-source vertex on the larger side, so the closed-form construction is
//! optimal.

use super::enumerate::search;
use super::isolated::solve_with_isolated;
use super::large_budget::large_budget_edges;
use super::{
    require_below_threshold, reversed, trivial_outcome, SolveError, SolveOptions, SolveOutcome,
    Strategy,
};
use crate::graph::{Dag, Edge};
use crate::reach::reach_sets;

fn isolated_free(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
) -> Result<(Vec<Edge>, u64), SolveError> {
    let class = g.classify();
    if class.sinks.len() > class.sources.len() {
        let (edges, explored) = isolated_free(&g.transpose(), budget, opts)?;
        return Ok((reversed(edges), explored));
    }
    let n = g.vertex_count();
    if 2 * (n - budget) >= n {
        // Sinks and sources ascending, so the product is already sorted.
        let candidates: Vec<Edge> = class
            .sinks
            .iter()
            .flat_map(|&t| class.sources.iter().map(move |&s| (t, s)))
            .collect();
        let found = search(&reach_sets(g), &candidates, budget, opts.max_explored)?;
        Ok((found.chosen, found.explored))
    } else {
        // n/2 < B < |S|, hence |V \ S| < n - B < B.
        Ok((large_budget_edges(g, budget), 1))
    }
}

/// Exact solver for `budget < max{|S|,|T|} + |Q|`, efficient when
/// `|V| - B` is small.
pub fn solve_by_v_minus_b(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    if g.vertex_count() == 1 {
        return Ok(trivial_outcome(g, Strategy::VMinusB));
    }
    require_below_threshold(&g.classify(), budget)?;
    solve_with_isolated(g, budget, opts, Strategy::VMinusB, isolated_free)
}
