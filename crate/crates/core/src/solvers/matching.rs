//! Exact solver parameterized by the matching number.
//!
//! Sources with the same out-neighborhood are interchangeable (swapping
//! them is an automorphism), and likewise sinks with the same
//! in-neighborhood. Below `max{|S0|, |T0|}` the search therefore only needs
//! the `min(B, |class|)` smallest members of every class. At or above it
//! the optimum `(n - a)(n - c) + a + c`, with `a = |S| - B` and
//! `c = max(|T| - B, 0)`, is built directly.

use super::enumerate::search;
use super::isolated::solve_with_isolated;
use super::large_budget::strongly_connect_subset;
use super::{
    require_below_threshold, reversed, trivial_outcome, SolveError, SolveOptions, SolveOutcome,
    Strategy,
};
use crate::graph::{Dag, Edge};
use crate::reach::reach_sets;
use crate::structure::{minimal_representatives, neighborhood_classes, ClassPartition, Side};

/// `members` extended by the smallest ids of `pool` until it has `size`.
fn padded(members: &[usize], pool: &[usize], size: usize) -> Vec<usize> {
    let mut out = members.to_vec();
    out.extend(
        pool.iter()
            .filter(|v| !members.contains(v))
            .take(size.saturating_sub(members.len())),
    );
    out
}

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
    let s0 = minimal_representatives(g, Side::Source).expect("isolated-free");
    let t0 = minimal_representatives(g, Side::Sink).expect("isolated-free");

    if budget >= s0.len().max(t0.len()) {
        let n = g.vertex_count();
        let mut w = padded(&s0.members, &class.sources, budget);
        if budget <= class.sinks.len() {
            w.extend(padded(&t0.members, &class.sinks, budget));
            w.extend((0..n).filter(|&v| !class.is_source(v) && !class.is_sink(v)));
        } else {
            w.extend((0..n).filter(|&v| !class.is_source(v)));
        }
        w.sort_unstable();
        return Ok((strongly_connect_subset(g, &w), 1));
    }

    let grid = |p: ClassPartition| -> Vec<usize> {
        let mut reps: Vec<usize> = p
            .classes
            .iter()
            .flat_map(|c| c.iter().copied().take(budget))
            .collect();
        reps.sort_unstable();
        reps
    };
    let heads = grid(neighborhood_classes(g, Side::Source));
    let tails = grid(neighborhood_classes(g, Side::Sink));
    let candidates: Vec<Edge> = tails
        .iter()
        .flat_map(|&t| heads.iter().map(move |&s| (t, s)))
        .collect();
    let found = search(&reach_sets(g), &candidates, budget, opts.max_explored)?;
    Ok((found.chosen, found.explored))
}

/// Exact solver for `budget < max{|S|,|T|} + |Q|`, efficient when the
/// underlying graph has a small maximum matching.
pub fn solve_by_matching(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    if g.vertex_count() == 1 {
        return Ok(trivial_outcome(g, Strategy::Matching));
    }
    require_below_threshold(&g.classify(), budget)?;
    solve_with_isolated(g, budget, opts, Strategy::Matching, isolated_free)
}

/// How many added edges run from each sink class into each source class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassBudgetPartition {
    /// `counts[i][j]`: edges into source class `i` from sink class `j`.
    pub counts: Vec<Vec<usize>>,
}

impl ClassBudgetPartition {
    /// `None` if some edge does not run from a sink to a source.
    pub fn of_solution(g: &Dag, edges: &[Edge]) -> Option<Self> {
        let src = neighborhood_classes(g, Side::Source);
        let snk = neighborhood_classes(g, Side::Sink);
        let index = |p: &ClassPartition, v: usize| p.classes.iter().position(|c| c.contains(&v));
        let mut counts = vec![vec![0; snk.class_count()]; src.class_count()];
        for &(t, s) in edges {
            counts[index(&src, s)?][index(&snk, t)?] += 1;
        }
        Some(ClassBudgetPartition { counts })
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }
}
