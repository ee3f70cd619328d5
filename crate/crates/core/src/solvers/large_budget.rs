//! Closed-form optimum when the budget covers every non-source vertex.
//!
//! With `|V \ S| <= B <= |S|` and no isolated vertices, pick `B` sources
//! that together reach all of `V \ S` and strongly connect them with
//! `V \ S`. Every vertex then reaches everything except the `|S| - B`
//! unpicked sources, giving `n^2 - (n - 1)(|S| - B)`, which matches the
//! upper bound.

use super::{eswaran_tarjan_edges, reversed, SolveError, SolveOutcome, Strategy};
use crate::graph::{Dag, Edge};
use crate::reach::reach_sets;
use crate::structure::Solution;

/// Strong-augmentation edges for `G[W]`, in the ids of `g`.
pub(crate) fn strongly_connect_subset(g: &Dag, w: &[usize]) -> Vec<Edge> {
    let sub = g.induced(w);
    let mut edges: Vec<Edge> = eswaran_tarjan_edges(&sub)
        .into_iter()
        .map(|(u, v)| (w[u], w[v]))
        .collect();
    edges.sort_unstable();
    edges
}

/// Construction for an isolated-free `g` with `|S| >= |T|` and
/// `|V \ S| <= budget <= |S|`.
pub(crate) fn large_budget_edges(g: &Dag, budget: usize) -> Vec<Edge> {
    let class = g.classify();
    let reach = reach_sets(g);
    let mut picked: Vec<usize> = Vec::with_capacity(budget);
    for z in (0..g.vertex_count()).filter(|&z| !class.is_source(z)) {
        if picked.iter().any(|&s| reach.reaches(s, z)) {
            continue;
        }
        let s = *class
            .sources
            .iter()
            .find(|&&s| reach.reaches(s, z))
            .expect("every non-source vertex is reached by a source");
        picked.push(s);
    }
    for &s in &class.sources {
        if picked.len() >= budget {
            break;
        }
        if !picked.contains(&s) {
            picked.push(s);
        }
    }
    debug_assert!(picked.len() <= budget);
    let mut w: Vec<usize> = picked;
    w.extend((0..g.vertex_count()).filter(|&z| !class.is_source(z)));
    w.sort_unstable();
    strongly_connect_subset(g, &w)
}

/// Optimal solution for graphs without isolated vertices when
/// `|V \ S| <= budget <= |S|` (or the same with sinks, via the transpose).
pub fn solve_large_budget(g: &Dag, budget: usize) -> Result<SolveOutcome, SolveError> {
    let class = g.classify();
    if !class.isolated.is_empty() {
        return Err(SolveError::Precondition(format!(
            "graph has {} isolated vertices",
            class.isolated.len()
        )));
    }
    let n = g.vertex_count();
    let transposed = class.sinks.len() > class.sources.len();
    let side = class.sources.len().max(class.sinks.len());
    if budget < n - side || budget > side {
        return Err(SolveError::Precondition(format!(
            "need |V| - {side} <= B <= {side} for the larger of |S|, |T|, got B = {budget}"
        )));
    }
    let edges = if transposed {
        reversed(large_budget_edges(&g.transpose(), budget))
    } else {
        large_budget_edges(g, budget)
    };
    let solution = Solution::evaluate(g, edges).expect("construction adds non-edges");
    Ok(SolveOutcome::new(solution, Strategy::LargeBudget, None, 1))
}
