//! Handling of isolated vertices by guessing the path they form.
//!
//! In some optimal solution the isolated vertices that get used lie on a
//! single path `q_0 -> ... -> q_k`, which can be taken to be the `k + 1`
//! smallest isolated ids. With `k >= 1` that path costs `k` edges and its
//! endpoints then behave like a source and a sink. A lone used vertex
//! (`k = 0`) is attached by one edge to a source or from a sink.

use super::{eswaran_tarjan_edges, improves, SolveError, SolveOptions, SolveOutcome, Strategy};
use crate::graph::{Dag, Edge};
use crate::structure::Solution;

/// The isolated-vertex path a solver committed to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedPathPlan {
    pub k: usize,
    pub vertices: Vec<usize>,
}

impl IsolatedPathPlan {
    /// Path over the `k + 1` smallest of `isolated` (ascending).
    pub fn canonical(isolated: &[usize], k: usize) -> Self {
        IsolatedPathPlan {
            k,
            vertices: isolated[..=k].to_vec(),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// A Q-free instance derived from one guess.
struct Branch {
    k: usize,
    fixed: Vec<Edge>,
    kept: Vec<usize>,
    budget: usize,
}

fn branches(g: &Dag, budget: usize) -> Vec<Branch> {
    let class = g.classify();
    let q = &class.isolated;
    let base: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| !class.is_isolated(v))
        .collect();
    let with = |extra: &[usize]| -> Vec<usize> {
        let mut kept = base.clone();
        kept.extend_from_slice(extra);
        kept.sort_unstable();
        kept
    };
    let mut out = vec![Branch {
        k: 0,
        fixed: Vec::new(),
        kept: base.clone(),
        budget,
    }];
    if budget >= 1 {
        let q0 = q[0];
        for &s in &class.sources {
            out.push(Branch {
                k: 0,
                fixed: vec![(q0, s)],
                kept: with(&[q0]),
                budget: budget - 1,
            });
        }
        for &t in &class.sinks {
            out.push(Branch {
                k: 0,
                fixed: vec![(t, q0)],
                kept: with(&[q0]),
                budget: budget - 1,
            });
        }
    }
    for k in 1..=budget.min(q.len() - 1) {
        let plan = IsolatedPathPlan::canonical(q, k);
        out.push(Branch {
            k,
            kept: with(&plan.vertices),
            fixed: plan.edges(),
            budget: budget - k,
        });
    }
    out
}

/// Runs `inner` on each isolated-free sub-instance below its threshold (and
/// strong augmentation on the others), then keeps the best lifted solution.
/// Returns `inner` applied directly when `g` has no isolated vertices.
pub(crate) fn solve_with_isolated<F>(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
    strategy: Strategy,
    inner: F,
) -> Result<SolveOutcome, SolveError>
where
    F: Fn(&Dag, usize, &SolveOptions) -> Result<(Vec<Edge>, u64), SolveError>,
{
    let class = g.classify();
    if class.isolated.is_empty() {
        let (edges, explored) = inner(g, budget, opts)?;
        let solution = Solution::evaluate(g, edges).expect("inner solver returns non-edges");
        return Ok(SolveOutcome::new(solution, strategy, None, explored));
    }
    let mut best: Option<(Solution, usize)> = None;
    let mut explored = 0;
    for branch in branches(g, budget) {
        let sub = Dag::new(
            g.with_edges(&branch.fixed)
                .expect("branch edges touch isolated vertices only")
                .induced(&branch.kept),
        )
        .expect("attaching a path of isolated vertices keeps the graph acyclic");
        let sub_edges = if sub.vertex_count() <= 1 {
            Vec::new()
        } else if branch.budget >= sub.classify().threshold() {
            explored += 1;
            eswaran_tarjan_edges(&sub)
        } else {
            let (edges, e) = inner(&sub, branch.budget, opts)?;
            explored += e;
            edges
        };
        let mut edges = branch.fixed.clone();
        edges.extend(
            sub_edges
                .into_iter()
                .map(|(u, v)| (branch.kept[u], branch.kept[v])),
        );
        let solution = Solution::evaluate(g, edges).expect("lifted edges are non-edges of G");
        let current = best.as_ref().map(|(s, _)| (s.value(), s.added()));
        if improves(solution.value(), solution.added(), current) {
            best = Some((solution, branch.k));
        }
    }
    let (solution, k) = best.expect("the unused-q0 branch always exists");
    Ok(SolveOutcome::new(solution, strategy, Some(k), explored))
}
