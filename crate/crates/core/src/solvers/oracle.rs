use itertools::Itertools;

use super::{binom_sum, improves, SolveError, SolveOptions, SolveOutcome, Strategy};
use crate::graph::{Dag, Edge};
use crate::reach::reach_sets;
use crate::structure::Solution;

/// Exhaustive reference solver: tries every set of at most `budget`
/// non-edges. No pruning and no structural assumptions, so it can serve as
/// ground truth for the other strategies.
pub fn brute_force(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    let n = g.vertex_count();
    let candidates: Vec<Edge> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !g.has_edge(u, v))
        .collect();
    let estimate = binom_sum(candidates.len() as u64, budget);
    if estimate > opts.max_explored {
        return Err(SolveError::TooLarge {
            estimate,
            cap: opts.max_explored,
        });
    }
    let base = reach_sets(g);
    let mut best: Option<(u64, Vec<Edge>)> = None;
    let mut explored = 0u64;
    for size in 0..=budget.min(candidates.len()) {
        for subset in candidates.iter().copied().combinations(size) {
            explored += 1;
            let mut m = base.clone();
            for &(u, v) in &subset {
                m.insert_edge(u, v);
            }
            let value = m.pair_count();
            if improves(
                value,
                &subset,
                best.as_ref().map(|(v, e)| (*v, e.as_slice())),
            ) {
                best = Some((value, subset));
            }
        }
    }
    let (value, edges) = best.expect("the empty set is always tried");
    let solution = Solution::evaluate(g, edges).expect("candidates are non-edges");
    debug_assert_eq!(solution.value(), value);
    Ok(SolveOutcome::new(
        solution,
        Strategy::Oracle,
        None,
        explored,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let opts = SolveOptions::default();
        let path = Dag::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let out = brute_force(&path, 1, &opts).unwrap();
        assert_eq!(out.value, 9);
        assert_eq!(out.solution.added(), &[(2, 0)]);

        let two = Dag::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_force(&two, 1, &opts).unwrap().value, 10);
        assert_eq!(brute_force(&two, 2, &opts).unwrap().value, 16);

        let lone = Dag::from_edges(1, []).unwrap();
        let out = brute_force(&lone, 3, &opts).unwrap();
        assert_eq!((out.value, out.solution.budget_used()), (1, 0));
    }

    #[test]
    fn guard_trips() {
        let g = Dag::from_edges(8, []).unwrap();
        let opts = SolveOptions { max_explored: 1000 };
        assert!(matches!(
            brute_force(&g, 4, &opts),
            Err(SolveError::TooLarge { .. })
        ));
    }
}
