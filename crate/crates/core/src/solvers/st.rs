//! Enumeration over sink-to-source edge sets, with `O((|S||T|)^B)` candidate
//! sets per guessed isolated path.

use super::enumerate::search;
use super::{
    binom_sum, improves, require_below_threshold, trivial_outcome, IsolatedPathPlan, SolveError,
    SolveOptions, SolveOutcome, Strategy,
};
use crate::graph::{Classification, Dag, Edge};
use crate::reach::reach_sets;
use crate::structure::Solution;

/// Candidate tails and heads once the path over `q_0..=q_k` is fixed.
/// Isolated vertices beyond the path may only appear as heads, and at most
/// `budget - k` of them can be used, so only that many are offered.
fn endpoints(class: &Classification, budget: usize, k: Option<usize>) -> (Vec<usize>, Vec<usize>) {
    let mut tails = class.sinks.clone();
    let mut heads = class.sources.clone();
    if let Some(k) = k {
        let q = &class.isolated;
        tails.push(q[k]);
        heads.push(q[0]);
        let extra = (budget - k).min(q.len() - k - 1);
        heads.extend_from_slice(&q[k + 1..k + 1 + extra]);
    }
    tails.sort_unstable();
    heads.sort_unstable();
    (tails, heads)
}

fn candidates(tails: &[usize], heads: &[usize]) -> Vec<Edge> {
    tails
        .iter()
        .flat_map(|&t| heads.iter().map(move |&s| (t, s)))
        .filter(|&(t, s)| t != s)
        .collect()
}

fn guesses(class: &Classification, budget: usize) -> Vec<Option<usize>> {
    if class.isolated.is_empty() {
        vec![None]
    } else {
        (0..=budget.min(class.isolated.len() - 1))
            .map(Some)
            .collect()
    }
}

pub(crate) fn enumeration_estimate(class: &Classification, budget: usize) -> u64 {
    guesses(class, budget)
        .into_iter()
        .map(|k| {
            let (tails, heads) = endpoints(class, budget, k);
            let c = candidates(&tails, &heads).len() as u64;
            binom_sum(c, budget - k.unwrap_or(0))
        })
        .fold(0u64, u64::saturating_add)
}

/// Exact solver enumerating sink-to-source additions. Requires
/// `budget < max{|S|,|T|} + |Q|`.
pub fn solve_by_st(
    g: &Dag,
    budget: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    if g.vertex_count() == 1 {
        return Ok(trivial_outcome(g, Strategy::St));
    }
    let class = g.classify();
    require_below_threshold(&class, budget)?;
    let mut best: Option<(Solution, Option<usize>)> = None;
    let mut explored = 0;
    for k in guesses(&class, budget) {
        let path = k.map_or_else(Vec::new, |k| {
            IsolatedPathPlan::canonical(&class.isolated, k).edges()
        });
        let based = g.with_edges(&path).expect("path joins isolated vertices");
        let (tails, heads) = endpoints(&class, budget, k);
        let found = search(
            &reach_sets(&based),
            &candidates(&tails, &heads),
            budget - path.len(),
            opts.max_explored,
        )?;
        explored += found.explored;
        let mut edges = path;
        edges.extend(found.chosen);
        let solution = Solution::evaluate(g, edges).expect("candidates are non-edges");
        debug_assert_eq!(solution.value(), found.value);
        let current = best.as_ref().map(|(s, _)| (s.value(), s.added()));
        if improves(solution.value(), solution.added(), current) {
            best = Some((solution, k));
        }
    }
    let (solution, k) = best.expect("at least one guess");
    Ok(SolveOutcome::new(solution, Strategy::St, k, explored))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::brute_force;

    #[test]
    fn matches_oracle_on_examples() {
        let opts = SolveOptions::default();
        let cases: Vec<(usize, Vec<Edge>, usize)> = vec![
            (4, vec![(0, 1), (2, 3)], 1),
            (4, vec![(0, 3), (1, 3), (2, 3)], 2),
            (5, vec![(0, 1)], 2),
            (4, vec![], 2),
            (6, vec![(0, 2), (1, 2), (2, 3)], 2),
        ];
        for (n, edges, b) in cases {
            let g = Dag::from_edges(n, edges).unwrap();
            let st = solve_by_st(&g, b, &opts).unwrap();
            let oracle = brute_force(&g, b, &opts).unwrap();
            assert_eq!(st.value, oracle.value, "{g:?} B={b}");
        }
    }

    #[test]
    fn rejects_budget_at_threshold() {
        let g = Dag::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            solve_by_st(&g, 1, &SolveOptions::default()),
            Err(SolveError::AtThreshold {
                budget: 1,
                threshold: 1
            })
        );
        let lone = Dag::from_edges(1, []).unwrap();
        assert_eq!(
            solve_by_st(&lone, 5, &SolveOptions::default())
                .unwrap()
                .value,
            1
        );
    }
}
