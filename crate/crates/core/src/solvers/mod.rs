//! Exact solvers for maximum connectivity improvement: choose at most `B`
//! new edges maximizing the number of reachable ordered pairs.
//!
//! All strategies are exact; they differ in what they enumerate.
//!
//! | strategy       | enumerates                                                    |
//! |----------------|---------------------------------------------------------------|
//! | `oracle`       | every subset of non-edges of size `<= B`                      |
//! | `tarjan`       | nothing; valid once `B >= max{|S|,|T|} + |Q|`                  |
//! | `large-budget` | nothing; closed-form construction for `|V \ S| <= B <= |S|`   |
//! | `st`           | sink-to-source edge sets, per guessed isolated path           |
//! | `v-minus-b`    | sink-to-source sets when `|V| - B` is large, else constructive |
//! | `matching`     | one representative grid per neighborhood class, or constructive |

mod enumerate;
mod isolated;
mod large_budget;
mod matching;
mod oracle;
mod st;
mod tarjan;
mod v_minus_b;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Classification, Dag, Edge};
use crate::structure::{minimal_representatives, neighborhood_classes, Side, Solution};

pub use isolated::IsolatedPathPlan;
pub use large_budget::solve_large_budget;
pub use matching::{solve_by_matching, ClassBudgetPartition};
pub use oracle::brute_force;
pub use st::solve_by_st;
pub use tarjan::augment_strongly_connected;
pub use v_minus_b::solve_by_v_minus_b;

pub(crate) use enumerate::binom_sum;
pub(crate) use tarjan::eswaran_tarjan_edges;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("budget {budget} is below max{{|S|,|T|}}+|Q| = {threshold}; the graph cannot be made strongly connected")]
    BelowThreshold { budget: usize, threshold: usize },
    #[error("budget {budget} reaches max{{|S|,|T|}}+|Q| = {threshold}; the optimum is |V|^2 via strong augmentation")]
    AtThreshold { budget: usize, threshold: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance too large: {estimate} candidate sets exceed the cap of {cap}")]
    TooLarge { estimate: u64, cap: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Oracle,
    Tarjan,
    LargeBudget,
    St,
    VMinusB,
    Matching,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Oracle => "oracle",
            Strategy::Tarjan => "tarjan",
            Strategy::LargeBudget => "large-budget",
            Strategy::St => "st",
            Strategy::VMinusB => "v-minus-b",
            Strategy::Matching => "matching",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Strategy selector accepted by [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum StrategyChoice {
    #[default]
    Auto,
    Oracle,
    St,
    VMinusB,
    Matching,
}

impl FromStr for StrategyChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(StrategyChoice::Auto),
            "oracle" => Ok(StrategyChoice::Oracle),
            "st" => Ok(StrategyChoice::St),
            "v-minus-b" => Ok(StrategyChoice::VMinusB),
            "matching" => Ok(StrategyChoice::Matching),
            other => Err(format!(
                "unknown strategy {other:?} (expected auto, oracle, st, v-minus-b or matching)"
            )),
        }
    }
}

impl fmt::Display for StrategyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyChoice::Auto => "auto",
            StrategyChoice::Oracle => "oracle",
            StrategyChoice::St => "st",
            StrategyChoice::VMinusB => "v-minus-b",
            StrategyChoice::Matching => "matching",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Upper limit on candidate edge sets any single enumeration may visit.
    pub max_explored: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_explored: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub value: u64,
    pub strategy: Strategy,
    /// Edge count of the isolated-vertex path used by the best solution.
    pub guessed_k: Option<usize>,
    pub explored: u64,
}

impl SolveOutcome {
    pub(crate) fn new(
        solution: Solution,
        strategy: Strategy,
        guessed_k: Option<usize>,
        explored: u64,
    ) -> Self {
        SolveOutcome {
            value: solution.value(),
            solution,
            strategy,
            guessed_k,
            explored,
        }
    }
}

/// Best value any solution can reach: each vertex left with no incoming
/// edge loses its `n - 1` incoming pairs.
pub fn upper_bound(n: usize, class: &Classification, budget: usize) -> u64 {
    let n = n as u64;
    let q = class.isolated.len();
    let mut bound = n * n;
    for side in [class.sources.len(), class.sinks.len()] {
        if let Some(left) = (side + q).checked_sub(budget) {
            bound = bound.min(n * n - (n.saturating_sub(1)) * left as u64);
        }
    }
    bound
}

/// Shortlex order on sorted edge lists, preferring larger values.
pub(crate) fn improves(value: u64, edges: &[Edge], best: Option<(u64, &[Edge])>) -> bool {
    match best {
        None => true,
        Some((bv, be)) => value > bv || (value == bv && (edges.len(), edges) < (be.len(), be)),
    }
}

pub(crate) fn trivial_outcome(g: &Dag, strategy: Strategy) -> SolveOutcome {
    SolveOutcome::new(Solution::empty(g), strategy, None, 0)
}

pub(crate) fn require_below_threshold(
    class: &Classification,
    budget: usize,
) -> Result<(), SolveError> {
    let threshold = class.threshold();
    if budget >= threshold {
        Err(SolveError::AtThreshold { budget, threshold })
    } else {
        Ok(())
    }
}

pub(crate) fn reversed(edges: Vec<Edge>) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges.into_iter().map(|(u, v)| (v, u)).collect();
    out.sort_unstable();
    out
}

/// A-priori enumeration sizes used by the automatic dispatcher.
fn estimates(g: &Dag, budget: usize) -> Vec<(Strategy, u64)> {
    let class = g.classify();
    let (s, t, q) = (class.sources.len(), class.sinks.len(), class.isolated.len());
    let n = g.vertex_count();

    let st = st::enumeration_estimate(&class, budget);

    let branches = if q == 0 {
        1
    } else {
        1 + (s + t) as u64 + q as u64
    };
    let vmb = if q == 0 && 2 * (n - budget.min(n)) < n {
        1
    } else {
        let (s, t) = if q == 0 { (s, t) } else { (s + 1, t + 1) };
        branches.saturating_mul(binom_sum((s * t) as u64, budget))
    };

    let stripped = if q == 0 {
        g.clone()
    } else {
        let keep: Vec<usize> = (0..n).filter(|&v| !class.is_isolated(v)).collect();
        g.induced(&keep)
    };
    let matching = if stripped.edge_count() == 0 {
        1
    } else {
        let s0 = minimal_representatives(&stripped, Side::Source).map_or(s, |r| r.len());
        let t0 = minimal_representatives(&stripped, Side::Sink).map_or(t, |r| r.len());
        if q == 0 && budget >= s0.max(t0) {
            1
        } else {
            let reps = |side| -> u64 {
                neighborhood_classes(&stripped, side)
                    .classes
                    .iter()
                    .map(|c| c.len().min(budget) as u64)
                    .sum()
            };
            let (rs, rt) = (reps(Side::Source), reps(Side::Sink));
            let (rs, rt) = if q == 0 { (rs, rt) } else { (rs + 1, rt + 1) };
            branches.saturating_mul(binom_sum(rs * rt, budget))
        }
    };

    let non_edges = (n * n.saturating_sub(1) - g.edge_count()) as u64;
    let oracle = binom_sum(non_edges, budget).saturating_mul(2);
    vec![
        (Strategy::Matching, matching),
        (Strategy::VMinusB, vmb),
        (Strategy::St, st),
        (Strategy::Oracle, oracle),
    ]
}

/// Solves an instance with the requested strategy.
///
/// `Auto` applies strong augmentation at or above the threshold and
/// otherwise picks the exact strategy with the smallest estimated
/// enumeration.
pub fn solve(
    g: &Dag,
    budget: usize,
    choice: StrategyChoice,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    match choice {
        StrategyChoice::Oracle => brute_force(g, budget, opts),
        StrategyChoice::St => solve_by_st(g, budget, opts),
        StrategyChoice::VMinusB => solve_by_v_minus_b(g, budget, opts),
        StrategyChoice::Matching => solve_by_matching(g, budget, opts),
        StrategyChoice::Auto => {
            let class = g.classify();
            if budget >= class.threshold() {
                let solution = augment_strongly_connected(g, budget)?;
                return Ok(SolveOutcome::new(solution, Strategy::Tarjan, None, 0));
            }
            let est = estimates(g, budget);
            let (fpt, oracle) = est.split_at(3);
            let &(pick, cost) = fpt
                .iter()
                .min_by_key(|&&(_, c)| c)
                .expect("three candidate strategies");
            let pick = if cost > opts.max_explored && oracle[0].1 <= opts.max_explored {
                Strategy::Oracle
            } else {
                pick
            };
            match pick {
                Strategy::Matching => solve_by_matching(g, budget, opts),
                Strategy::VMinusB => solve_by_v_minus_b(g, budget, opts),
                Strategy::St => solve_by_st(g, budget, opts),
                _ => brute_force(g, budget, opts),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dag(n: usize, edges: &[(usize, usize)]) -> Dag {
        Dag::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn auto_dispatch_examples() {
        let opts = SolveOptions::default();
        let out = solve(&dag(2, &[(0, 1)]), 1, StrategyChoice::Auto, &opts).unwrap();
        assert_eq!(out.strategy, Strategy::Tarjan);
        assert_eq!(out.value, 4);
        assert_eq!(out.solution.added(), &[(1, 0)]);

        let two = dag(4, &[(0, 1), (2, 3)]);
        let out = solve(&two, 1, StrategyChoice::Auto, &opts).unwrap();
        assert_eq!(out.value, 10);

        let out = solve(&two, 0, StrategyChoice::Auto, &opts).unwrap();
        assert_eq!(out.value, 6);
        assert!(out.solution.added().is_empty());
    }

    #[test]
    fn upper_bound_formula() {
        let star = dag(4, &[(0, 3), (1, 3), (2, 3)]);
        let c = star.classify();
        assert_eq!(upper_bound(4, &c, 1), 16 - 3 * 2);
        assert_eq!(upper_bound(4, &c, 3), 16);
        let single = dag(1, &[]);
        assert_eq!(upper_bound(1, &single.classify(), 0), 1);
    }

    #[test]
    fn strategy_names_parse() {
        for name in ["auto", "oracle", "st", "v-minus-b", "matching"] {
            let c: StrategyChoice = name.parse().unwrap();
            assert_eq!(c.to_string(), name);
        }
        assert!("tarjan".parse::<StrategyChoice>().is_err());
    }
}
