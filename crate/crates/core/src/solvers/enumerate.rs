//! Subset search over a fixed candidate edge list.

use super::{improves, SolveError};
use crate::graph::Edge;
use crate::reach::ReachabilityMatrix;

/// `sum_{i <= k} C(c, i)`, saturating at `u64::MAX`.
pub(crate) fn binom_sum(c: u64, k: usize) -> u64 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for i in 0..=(k as u64).min(c) {
        if i > 0 {
            term = term * u128::from(c - i + 1) / u128::from(i);
        }
        total += term;
        if total > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    total as u64
}

pub(crate) struct SearchResult {
    pub chosen: Vec<Edge>,
    pub value: u64,
    pub explored: u64,
}

/// Best subset of `candidates` (sorted, non-edges of the base graph) of size
/// at most `max_size`. Candidates already implied by the current closure are
/// skipped: adding them changes nothing, and a shorter set with the same
/// value always exists.
pub(crate) fn search(
    base: &ReachabilityMatrix,
    candidates: &[Edge],
    max_size: usize,
    cap: u64,
) -> Result<SearchResult, SolveError> {
    debug_assert!(candidates.windows(2).all(|w| w[0] < w[1]));
    let estimate = binom_sum(candidates.len() as u64, max_size);
    if estimate > cap {
        return Err(SolveError::TooLarge { estimate, cap });
    }
    let mut state = Dfs {
        candidates,
        max_size,
        chosen: Vec::with_capacity(max_size),
        best: Vec::new(),
        best_value: base.pair_count(),
        explored: 0,
    };
    state.visit(0, base);
    Ok(SearchResult {
        chosen: state.best,
        value: state.best_value,
        explored: state.explored,
    })
}

struct Dfs<'a> {
    candidates: &'a [Edge],
    max_size: usize,
    chosen: Vec<Edge>,
    best: Vec<Edge>,
    best_value: u64,
    explored: u64,
}

impl Dfs<'_> {
    fn visit(&mut self, start: usize, reach: &ReachabilityMatrix) {
        self.explored += 1;
        let value = reach.pair_count();
        if improves(value, &self.chosen, Some((self.best_value, &self.best))) {
            self.best_value = value;
            self.best.clone_from(&self.chosen);
        }
        if self.chosen.len() == self.max_size {
            return;
        }
        for i in start..self.candidates.len() {
            let (u, v) = self.candidates[i];
            if reach.reaches(u, v) {
                continue;
            }
            let mut next = reach.clone();
            next.insert_edge(u, v);
            self.chosen.push((u, v));
            self.visit(i + 1, &next);
            self.chosen.pop();
        }
    }
}
