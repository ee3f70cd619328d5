use thiserror::Error;

use crate::graph::{Dag, Digraph, Edge};
use crate::reach::{count_pairs, reach_sets};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("added edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("added edge ({0}, {1}) has an endpoint outside the graph")]
    OutOfRange(usize, usize),
    #[error("added edge ({0}, {1}) duplicates existing edge")]
    DuplicatesExisting(usize, usize),
    #[error("added edge ({0}, {1}) is listed twice")]
    Repeated(usize, usize),
}

/// A set of added edges together with the objective value of the augmented
/// graph. Edges are kept in ascending `(tail, head)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    added: Vec<Edge>,
    value: u64,
}

impl Solution {
    /// Validates `edges` against `g` and computes `f(G(N))`.
    pub fn evaluate(g: &Digraph, mut edges: Vec<Edge>) -> Result<Self, SolutionError> {
        let n = g.vertex_count();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(SolutionError::OutOfRange(u, v));
            }
            if u == v {
                return Err(SolutionError::SelfLoop(u, v));
            }
            if g.has_edge(u, v) {
                return Err(SolutionError::DuplicatesExisting(u, v));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(SolutionError::Repeated(w[0].0, w[0].1));
        }
        let augmented = g.with_edges(&edges).expect("edges validated above");
        let value = count_pairs(&augmented);
        Ok(Solution {
            added: edges,
            value,
        })
    }

    pub fn empty(g: &Digraph) -> Self {
        Solution {
            added: Vec::new(),
            value: count_pairs(g),
        }
    }

    pub fn added(&self) -> &[Edge] {
        &self.added
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn budget_used(&self) -> usize {
        self.added.len()
    }

    pub fn augmented(&self, g: &Digraph) -> Digraph {
        g.with_edges(&self.added)
            .expect("solution edges were validated against this graph")
    }
}

/// Rewrites every added edge to run from a sink or isolated vertex to a
/// source or isolated vertex.
///
/// A tail outside `T ∪ Q` is replaced by the smallest sink it reaches, a
/// head outside `S ∪ Q` by the smallest source reaching it. The original
/// edge is then implied by a path through the rewritten one, so the value
/// never drops. A rewrite that repeats an edge already kept is dropped.
pub fn normalize_solution(g: &Dag, sol: &Solution) -> Solution {
    let class = g.classify();
    let reach = reach_sets(g);
    let mut out: Vec<Edge> = Vec::with_capacity(sol.budget_used());
    for &(u, v) in sol.added() {
        let tail = if class.is_sink(u) || class.is_isolated(u) {
            u
        } else {
            *class
                .sinks
                .iter()
                .find(|&&t| reach.reaches(u, t))
                .expect("a non-sink vertex of a DAG reaches some sink")
        };
        let head = if class.is_source(v) || class.is_isolated(v) {
            v
        } else {
            *class
                .sources
                .iter()
                .find(|&&s| reach.reaches(s, v))
                .expect("a vertex with an in-edge is reached by some source")
        };
        if !out.contains(&(tail, head)) {
            out.push((tail, head));
        }
    }
    Solution::evaluate(g, out).expect("sink/isolated tails have no out-edges in G")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dag(n: usize, edges: &[(usize, usize)]) -> Dag {
        Dag::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn evaluate_validates() {
        let g = dag(3, &[(0, 1), (1, 2)]);
        assert_eq!(Solution::evaluate(&g, vec![(2, 0)]).unwrap().value(), 9);
        assert_eq!(
            Solution::evaluate(&g, vec![(0, 1)]),
            Err(SolutionError::DuplicatesExisting(0, 1))
        );
        assert_eq!(
            Solution::evaluate(&g, vec![(2, 0), (2, 0)]),
            Err(SolutionError::Repeated(2, 0))
        );
        assert_eq!(
            Solution::evaluate(&g, vec![(1, 1)]),
            Err(SolutionError::SelfLoop(1, 1))
        );
        assert_eq!(
            Solution::evaluate(&g, vec![(1, 7)]),
            Err(SolutionError::OutOfRange(1, 7))
        );
        let s = Solution::evaluate(&g, vec![(2, 1), (2, 0)]).unwrap();
        assert_eq!(s.added(), &[(2, 0), (2, 1)]);
    }

    #[test]
    fn normalize_fixed_point() {
        let g = dag(4, &[(0, 1), (2, 3)]);
        let s = Solution::evaluate(&g, vec![(1, 2)]).unwrap();
        assert_eq!(normalize_solution(&g, &s), s);
    }

    #[test]
    fn normalize_rewrites_internal_tail() {
        let g = dag(3, &[(0, 1), (1, 2)]);
        let s = Solution::evaluate(&g, vec![(1, 0)]).unwrap();
        assert_eq!(s.value(), 7);
        let norm = normalize_solution(&g, &s);
        assert_eq!(norm.added(), &[(2, 0)]);
        assert_eq!(norm.value(), 9);
    }

    #[test]
    fn normalize_drops_collisions() {
        // Source 0 rewrites to its sink 1, colliding with the kept (1, 2).
        let g = dag(3, &[(0, 1)]);
        let s = Solution::evaluate(&g, vec![(0, 2), (1, 2)]).unwrap();
        let norm = normalize_solution(&g, &s);
        assert_eq!(norm.added(), &[(1, 2)]);
        assert!(norm.value() >= s.value());
    }
}
