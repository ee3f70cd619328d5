//! Instance factories: the exact-cover-by-3-sets reduction, random DAGs and
//! random trees. Every generator is a pure function of its parameters and
//! seed.

use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Dag, Edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("subset {index} has {size} elements, expected 3")]
    SubsetSize { index: usize, size: usize },
    #[error("subset {index} repeats an element")]
    RepeatedElement { index: usize },
    #[error("subset {index} names element {element}, outside 0..{limit}")]
    ElementOutOfRange {
        index: usize,
        element: usize,
        limit: usize,
    },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// Exact cover by 3-sets: elements `0..3q`, triples `subsets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    pub q: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl X3cInstance {
    pub fn new<S: Into<Vec<usize>>>(q: usize, subsets: impl IntoIterator<Item = S>) -> Self {
        X3cInstance {
            q,
            subsets: subsets.into_iter().map(Into::into).collect(),
        }
    }

    pub fn element_count(&self) -> usize {
        3 * self.q
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.q == 0 {
            return Err(GenError::Infeasible("q must be at least 1".into()));
        }
        if self.subsets.len() < self.q {
            return Err(GenError::Infeasible(format!(
                "m = {} is smaller than q = {}",
                self.subsets.len(),
                self.q
            )));
        }
        let limit = self.element_count();
        for (index, s) in self.subsets.iter().enumerate() {
            if s.len() != 3 {
                return Err(GenError::SubsetSize {
                    index,
                    size: s.len(),
                });
            }
            if let Some(&element) = s.iter().find(|&&e| e >= limit) {
                return Err(GenError::ElementOutOfRange {
                    index,
                    element,
                    limit,
                });
            }
            if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
                return Err(GenError::RepeatedElement { index });
            }
        }
        Ok(())
    }

    /// Exhaustive check over all `q`-subfamilies.
    pub fn has_exact_cover(&self) -> bool {
        let universe = self.element_count();
        self.subsets.iter().combinations(self.q).any(|family| {
            let mut seen = vec![false; universe];
            family
                .iter()
                .flat_map(|s| s.iter())
                .all(|&e| !std::mem::replace(&mut seen[e], true))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Element,
    Subset,
    TreeInternal,
    Root,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Element => "element",
            Role::Subset => "subset",
            Role::TreeInternal => "tree-internal",
            Role::Root => "root",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabel {
    pub role: Role,
    pub name: String,
}

/// The reduction graph with its budget and the optimum that certifies an
/// exact cover.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Dag,
    pub budget: usize,
    pub target: u64,
    /// Indexed by vertex id.
    pub labels: Vec<VertexLabel>,
}

/// `(7q - 1)^2 + 7q(m - q)`.
pub fn x3c_target(q: usize, m: usize) -> u64 {
    let (q, m) = (q as u64, m as u64);
    (7 * q - 1).pow(2) + 7 * q * (m - q)
}

/// Builds the reduction: subset vertices point at their three elements and
/// the elements feed a binary tree whose root is the only sink.
///
/// Ids: elements `0..3q`, subsets next, then the tree's internal vertices
/// in creation order, root last. The tree pairs vertices left to right on
/// each level and carries an odd one up unchanged.
pub fn gen_x3c_instance(inst: &X3cInstance) -> Result<ReductionOutput, GenError> {
    inst.validate()?;
    let (q, m) = (inst.q, inst.subsets.len());
    let elements = inst.element_count();
    let mut labels: Vec<VertexLabel> = (0..elements)
        .map(|j| VertexLabel {
            role: Role::Element,
            name: format!("x{}", j + 1),
        })
        .chain((0..m).map(|i| VertexLabel {
            role: Role::Subset,
            name: format!("y{}", i + 1),
        }))
        .collect();
    let mut edges: Vec<Edge> = Vec::with_capacity(3 * m + 2 * (elements - 1));
    for (i, s) in inst.subsets.iter().enumerate() {
        edges.extend(s.iter().map(|&e| (elements + i, e)));
    }

    let mut level: Vec<usize> = (0..elements).collect();
    while level.len() > 1 {
        let last_round = level.len() == 2;
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        for pair in level.chunks(2) {
            if let [a, b] = *pair {
                let id = labels.len();
                labels.push(if last_round {
                    VertexLabel {
                        role: Role::Root,
                        name: "v".into(),
                    }
                } else {
                    VertexLabel {
                        role: Role::TreeInternal,
                        name: format!("v{}", id - elements - m + 1),
                    }
                });
                edges.push((a, id));
                edges.push((b, id));
                next.push(id);
            } else {
                next.push(pair[0]);
            }
        }
        level = next;
    }
    let n = labels.len();
    debug_assert_eq!(n, 6 * q - 1 + m);
    let graph =
        Dag::from_edges(n, edges).expect("tree edges point upward, subset edges into leaves");
    Ok(ReductionOutput {
        graph,
        budget: q,
        target: x3c_target(q, m),
        labels,
    })
}

/// Sidecar text, one `id role name` line per vertex.
pub fn label_sidecar(labels: &[VertexLabel]) -> String {
    labels
        .iter()
        .enumerate()
        .map(|(id, l)| format!("{id} {} {}\n", l.role, l.name))
        .collect()
}

/// A random triple drawn from elements used fewer than three times.
fn bounded_triple(rng: &mut ChaCha8Rng, uses: &mut [usize]) -> Option<Vec<usize>> {
    let open: Vec<usize> = (0..uses.len()).filter(|&e| uses[e] < 3).collect();
    if open.len() < 3 {
        return None;
    }
    let mut t: Vec<usize> = open.choose_multiple(rng, 3).copied().collect();
    t.sort_unstable();
    for &e in &t {
        uses[e] += 1;
    }
    Some(t)
}

/// Planted instance with every element in at most three subsets.
///
/// Yes-instances hide a random partition of the elements among the `m`
/// subsets. No-instances are resampled until an exhaustive check finds no
/// exact cover; `q = 1` has none since every valid triple covers.
pub fn gen_x3c_planted(
    q: usize,
    m: usize,
    yes: bool,
    seed: u64,
) -> Result<(X3cInstance, ReductionOutput), GenError> {
    if q == 0 || m < q {
        return Err(GenError::Infeasible(format!(
            "need m >= q >= 1, got q = {q}, m = {m}"
        )));
    }
    if m > 3 * q {
        return Err(GenError::Infeasible(format!(
            "m = {m} exceeds 3q = {} allowed by at most three occurrences per element",
            3 * q
        )));
    }
    if !yes && q == 1 {
        return Err(GenError::Infeasible(
            "every triple over 3 elements is a cover when q = 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let mut uses = vec![0usize; 3 * q];
        let mut subsets = Vec::with_capacity(m);
        if yes {
            let mut perm: Vec<usize> = (0..3 * q).collect();
            perm.shuffle(&mut rng);
            for chunk in perm.chunks(3) {
                let mut t = chunk.to_vec();
                t.sort_unstable();
                for &e in &t {
                    uses[e] += 1;
                }
                subsets.push(t);
            }
        }
        while subsets.len() < m {
            match bounded_triple(&mut rng, &mut uses) {
                Some(t) => subsets.push(t),
                None => break,
            }
        }
        if subsets.len() < m {
            continue;
        }
        subsets.shuffle(&mut rng);
        let inst = X3cInstance { q, subsets };
        if inst.has_exact_cover() == yes {
            let out = gen_x3c_instance(&inst)?;
            return Ok((inst, out));
        }
    }
    Err(GenError::Infeasible(format!(
        "no {} instance found for q = {q}, m = {m} after {ATTEMPTS} attempts",
        if yes { "yes" } else { "no" }
    )))
}

/// Uniformly random topological order; each forward pair becomes an edge
/// with probability `p`.
pub fn gen_random_dag(n: usize, p: f64, seed: u64) -> Dag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((order[i], order[j]));
            }
        }
    }
    Dag::from_edges(n, edges).expect("edges follow a total order")
}

/// Random arborescence rooted at 0: vertex `i` hangs below a uniform
/// vertex in `0..i`.
pub fn gen_single_source_tree(n: usize, seed: u64) -> Dag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Dag::from_edges(n.max(1), edges).expect("parent ids are smaller")
}

/// The transpose of [`gen_single_source_tree`]: one sink, edges toward 0.
pub fn gen_single_sink_tree(n: usize, seed: u64) -> Dag {
    gen_single_source_tree(n, seed).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reach::{count_pairs, reach_sets};

    #[test]
    fn reduction_shapes() {
        let out = gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1, 2]])).unwrap();
        assert_eq!(out.graph.vertex_count(), 6);
        assert_eq!(out.graph.edge_count(), 7);
        assert_eq!((out.budget, out.target), (1, 36));

        let out = gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1, 2], vec![2, 0, 1]])).unwrap();
        assert_eq!(out.graph.vertex_count(), 7);
        assert_eq!(out.target, 43);
        let c = out.graph.classify();
        assert_eq!(c.sinks, vec![6]);
        assert_eq!(c.sources, vec![3, 4]);
        assert_eq!(out.labels[6].role, Role::Root);
        assert_eq!(out.labels[5].role, Role::TreeInternal);

        assert_eq!(
            gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1]])).unwrap_err(),
            GenError::SubsetSize { index: 0, size: 2 }
        );
        assert_eq!(
            gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1, 1]])).unwrap_err(),
            GenError::RepeatedElement { index: 0 }
        );
    }

    #[test]
    fn closed_form_counts() {
        for q in 1..=4 {
            for m in q..=8 {
                let subsets: Vec<Vec<usize>> = (0..m)
                    .map(|i| (0..3).map(|j| (3 * i + j) % (3 * q)).collect())
                    .collect();
                let out = gen_x3c_instance(&X3cInstance::new(q, subsets)).unwrap();
                assert_eq!(out.graph.vertex_count(), 6 * q - 1 + m);
                assert_eq!(out.graph.edge_count(), 3 * m + 2 * (3 * q - 1));
                let c = out.graph.classify();
                assert_eq!(c.sinks, vec![out.graph.vertex_count() - 1]);
                assert_eq!(c.sources.len(), m);
                assert!(c.isolated.is_empty());
                let internal = out
                    .labels
                    .iter()
                    .filter(|l| l.role == Role::TreeInternal)
                    .count();
                assert_eq!(internal, 3 * q - 2);
            }
        }
    }

    #[test]
    fn planted_instances() {
        let (inst, out) = gen_x3c_planted(2, 3, true, 7).unwrap();
        assert!(inst.has_exact_cover());
        assert_eq!(out.graph.vertex_count(), 14);
        let (inst, _) = gen_x3c_planted(2, 2, false, 3).unwrap();
        assert!(!inst.has_exact_cover());
        assert!(gen_x3c_planted(1, 2, false, 1).is_err());
        assert!(gen_x3c_planted(2, 1, true, 1).is_err());
        let again = gen_x3c_planted(2, 4, true, 11).unwrap().0;
        assert_eq!(gen_x3c_planted(2, 4, true, 11).unwrap().0, again);
    }

    #[test]
    fn random_dags() {
        let g = gen_random_dag(5, 0.0, 9);
        assert_eq!(g.classify().isolated.len(), 5);
        let g = gen_random_dag(3, 1.0, 9);
        assert_eq!(count_pairs(&g), 6);
        assert_eq!(gen_random_dag(8, 0.4, 1), gen_random_dag(8, 0.4, 1));
    }

    #[test]
    fn trees() {
        assert_eq!(gen_single_source_tree(1, 0).classify().isolated, vec![0]);
        assert_eq!(
            gen_single_source_tree(2, 0).edges().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        let t = gen_single_source_tree(7, 5);
        assert_eq!(t.classify().sources, vec![0]);
        assert_eq!(reach_sets(&t).reach_count(0), 7);
        assert_eq!(gen_single_sink_tree(7, 5).classify().sinks, vec![0]);
    }
}
