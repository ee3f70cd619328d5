//! Structural analyses used by the parameterized solvers.

mod matching;
mod solution;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Dag;
use crate::reach::reach_sets;

pub use matching::{max_matching, maximum_matching, verify_class_bound};
pub use solution::{normalize_solution, Solution, SolutionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph has {0} isolated vertices; strip them first")]
    HasIsolated(usize),
    #[error("side labels cover {labels} vertices but the graph has {vertices}")]
    LabelMismatch { labels: usize, vertices: usize },
    #[error("edge ({0}, {1}) joins two vertices on the same side")]
    NotBipartite(usize, usize),
    #[error("X-side vertices {0} and {1} have the same neighborhood")]
    DuplicateNeighborhood(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Sink,
}

/// Inclusion-minimal set of sources from which every non-source vertex is
/// reachable (or of sinks reachable from every non-sink vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeSet {
    pub side: Side,
    pub members: Vec<usize>,
}

impl RepresentativeSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Greedy inclusion-minimal representatives: start from every source (sink)
/// and drop candidates in ascending id order while coverage still holds.
///
/// Sources are only reachable from themselves, so coverage is required of
/// the non-source vertices (non-sink vertices on the sink side).
pub fn minimal_representatives(g: &Dag, side: Side) -> Result<RepresentativeSet, StructureError> {
    let class = g.classify();
    if !class.isolated.is_empty() {
        return Err(StructureError::HasIsolated(class.isolated.len()));
    }
    let oriented;
    let (graph, candidates, excluded) = match side {
        Side::Source => (g, &class.sources, &class.sources),
        Side::Sink => {
            oriented = g.transpose();
            (&oriented, &class.sinks, &class.sinks)
        }
    };
    let reach = reach_sets(graph);
    let n = graph.vertex_count();
    let mut is_target = vec![true; n];
    for &v in excluded {
        is_target[v] = false;
    }
    let mut cover = vec![0usize; n];
    for &c in candidates {
        for z in reach.reach_of(c) {
            cover[z] += 1;
        }
    }
    let mut members = Vec::new();
    for &c in candidates {
        let reached = reach.reach_of(c);
        let removable = reached.iter().all(|&z| !is_target[z] || cover[z] >= 2);
        if removable {
            for z in reached {
                cover[z] -= 1;
            }
        } else {
            members.push(c);
        }
    }
    Ok(RepresentativeSet { side, members })
}

/// Sources grouped by identical out-neighborhood (sinks by in-neighborhood).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub side: Side,
    /// Each class ascending; classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl ClassPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

pub fn neighborhood_classes(g: &Dag, side: Side) -> ClassPartition {
    let class = g.classify();
    let (members, lists) = match side {
        Side::Source => (&class.sources, None),
        Side::Sink => (&class.sinks, Some(g.in_neighbor_lists())),
    };
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for &v in members {
        let nb = lists
            .as_ref()
            .map_or(g.out_neighbors(v), |l| l[v].as_slice());
        groups.entry(nb).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    ClassPartition { side, classes }
}
