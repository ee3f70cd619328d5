//! Directed graph data model: general digraphs, validated DAGs, and the
//! source/sink/isolated vertex classification.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("cycle detected through vertex {0}")]
    Cycle(usize),
}

/// Directed simple graph over vertices `0..n`.
///
/// Adjacency lists are kept sorted so that every traversal is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out[u].push(v);
            m += 1;
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u, w[0]));
            }
        }
        Ok(Digraph { out, m })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Edges in ascending `(tail, head)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (_, v) in self.edges() {
            deg[v] += 1;
        }
        deg
    }

    /// Predecessor lists, each sorted ascending.
    pub fn in_neighbor_lists(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.vertex_count()];
        for (u, v) in self.edges() {
            inn[v].push(u);
        }
        inn
    }

    pub fn transpose(&self) -> Digraph {
        let mut out = self.in_neighbor_lists();
        for list in &mut out {
            list.sort_unstable();
        }
        Digraph { out, m: self.m }
    }

    /// Returns a new graph with `extra` added. Fails if any extra edge is a
    /// self-loop, out of range, or already present.
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Digraph, GraphError> {
        Digraph::new(
            self.vertex_count(),
            self.edges().chain(extra.iter().copied()),
        )
    }

    /// Subgraph induced by `keep` (which must be sorted and distinct). Vertex
    /// `keep[i]` becomes `i` in the result.
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut out = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.out[v] {
                if index[w] != usize::MAX {
                    out[i].push(index[w]);
                    m += 1;
                }
            }
            out[i].sort_unstable();
        }
        Digraph { out, m }
    }

    /// Kahn's algorithm with a min-heap so the order is the smallest
    /// lexicographic one. Returns a vertex on a cycle on failure.
    pub fn topological_order(&self) -> Result<Vec<usize>, GraphError> {
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;

        let n = self.vertex_count();
        let mut indeg = self.in_degrees();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(GraphError::Cycle(self.vertex_on_cycle(&indeg)))
        }
    }

    // Every vertex left with positive in-degree after Kahn's algorithm has a
    // leftover predecessor; walking predecessors must revisit a vertex.
    fn vertex_on_cycle(&self, indeg: &[usize]) -> usize {
        let inn = self.in_neighbor_lists();
        let start = (0..self.vertex_count())
            .find(|&v| indeg[v] > 0)
            .expect("cycle implies a vertex with leftover in-degree");
        let mut seen = vec![false; self.vertex_count()];
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = *inn[v]
                .iter()
                .find(|&&u| indeg[u] > 0)
                .expect("leftover vertex has a leftover predecessor");
        }
        v
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A digraph known to be acyclic, with a cached topological order.
#[derive(Clone, PartialEq, Eq)]
pub struct Dag {
    graph: Digraph,
    topo: Vec<usize>,
}

impl Dag {
    pub fn new(graph: Digraph) -> Result<Self, GraphError> {
        let topo = graph.topological_order()?;
        Ok(Dag { graph, topo })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        Dag::new(Digraph::new(n, edges)?)
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.graph
    }

    pub fn into_digraph(self) -> Digraph {
        self.graph
    }

    pub fn transpose(&self) -> Dag {
        let mut topo = self.topo.clone();
        topo.reverse();
        Dag {
            graph: self.graph.transpose(),
            topo,
        }
    }

    pub fn induced(&self, keep: &[usize]) -> Dag {
        Dag::new(self.graph.induced(keep)).expect("induced subgraph of a DAG is acyclic")
    }

    /// Sources, sinks, isolated and internal vertices.
    pub fn classify(&self) -> Classification {
        Classification::of(&self.graph)
    }
}

impl Deref for Dag {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.graph
    }
}

impl fmt::Debug for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.graph.fmt(f)
    }
}

/// Partition of the vertex set by degree pattern. Every list is ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Classification {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub isolated: Vec<usize>,
    pub internal: Vec<usize>,
}

impl Classification {
    pub fn of(g: &Digraph) -> Self {
        let indeg = g.in_degrees();
        let mut c = Classification::default();
        for (v, &d) in indeg.iter().enumerate() {
            match (d, g.out_neighbors(v).len()) {
                (0, 0) => c.isolated.push(v),
                (0, _) => c.sources.push(v),
                (_, 0) => c.sinks.push(v),
                _ => c.internal.push(v),
            }
        }
        c
    }

    /// `max{|S|, |T|} + |Q|`: the smallest budget that makes a non-trivial
    /// DAG strongly connected.
    pub fn threshold(&self) -> usize {
        self.sources.len().max(self.sinks.len()) + self.isolated.len()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.sources.binary_search(&v).is_ok()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.sinks.binary_search(&v).is_ok()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.isolated.binary_search(&v).is_ok()
    }
}
