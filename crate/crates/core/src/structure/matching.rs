//! Maximum matching on the underlying undirected graph (Edmonds' blossom
//! algorithm) and the neighborhood-class bound check built on it.

use std::collections::{BTreeSet, VecDeque};

use super::StructureError;
use crate::graph::{Digraph, Edge};

const NONE: usize = usize::MAX;

fn undirected_adjacency(g: &Digraph) -> Vec<Vec<usize>> {
    let mut adj = vec![BTreeSet::new(); g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj.into_iter().map(|s| s.into_iter().collect()).collect()
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_ancestor(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.adj.len() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// A maximum matching of the underlying undirected simple graph, as edges
/// `(a, b)` with `a < b`, ascending.
pub fn maximum_matching(g: &Digraph) -> Vec<Edge> {
    let adj = undirected_adjacency(g);
    let mate = Blossom::new(&adj).run();
    let matching: Vec<Edge> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| (v, w))
        .collect();
    if cfg!(debug_assertions) && g.edge_count() < 16 {
        debug_assert_eq!(matching.len(), exhaustive_matching_number(g));
    }
    matching
}

/// Matching number ν of the underlying undirected graph.
pub fn max_matching(g: &Digraph) -> usize {
    maximum_matching(g).len()
}

// Self-check for small graphs: best vertex-disjoint subset of edges.
fn exhaustive_matching_number(g: &Digraph) -> usize {
    let edges: Vec<Edge> = g.edges().collect();
    fn go(edges: &[Edge], used: &mut Vec<bool>) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(rest, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    go(&edges, &mut vec![false; g.vertex_count()])
}

/// Checks `|X| <= ν(H) + 2^ν(H)` for a bipartite graph `H` whose X-side
/// vertices (`x_side[v] == true`) have pairwise distinct neighborhoods.
pub fn verify_class_bound(h: &Digraph, x_side: &[bool]) -> Result<bool, StructureError> {
    if x_side.len() != h.vertex_count() {
        return Err(StructureError::LabelMismatch {
            labels: x_side.len(),
            vertices: h.vertex_count(),
        });
    }
    if let Some((u, v)) = h.edges().find(|&(u, v)| x_side[u] == x_side[v]) {
        return Err(StructureError::NotBipartite(u, v));
    }
    let adj = undirected_adjacency(h);
    let xs: Vec<usize> = (0..h.vertex_count()).filter(|&v| x_side[v]).collect();
    let mut seen: Vec<(&[usize], usize)> = Vec::with_capacity(xs.len());
    for &x in &xs {
        if let Some(&(_, prev)) = seen.iter().find(|(nb, _)| *nb == adj[x].as_slice()) {
            return Err(StructureError::DuplicateNeighborhood(prev, x));
        }
        seen.push((&adj[x], x));
    }
    let nu = max_matching(h);
    let bound = 1usize
        .checked_shl(nu as u32)
        .map_or(usize::MAX, |p| p.saturating_add(nu));
    Ok(xs.len() <= bound)
}
