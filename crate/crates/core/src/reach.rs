//! Reachability closure and the objective `f(G)`, the number of ordered
//! pairs `(v, u)` such that `u` is reachable from `v` (each vertex reaches
//! itself).

use crate::graph::Digraph;

const WORD: usize = 64;

/// Reflexive reachability relation stored as one bit row per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct ReachabilityMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl ReachabilityMatrix {
    fn identity(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        let mut bits = vec![0; n * words];
        for v in 0..n {
            bits[v * words + v / WORD] |= 1 << (v % WORD);
        }
        ReachabilityMatrix { n, words, bits }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.row(from)[to / WORD] >> (to % WORD) & 1 == 1
    }

    /// Vertices reachable from `v`, ascending.
    pub fn reach_of(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.reaches(v, u)).collect()
    }

    pub fn reach_count(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `f`: total number of reachable ordered pairs, diagonal included.
    pub fn pair_count(&self) -> u64 {
        self.bits.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Updates the closure in place for the insertion of edge `(u, v)`.
    ///
    /// Every vertex that reaches `u` gains everything `v` reaches; nothing
    /// else changes.
    pub fn insert_edge(&mut self, u: usize, v: usize) {
        if self.reaches(u, v) {
            return;
        }
        let head: Vec<u64> = self.row(v).to_vec();
        let (word, bit) = (u / WORD, 1u64 << (u % WORD));
        for x in 0..self.n {
            let start = x * self.words;
            if self.bits[start + word] & bit != 0 {
                for (dst, src) in self.bits[start..start + self.words].iter_mut().zip(&head) {
                    *dst |= *src;
                }
            }
        }
    }

    fn union_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        if dst == src {
            return;
        }
        let (d, s) = (dst * w, src * w);
        for i in 0..w {
            let val = self.bits[s + i];
            self.bits[d + i] |= val;
        }
    }
}

impl std::fmt::Debug for ReachabilityMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|v| self.reach_of(v)))
            .finish()
    }
}

/// Strongly connected components by Tarjan's algorithm (iterative).
///
/// Components come out in reverse topological order of the condensation:
/// every edge leaving a component points into one listed earlier.
pub fn strongly_connected_components(g: &Digraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    // (vertex, position in its adjacency list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let adj = g.out_neighbors(v);
            if let Some(&w) = adj.get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

/// Reachability closure of an arbitrary digraph.
///
/// Components are condensed first; closure rows are then propagated over the
/// condensation in reverse topological order so each row is built once.
pub fn reach_sets(g: &Digraph) -> ReachabilityMatrix {
    let n = g.vertex_count();
    let comps = strongly_connected_components(g);
    let mut comp_of = vec![0; n];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let mut m = ReachabilityMatrix::identity(n);
    for members in &comps {
        let rep = members[0];
        for &v in members {
            m.union_row(rep, v);
            for &w in g.out_neighbors(v) {
                // Successor components were finished earlier.
                let succ_rep = comps[comp_of[w]][0];
                m.union_row(rep, succ_rep);
            }
        }
        for &v in &members[1..] {
            m.union_row(v, rep);
        }
    }
    m
}

/// `f(G) = Σ_v |reach(v)|`.
pub fn count_pairs(g: &Digraph) -> u64 {
    reach_sets(g).pair_count()
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    strongly_connected_components(g).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn digraph(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn path_and_cycle_closures() {
        let path = digraph(3, &[(0, 1), (1, 2)]);
        let r = reach_sets(&path);
        assert_eq!(r.reach_of(0), vec![0, 1, 2]);
        assert_eq!(r.reach_of(1), vec![1, 2]);
        assert_eq!(r.reach_of(2), vec![2]);
        assert_eq!(count_pairs(&path), 6);

        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let r = reach_sets(&cycle);
        for v in 0..3 {
            assert_eq!(r.reach_of(v), vec![0, 1, 2]);
        }
        assert_eq!(count_pairs(&cycle), 9);
        assert!(is_strongly_connected(&cycle));
        assert!(!is_strongly_connected(&digraph(2, &[(0, 1)])));
        assert!(is_strongly_connected(&digraph(1, &[])));
    }

    #[test]
    fn disjoint_edges() {
        let g = digraph(4, &[(0, 1), (2, 3)]);
        let r = reach_sets(&g);
        assert_eq!(r.reach_of(0), vec![0, 1]);
        assert_eq!(r.reach_of(1), vec![1]);
        assert_eq!(r.reach_of(2), vec![2, 3]);
        assert_eq!(r.reach_of(3), vec![3]);
        assert_eq!(count_pairs(&digraph(1, &[])), 1);
    }

    #[test]
    fn wide_graph_crosses_word_boundary() {
        let n = 130;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = digraph(n, &edges);
        assert_eq!(count_pairs(&g), (n * (n + 1) / 2) as u64);
        let mut closed = edges.clone();
        closed.push((n - 1, 0));
        assert_eq!(count_pairs(&digraph(n, &closed)), (n * n) as u64);
    }

    // Floyd–Warshall over a boolean matrix; independent of the SCC route.
    #[allow(clippy::needless_range_loop)]
    fn warshall(g: &Digraph) -> Vec<Vec<bool>> {
        let n = g.vertex_count();
        let mut r = vec![vec![false; n]; n];
        for v in 0..n {
            r[v][v] = true;
        }
        for (u, v) in g.edges() {
            r[u][v] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if r[i][k] {
                    for j in 0..n {
                        if r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
        }
        r
    }

    fn arb_digraph() -> impl Strategy<Value = Digraph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::btree_set((0..n, 0..n), 0..(n * 2 + 1)).prop_map(move |set| {
                Digraph::new(n, set.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn closure_matches_warshall(g in arb_digraph()) {
            let r = reach_sets(&g);
            let w = warshall(&g);
            for (u, row) in w.iter().enumerate() {
                for (v, &expected) in row.iter().enumerate() {
                    prop_assert_eq!(r.reaches(u, v), expected);
                }
            }
            let n = g.vertex_count() as u64;
            let f = r.pair_count();
            prop_assert!(n <= f && f <= n * n);
            prop_assert_eq!(is_strongly_connected(&g), f == n * n);
            prop_assert_eq!(count_pairs(&g.transpose()), f);
        }

        #[test]
        fn incremental_insert_matches_rebuild(g in arb_digraph(), picks in proptest::collection::vec((0usize..12, 0usize..12), 1..5)) {
            let n = g.vertex_count();
            let mut m = reach_sets(&g);
            let mut edges: Vec<_> = g.edges().collect();
            for (a, b) in picks {
                let (u, v) = (a % n, b % n);
                if u == v || edges.contains(&(u, v)) {
                    continue;
                }
                let before = m.pair_count();
                m.insert_edge(u, v);
                edges.push((u, v));
                let rebuilt = reach_sets(&Digraph::new(n, edges.iter().copied()).unwrap());
                prop_assert_eq!(&m, &rebuilt);
                prop_assert!(m.pair_count() >= before);
            }
        }
    }
}
