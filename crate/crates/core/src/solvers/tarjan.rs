//! Strong-connectivity augmentation of a DAG with exactly
//! `max{|S|, |T|} + |Q|` edges.

use super::{reversed, SolveError};
use crate::graph::{Dag, Edge};
use crate::structure::Solution;

/// Greedy source-to-sink pairing: each source, in ascending order, runs a
/// DFS over not-yet-visited vertices and claims the first sink it meets.
/// Marks persist across searches, so the claimed paths are vertex-disjoint
/// and every sink is reachable from some paired source.
fn pair_sources_with_sinks(g: &Dag, sources: &[usize]) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut marked = vec![false; n];
    let mut pairs = Vec::new();
    for &s in sources {
        marked[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let out = g.out_neighbors(v);
            if out.is_empty() {
                pairs.push((s, v));
                break;
            }
            match out[*next..].iter().position(|&w| !marked[w]) {
                Some(off) => {
                    let w = out[*next + off];
                    *next += off + 1;
                    marked[w] = true;
                    stack.push((w, 0));
                }
                None => {
                    stack.pop();
                }
            }
        }
    }
    pairs
}

/// Edges making `g` strongly connected, exactly `max{|S|,|T|} + |Q|` of
/// them for `n >= 2` and none for `n = 1`.
pub(crate) fn eswaran_tarjan_edges(g: &Dag) -> Vec<Edge> {
    let class = g.classify();
    if g.vertex_count() <= 1 {
        return Vec::new();
    }
    if class.sources.len() > class.sinks.len() {
        return reversed(eswaran_tarjan_edges(&g.transpose()));
    }
    let q = &class.isolated;
    let mut edges = Vec::with_capacity(class.threshold());
    if class.sources.is_empty() {
        for (i, &a) in q.iter().enumerate() {
            edges.push((a, q[(i + 1) % q.len()]));
        }
        edges.sort_unstable();
        return edges;
    }

    // Matched pairs first, then the unmatched sources and sinks ascending.
    let pairs = pair_sources_with_sinks(g, &class.sources);
    let p = pairs.len();
    let mut vs: Vec<usize> = pairs.iter().map(|&(s, _)| s).collect();
    let mut ws: Vec<usize> = pairs.iter().map(|&(_, t)| t).collect();
    vs.extend(
        class
            .sources
            .iter()
            .filter(|s| !pairs.iter().any(|(ps, _)| ps == *s)),
    );
    ws.extend(
        class
            .sinks
            .iter()
            .filter(|t| !pairs.iter().any(|(_, pt)| pt == *t)),
    );

    // Chain the matched pairs into one cycle, hang each remaining source
    // below a remaining sink, and thread the leftover sinks and isolated
    // vertices into the cycle's closing edge.
    for i in 0..p - 1 {
        edges.push((ws[i], vs[i + 1]));
    }
    for i in p..vs.len() {
        edges.push((ws[i], vs[i]));
    }
    let mut prev = ws[p - 1];
    for &x in ws[vs.len()..]
        .iter()
        .chain(q)
        .chain(std::iter::once(&vs[0]))
    {
        edges.push((prev, x));
        prev = x;
    }
    edges.sort_unstable();
    debug_assert_eq!(edges.len(), class.threshold());
    edges
}

/// Makes `g` strongly connected, reaching `f = n^2`, provided
/// `budget >= max{|S|,|T|} + |Q|`. A single vertex needs no edges.
pub fn augment_strongly_connected(g: &Dag, budget: usize) -> Result<Solution, SolveError> {
    if g.vertex_count() > 1 {
        let threshold = g.classify().threshold();
        if budget < threshold {
            return Err(SolveError::BelowThreshold { budget, threshold });
        }
    }
    Ok(Solution::evaluate(g, eswaran_tarjan_edges(g)).expect("augmenting edges are non-edges"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reach::is_strongly_connected;

    fn dag(n: usize, edges: &[(usize, usize)]) -> Dag {
        Dag::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn check(g: &Dag) {
        let sol = augment_strongly_connected(g, g.classify().threshold()).unwrap();
        let n = g.vertex_count() as u64;
        assert_eq!(sol.value(), n * n, "{g:?}");
        assert!(is_strongly_connected(&sol.augmented(g)));
        if n > 1 {
            assert_eq!(sol.budget_used(), g.classify().threshold());
        }
    }

    #[test]
    fn examples() {
        let sol = augment_strongly_connected(&dag(2, &[(0, 1)]), 1).unwrap();
        assert_eq!(sol.added(), &[(1, 0)]);
        assert_eq!(sol.value(), 4);

        let star = dag(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(
            augment_strongly_connected(&star, 2),
            Err(SolveError::BelowThreshold {
                budget: 2,
                threshold: 3
            })
        );
        check(&star);
        check(&dag(4, &[(0, 1), (2, 3)]));
        check(&dag(3, &[]));
        check(&dag(5, &[(0, 1)]));
        check(&dag(6, &[(0, 3), (0, 4), (1, 4), (2, 5), (1, 5)]));
        check(&dag(7, &[(0, 1), (1, 2), (0, 3), (4, 2), (4, 5)]));

        let lone = augment_strongly_connected(&dag(1, &[]), 0).unwrap();
        assert_eq!((lone.value(), lone.budget_used()), (1, 0));
    }

    #[test]
    fn random_dags_become_strongly_connected() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.3))
                .collect();
            check(&dag(n, &edges));
        }
    }
}
