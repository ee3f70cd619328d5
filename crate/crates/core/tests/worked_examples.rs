//! Small worked instances for every solver and structural routine. Derived
//! optima come from the naive oracle below, which shares no code with the
//! library: plain DFS reachability and recursive subset enumeration.

use mci::generators::{gen_random_dag, gen_x3c_instance, gen_x3c_planted, X3cInstance};
use mci::reach::is_strongly_connected;
use mci::structure::{max_matching, minimal_representatives, neighborhood_classes, Side};
use mci::{
    augment_strongly_connected, brute_force, solve, solve_by_matching, solve_by_st,
    solve_by_v_minus_b, solve_large_budget, Dag, Edge, SolveError, SolveOptions, Strategy,
    StrategyChoice,
};
use proptest::prelude::*;

fn naive_f(n: usize, edges: &[Edge]) -> u64 {
    let mut total = 0;
    for start in 0..n {
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        total += seen.iter().filter(|&&s| s).count() as u64;
    }
    total
}

fn naive_opt(n: usize, edges: &[Edge], budget: usize) -> u64 {
    let candidates: Vec<Edge> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !edges.contains(&(u, v)))
        .collect();
    fn go(i: usize, left: usize, cands: &[Edge], current: &mut Vec<Edge>, n: usize) -> u64 {
        let here = naive_f(n, current);
        if left == 0 || i == cands.len() {
            return here;
        }
        let skip = go(i + 1, left, cands, current, n);
        current.push(cands[i]);
        let take = go(i + 1, left - 1, cands, current, n);
        current.pop();
        skip.max(take)
    }
    let mut current = edges.to_vec();
    go(0, budget, &candidates, &mut current, n)
}

fn dag(n: usize, edges: &[Edge]) -> Dag {
    Dag::from_edges(n, edges.iter().copied()).unwrap()
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

const TWO: [Edge; 2] = [(0, 1), (2, 3)];
const STAR: [Edge; 3] = [(0, 3), (1, 3), (2, 3)];

#[test]
fn oracle_examples() {
    let g = dag(4, &TWO);
    assert_eq!(naive_opt(4, &TWO, 1), 10);
    assert_eq!(brute_force(&g, 1, &opts()).unwrap().value, 10);
    let zero = brute_force(&g, 0, &opts()).unwrap();
    assert_eq!(
        (zero.value, zero.solution.budget_used()),
        (naive_f(4, &TWO), 0)
    );

    let red = gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1, 2], vec![0, 1, 2]])).unwrap();
    let out = brute_force(&red.graph, 1, &opts()).unwrap();
    assert_eq!(out.value, 43);
    assert_eq!(red.target, 43);
}

#[test]
fn augmentation_examples() {
    let sol = augment_strongly_connected(&dag(2, &[(0, 1)]), 1).unwrap();
    assert_eq!((sol.added(), sol.value()), (&[(1, 0)][..], 4));

    let g = dag(4, &TWO);
    let sol = augment_strongly_connected(&g, 2).unwrap();
    assert_eq!((sol.budget_used(), sol.value()), (2, 16));
    assert!(is_strongly_connected(&sol.augmented(&g)));
    assert_eq!(
        augment_strongly_connected(&g, 1),
        Err(SolveError::BelowThreshold {
            budget: 1,
            threshold: 2
        })
    );
}

#[test]
fn large_budget_examples() {
    let g = dag(4, &STAR);
    for (b, expected) in [(1, 10), (2, 13)] {
        assert_eq!(naive_opt(4, &STAR, b), expected);
        assert_eq!(solve_large_budget(&g, b).unwrap().value, expected);
    }
    // B = |S| is the strong-connectivity threshold itself.
    assert_eq!(g.classify().threshold(), 3);
    assert_eq!(
        solve(&g, 3, StrategyChoice::Auto, &opts()).unwrap().value,
        16
    );
}

#[test]
fn st_examples() {
    assert_eq!(solve_by_st(&dag(4, &TWO), 1, &opts()).unwrap().value, 10);

    let path_plus = [(0, 1), (1, 2)];
    let g = dag(4, &path_plus);
    let out = solve_by_st(&g, 1, &opts()).unwrap();
    assert_eq!(out.value, naive_opt(4, &path_plus, 1));
    assert_eq!(out.guessed_k, Some(0));

    let lone = solve_by_st(&dag(1, &[]), 4, &opts()).unwrap();
    assert_eq!((lone.value, lone.solution.budget_used()), (1, 0));
}

#[test]
fn v_minus_b_examples() {
    assert_eq!(
        solve_by_v_minus_b(&dag(4, &TWO), 1, &opts()).unwrap().value,
        10
    );
    assert_eq!(
        solve_by_v_minus_b(&dag(4, &STAR), 2, &opts())
            .unwrap()
            .value,
        13
    );

    // Six sources into one sink, B = 4 > n/2: the closed-form branch.
    let fan: Vec<Edge> = (0..6).map(|s| (s, 6)).collect();
    let g = dag(7, &fan);
    let out = solve_by_v_minus_b(&g, 4, &opts()).unwrap();
    assert_eq!(out.value, 49 - 6 * (6 - 4));
    assert_eq!(out.value, brute_force(&g, 4, &opts()).unwrap().value);
    assert_eq!(out.explored, 1);
}

#[test]
fn matching_examples() {
    let out = solve_by_matching(&dag(4, &TWO), 1, &opts()).unwrap();
    assert_eq!(out.value, 10);

    let g = dag(4, &STAR);
    assert_eq!(
        neighborhood_classes(&g, Side::Source).classes,
        vec![vec![0, 1, 2]]
    );
    assert_eq!(neighborhood_classes(&g, Side::Sink).classes, vec![vec![3]]);
    assert_eq!(solve_by_matching(&g, 1, &opts()).unwrap().value, 10);

    // Complete bipartite 3 x 3: one vertex on each side covers the other
    // side, so B = 2 takes the constructive branch. Two sources and two
    // sinks are left over; the leftover sinks are still reached by every
    // non-sink and the leftover sources still reach every non-source, so
    // the optimum is (n - 1)^2 + 2 = 27.
    let k33: Vec<Edge> = (0..3).flat_map(|s| (3..6).map(move |t| (s, t))).collect();
    let g = dag(6, &k33);
    assert_eq!(minimal_representatives(&g, Side::Source).unwrap().len(), 1);
    assert_eq!(minimal_representatives(&g, Side::Sink).unwrap().len(), 1);
    let expected = naive_opt(6, &k33, 2);
    assert_eq!(expected, 27);
    let out = solve_by_matching(&g, 2, &opts()).unwrap();
    assert_eq!(out.value, expected);
    assert_eq!(out.explored, 1);
}

#[test]
fn dispatcher_examples() {
    let out = solve(&dag(2, &[(0, 1)]), 1, StrategyChoice::Auto, &opts()).unwrap();
    assert_eq!((out.strategy, out.value), (Strategy::Tarjan, 4));
    let out = solve(&dag(4, &TWO), 1, StrategyChoice::Auto, &opts()).unwrap();
    assert_eq!(out.value, 10);
    let g = gen_random_dag(7, 0.3, 11);
    let out = solve(&g, 0, StrategyChoice::Auto, &opts()).unwrap();
    assert_eq!(
        (out.value, out.solution.budget_used()),
        (naive_f(7, &g.edges().collect::<Vec<_>>()), 0)
    );
}

#[test]
fn representative_examples() {
    let rep = |n, e: &[Edge]| {
        minimal_representatives(&dag(n, e), Side::Source)
            .unwrap()
            .members
    };
    assert_eq!(rep(3, &[(0, 1), (1, 2)]), vec![0]);
    assert_eq!(rep(4, &TWO), vec![0, 2]);
    // Greedy removal in ascending order keeps the last source.
    assert_eq!(rep(4, &STAR), vec![2]);
}

#[test]
fn x3c_examples() {
    let red = gen_x3c_instance(&X3cInstance::new(1, [vec![0, 1, 2], vec![0, 1, 2]])).unwrap();
    let c = red.graph.classify();
    assert_eq!(c.sinks, vec![6]);
    assert_eq!(c.sources, vec![3, 4]);
    assert_eq!(
        neighborhood_classes(&red.graph, Side::Source).classes,
        vec![vec![3, 4]]
    );

    let (_, red) = gen_x3c_planted(2, 3, true, 7).unwrap();
    assert_eq!(
        brute_force(&red.graph, red.budget, &opts()).unwrap().value,
        red.target
    );
    let (_, red) = gen_x3c_planted(2, 2, false, 3).unwrap();
    assert!(brute_force(&red.graph, red.budget, &opts()).unwrap().value < red.target);
}

fn exhaustive_nu(edges: &[Edge], used: &mut [bool]) -> usize {
    let Some((&(u, v), rest)) = edges.split_first() else {
        return 0;
    };
    let skip = exhaustive_nu(rest, used);
    if used[u] || used[v] {
        return skip;
    }
    used[u] = true;
    used[v] = true;
    let take = 1 + exhaustive_nu(rest, used);
    used[u] = false;
    used[v] = false;
    skip.max(take)
}

#[test]
fn matching_number_matches_exhaustive() {
    assert_eq!(max_matching(&dag(3, &[(0, 1), (1, 2)])), 1);
    assert_eq!(max_matching(&dag(4, &TWO)), 2);
    for seed in 0..10 {
        let n = 4 + seed as usize % 7;
        let g = gen_random_dag(n, 0.3, seed);
        let edges: Vec<Edge> = g.edges().collect();
        assert_eq!(
            max_matching(&g),
            exhaustive_nu(&edges, &mut vec![false; n]),
            "{g:?}"
        );
    }
}

/// Inclusion-minimal: the set covers every non-source, and no single member
/// can be dropped.
fn covers(g: &Dag, set: &[usize]) -> bool {
    let edges: Vec<Edge> = g.edges().collect();
    let c = g.classify();
    (0..g.vertex_count()).filter(|&z| !c.is_source(z)).all(|z| {
        set.iter().any(|&s| {
            let mut seen = vec![false; g.vertex_count()];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(a, b) in &edges {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            seen[z]
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn library_oracle_matches_naive(n in 1usize..=5, p in 0.0f64..0.7, seed in any::<u64>(), b in 0usize..=2) {
        let g = gen_random_dag(n, p, seed);
        let edges: Vec<Edge> = g.edges().collect();
        prop_assert_eq!(brute_force(&g, b, &opts()).unwrap().value, naive_opt(n, &edges, b));
    }

    #[test]
    fn representatives_are_minimal_and_bounded(n in 2usize..=9, p in 0.1f64..0.6, seed in any::<u64>()) {
        let g = gen_random_dag(n, p, seed);
        let c = g.classify();
        let keep: Vec<usize> = (0..n).filter(|&v| !c.is_isolated(v)).collect();
        let g = g.induced(&keep);
        prop_assume!(g.edge_count() > 0);
        for side in [Side::Source, Side::Sink] {
            let oriented = if side == Side::Source { g.clone() } else { g.transpose() };
            let reps = minimal_representatives(&g, side).unwrap().members;
            prop_assert!(covers(&oriented, &reps));
            for i in 0..reps.len() {
                let mut fewer = reps.clone();
                fewer.remove(i);
                prop_assert!(!covers(&oriented, &fewer));
            }
            prop_assert!(reps.len() <= max_matching(&g));
        }
    }
}
