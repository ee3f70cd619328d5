//! When |V \ S| <= B <= |S| the optimum has a closed form,
//! n^2 - (n - 1)(|S| - B), and is built without any search.

use mci::{brute_force, solve_large_budget, Dag, SolveOptions};

fn main() {
    // Five sources feeding two sinks.
    let g = Dag::from_edges(7, [(0, 5), (1, 5), (2, 5), (2, 6), (3, 6), (4, 6)]).unwrap();
    let n = g.vertex_count() as u64;
    let s = g.classify().sources.len() as u64;
    for b in 2..=4usize {
        let out = solve_large_budget(&g, b).unwrap();
        let oracle = brute_force(&g, b, &SolveOptions::default()).unwrap();
        println!(
            "B = {b}: construction {} oracle {} formula {} edges {:?}",
            out.value,
            oracle.value,
            n * n - (n - 1) * (s - b as u64),
            out.solution.added()
        );
    }
}
