//! Every exact strategy against the brute-force oracle on a batch of random
//! DAGs, with the amount of enumeration each needed.

use mci::generators::gen_random_dag;
use mci::{brute_force, solve, SolveOptions, StrategyChoice};

fn main() {
    let opts = SolveOptions::default();
    let strategies = [
        StrategyChoice::St,
        StrategyChoice::VMinusB,
        StrategyChoice::Matching,
        StrategyChoice::Auto,
    ];
    println!(
        "{:>4} {:>3} {:>2} {:>7} strategy:value/explored",
        "seed", "n", "B", "oracle"
    );
    for seed in 0..12u64 {
        let n = 4 + (seed % 4) as usize;
        let g = gen_random_dag(n, 0.3, seed);
        let b = (seed % 3) as usize + 1;
        if b >= g.classify().threshold() {
            continue;
        }
        let oracle = brute_force(&g, b, &opts).unwrap();
        let cols: Vec<String> = strategies
            .iter()
            .map(|&s| {
                let out = solve(&g, b, s, &opts).unwrap();
                assert_eq!(out.value, oracle.value);
                format!("{}:{}/{}", out.strategy, out.value, out.explored)
            })
            .collect();
        println!(
            "{seed:>4} {n:>3} {b:>2} {:>7} {}",
            oracle.value,
            cols.join(" ")
        );
    }
}
