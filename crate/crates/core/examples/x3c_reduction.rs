//! The exact-cover reduction: a yes-instance reaches the target value M
//! with B = q edges, a no-instance falls short.

use mci::brute_force;
use mci::generators::{gen_x3c_planted, label_sidecar};
use mci::SolveOptions;

fn main() {
    let opts = SolveOptions::default();
    for yes in [true, false] {
        let (inst, red) = gen_x3c_planted(2, 3, yes, 7).unwrap();
        let out = brute_force(&red.graph, red.budget, &opts).unwrap();
        println!(
            "{} instance {:?}: n = {}, B = {}, M = {}, optimum = {}",
            if yes { "yes" } else { "no" },
            inst.subsets,
            red.graph.vertex_count(),
            red.budget,
            red.target,
            out.value
        );
        if yes {
            print!("{}", label_sidecar(&red.labels));
            println!("optimal edges {:?}", out.solution.added());
        }
    }
}
