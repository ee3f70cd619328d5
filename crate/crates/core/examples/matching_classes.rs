//! Structural parameters behind the matching-based solver: matching number,
//! minimal representative sets and neighborhood classes.

use mci::generators::{gen_x3c_instance, X3cInstance};
use mci::solvers::ClassBudgetPartition;
use mci::structure::{max_matching, minimal_representatives, neighborhood_classes, Side};
use mci::{solve_by_matching, SolveOptions};

fn main() {
    let inst = X3cInstance::new(
        2,
        [vec![0, 1, 2], vec![3, 4, 5], vec![0, 1, 2], vec![1, 3, 5]],
    );
    let g = gen_x3c_instance(&inst).unwrap().graph;
    println!(
        "n = {}, matching number = {}",
        g.vertex_count(),
        max_matching(&g)
    );
    for side in [Side::Source, Side::Sink] {
        let reps = minimal_representatives(&g, side).unwrap();
        let classes = neighborhood_classes(&g, side);
        println!(
            "{side:?}: representatives {:?}, classes {:?}",
            reps.members, classes.classes
        );
    }

    let out = solve_by_matching(&g, 2, &SolveOptions::default()).unwrap();
    println!("B = 2: value {} via {:?}", out.value, out.solution.added());
    if let Some(p) = ClassBudgetPartition::of_solution(&g, out.solution.added()) {
        println!("budget per (source class, sink class): {:?}", p.counts);
    }
}
