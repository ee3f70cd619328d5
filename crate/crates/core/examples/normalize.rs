//! Any solution can be rewritten to use only sink-to-source edges (or edges
//! touching isolated vertices) without losing value.

use mci::structure::normalize_solution;
use mci::{Dag, Solution};

fn main() {
    let g = Dag::from_edges(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
    let sol = Solution::evaluate(&g, vec![(1, 0), (4, 1), (2, 5)]).unwrap();
    let norm = normalize_solution(&g, &sol);
    println!("original   {:?} value {}", sol.added(), sol.value());
    println!("normalized {:?} value {}", norm.added(), norm.value());
}
