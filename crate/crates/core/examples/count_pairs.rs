//! Reachability closure and the pair count f(G), before and after adding
//! edges one at a time.

use mci::{count_pairs, reach_sets, Dag};

fn main() {
    let g = Dag::from_edges(6, [(0, 1), (1, 2), (3, 4), (3, 2)]).unwrap();
    let reach = reach_sets(&g);
    for v in 0..g.vertex_count() {
        println!("reach({v}) = {:?}", reach.reach_of(v));
    }
    println!("f(G) = {}", count_pairs(&g));

    let mut closure = reach;
    for (u, v) in [(2, 3), (4, 0), (5, 0)] {
        closure.insert_edge(u, v);
        println!("after ({u},{v}): f = {}", closure.pair_count());
    }
}
