//! Once the budget reaches max(|S|, |T|) + |Q| the whole graph can be made
//! strongly connected, so every ordered pair becomes reachable.

use mci::generators::gen_random_dag;
use mci::reach::is_strongly_connected;
use mci::{augment_strongly_connected, SolveError};

fn main() {
    let g = gen_random_dag(12, 0.15, 42);
    let c = g.classify();
    println!(
        "n = {}, |S| = {}, |T| = {}, |Q| = {}",
        g.vertex_count(),
        c.sources.len(),
        c.sinks.len(),
        c.isolated.len()
    );
    let threshold = c.threshold();

    let sol = augment_strongly_connected(&g, threshold).unwrap();
    println!("B = {threshold}: added {:?}", sol.added());
    println!(
        "value = {} (n^2 = {}), strongly connected: {}",
        sol.value(),
        g.vertex_count().pow(2),
        is_strongly_connected(&sol.augmented(&g))
    );

    match augment_strongly_connected(&g, threshold - 1) {
        Err(e @ SolveError::BelowThreshold { .. }) => println!("B = {}: {e}", threshold - 1),
        other => println!("unexpected: {other:?}"),
    }
}
