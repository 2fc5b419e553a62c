//! Counts connected graphs, connected claw-free graphs and free trees by order.
//!
//! Usage: `cargo run --release --example enumerate_counts -- [max_claw_free_order]`

use std::time::Instant;

use dtdom::enumerate::{connected_claw_free_graphs, connected_graphs, free_trees};

fn main() {
    let max_cf: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    for n in 1..=8 {
        let t = Instant::now();
        println!("connected     n={n:2}  {:6}  ({:.2?})", connected_graphs(n).len(), t.elapsed());
    }
    for n in 1..=max_cf {
        let t = Instant::now();
        println!("claw-free     n={n:2}  {:6}  ({:.2?})", connected_claw_free_graphs(n).len(), t.elapsed());
    }
    for n in [10, 12, 14, 16] {
        let t = Instant::now();
        println!("trees         n={n:2}  {:6}  ({:.2?})", free_trees(n).count(), t.elapsed());
    }
}
