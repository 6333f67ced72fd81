//! Weighted exceptional graphs of the two type II configurations, as DOT,
//! with their canonical codes.
//!
//! Usage: `cargo run --example dual_graph -- 6`

use delpezzo::enumerator::{canonical_graph, exceptional_graph};
use delpezzo::multiplet::CatalogType;

fn main() -> delpezzo::Result<()> {
    let a = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for entry in CatalogType::II.entries(a)? {
        let pair = entry.multiplet.descend()?.basic_pair();
        let g = exceptional_graph(&pair);
        print!("{}", g.to_dot(&entry.label()));
        println!("// canonical code {}", canonical_graph(&g));
    }
    Ok(())
}
