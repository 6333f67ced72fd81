//! Classifies index-`a` surfaces with large volume and prints the table.
//!
//! Usage: `cargo run --release --example classify -- 5`

use delpezzo::enumerator::{classify, SearchOptions};

fn main() -> delpezzo::Result<()> {
    let a = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let report = classify(a, &SearchOptions::default())?;
    print!("{}", report.to_text());
    Ok(())
}
