//! Re-searches the cells removed by the exclusion predicates.
//!
//! Usage: `cargo run --release --example audit -- 4 12`

use delpezzo::enumerator::{audit, SearchOptions};

fn main() -> delpezzo::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().ok());
    let a = args.next().flatten().unwrap_or(4);
    let n_max = args.next().flatten().unwrap_or(12);
    let report = audit(a, n_max, None, &SearchOptions::default())?;
    print!("{}", report.to_text());
    Ok(())
}
