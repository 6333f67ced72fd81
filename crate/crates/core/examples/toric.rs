//! Hirzebruch-Jung resolution of the toric families at index `a`.
//!
//! Usage: `cargo run --example toric -- 5`

use delpezzo::toric::{toric_report, ToricFamily};

fn main() -> delpezzo::Result<()> {
    let a = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for fam in ToricFamily::ALL {
        let r = toric_report(fam, a)?;
        println!("{:<5} rays {:?}", r.family, r.rays);
        println!("      inserted {:?}", r.inserted);
        println!("      coefficients {:?}", r.coefficients);
        println!("      volume {}  index {}", r.volume, r.index);
    }
    Ok(())
}
