//! Descends every catalog configuration at index `a` and prints its
//! certificates, volume and index.
//!
//! Usage: `cargo run --example verify_catalog -- 4`

use delpezzo::multiplet::json::multiplet_json;
use delpezzo::multiplet::CatalogType;

fn main() -> delpezzo::Result<()> {
    let a = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for ty in CatalogType::for_index(a) {
        for entry in ty.entries(a)? {
            let j = multiplet_json(&entry.multiplet)?;
            println!(
                "{:<12} on {:<4} volume {:>7}  index {}  certificates {}",
                entry.label(),
                j.base,
                j.volume,
                j.index,
                if j.all_pass() { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
