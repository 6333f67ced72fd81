#![allow(dead_code)]

use std::collections::BTreeSet;

use delpezzo::enumerator::{search_cell, structural_cells, SearchCell, SearchOptions};
use delpezzo::multiplet::FundamentalMultiplet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded sample of pseudo-fundamental multiplets: random cells with a random
/// length `b` below the fundamental one, searched without the volume and
/// index requirements, and a random handful kept from each.
pub fn fuzzed_multiplets(seed: u64, want: usize) -> Vec<FundamentalMultiplet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = SearchOptions {
        max_nodes: 4_000,
        volume_bound: false,
        require_index: false,
    };
    let cells: Vec<SearchCell> = (2..=6).flat_map(|a| structural_cells(a, 6)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..20 * want {
        if out.len() >= want {
            break;
        }
        let mut cell = *cells.choose(&mut rng).expect("cells");
        cell.b = rng.gen_range(1..=cell.b);
        let found = search_cell(&cell, &opts).found;
        for m in found.choose_multiple(&mut rng, 6) {
            if seen.insert(format!("{m:?}")) {
                out.push(m.clone());
            }
        }
    }
    out
}
