//! Exhaustive classification of fundamental multiplets of a given index.
//!
//! Cells `(n, h0, h)` are pruned by numerical predicates, each surviving
//! cell is searched for subschemes `Δ_b, ..., Δ_1`, and every accepted
//! multiplet is re-verified by descending it independently. Results are
//! deduplicated by a canonical form of the weighted exceptional graph.

pub mod canon;
pub mod cells;
pub mod report;
pub mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multiplet::json::{divisor_terms, multiplet_json};
use crate::multiplet::{CatalogType, FundamentalMultiplet};

pub use canon::{canonical_form, canonical_graph, exceptional_graph, CanonicalKey, GraphCode};
pub use cells::{structural_cells, Predicate, SearchCell};
pub use report::{AuditReport, ClassificationReport, PredicateAudit, Survivor, SweepSummary};
pub use search::{search_cell, top_shapes, CellOutcome, SearchOptions};

/// Runs `f` on a pool of `threads` workers (all cores when zero).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// A found multiplet with its independently recomputed invariants.
pub struct Verified {
    pub key: CanonicalKey,
    pub survivor: Survivor,
}

/// Descends `m` from scratch and rebuilds every certificate.
pub fn verify(m: &FundamentalMultiplet, cell: &SearchCell) -> Result<Verified> {
    let json = multiplet_json(m)?;
    let ladder = m.descend()?;
    let pair = ladder.basic_pair();
    let volume = crate::multiplet::volume(&ladder)?;
    let key = canonical_form(&pair, &volume);
    let graph = exceptional_graph(&pair);
    Ok(Verified {
        survivor: Survivor {
            ty: "unexpected".into(),
            label: None,
            volume: volume.to_string(),
            index: json.index,
            e0: divisor_terms(&pair.model, &pair.e0),
            dual_graph: graph,
            key: key.to_string(),
            cell: *cell,
            representatives: 1,
            multiplet: json,
        },
        key,
    })
}

/// Canonical keys of the catalog configurations at `a`.
pub fn catalog_keys(a: u32) -> Result<BTreeMap<CanonicalKey, (CatalogType, String)>> {
    let mut out = BTreeMap::new();
    for ty in CatalogType::for_index(a) {
        for entry in ty.entries(a)? {
            let ladder = entry.multiplet.descend()?;
            let volume = crate::multiplet::volume(&ladder)?;
            let key = canonical_form(&ladder.basic_pair(), &volume);
            out.insert(key, (ty, entry.label()));
        }
    }
    Ok(out)
}

fn sweep(cells: &[SearchCell], opts: &SearchOptions) -> (Vec<Survivor>, usize, SweepSummary) {
    let outcomes: Vec<CellOutcome> = cells.par_iter().map(|c| search_cell(c, opts)).collect();
    let checked: Vec<(SearchCell, Vec<std::result::Result<Verified, String>>)> = outcomes
        .par_iter()
        .map(|o| {
            let v = o
                .found
                .iter()
                .map(|m| match verify(m, &o.cell) {
                    Ok(v) if v.survivor.multiplet.all_pass() => Ok(v),
                    Ok(v) => Err(format!("{}: re-check failed for {}", o.cell, v.key)),
                    Err(e) => Err(format!("{}: {e}", o.cell)),
                })
                .collect();
            (o.cell, v)
        })
        .collect();
    let mut summary = SweepSummary {
        cells_searched: cells.len(),
        ..Default::default()
    };
    for o in &outcomes {
        summary.nodes += o.nodes;
        if o.incomplete {
            summary.incomplete_cells.push(o.cell.to_string());
        }
        if o.uncertified {
            summary.uncertified_cells.push(o.cell.to_string());
        }
    }
    let mut candidates = 0;
    let mut by_key: BTreeMap<CanonicalKey, Survivor> = BTreeMap::new();
    for (_, results) in checked {
        for r in results {
            candidates += 1;
            match r {
                Ok(v) => {
                    by_key
                        .entry(v.key)
                        .and_modify(|s| s.representatives += 1)
                        .or_insert(v.survivor);
                }
                Err(msg) => summary.inconsistencies.push(msg),
            }
        }
    }
    (by_key.into_values().collect(), candidates, summary)
}

fn tag(survivors: &mut [Survivor], catalog: &BTreeMap<CanonicalKey, (CatalogType, String)>) -> usize {
    let by_string: BTreeMap<String, &(CatalogType, String)> = catalog.iter().map(|(k, v)| (k.to_string(), v)).collect();
    let mut unexpected = 0;
    for s in survivors.iter_mut() {
        match by_string.get(&s.key) {
            Some((ty, label)) => {
                s.ty = ty.name().to_string();
                s.label = Some(label.clone());
            }
            None => unexpected += 1,
        }
    }
    unexpected
}

fn type_rank(s: &Survivor) -> usize {
    CatalogType::ALL
        .iter()
        .position(|t| t.name() == s.ty)
        .unwrap_or(CatalogType::ALL.len())
}

/// Classifies the fundamental multiplets of index `a` with volume at least `2a`.
pub fn classify(a: u32, opts: &SearchOptions) -> Result<ClassificationReport> {
    if a < 2 {
        return Err(Error::InvalidMultiplet(format!("a = {a} must be at least 2")));
    }
    let within = a >= 4;
    let all = structural_cells(a, 2 * a);
    let mut excluded_by: BTreeMap<String, usize> = BTreeMap::new();
    let mut kept = Vec::new();
    let mut cells_excluded = 0;
    for c in &all {
        let ex = if within { c.excluded_by() } else { Vec::new() };
        for p in &ex {
            *excluded_by.entry(p.to_string()).or_default() += 1;
        }
        if ex.is_empty() {
            kept.push(*c);
        } else {
            cells_excluded += 1;
        }
    }
    let (mut survivors, candidates, search) = sweep(&kept, opts);
    let (catalog_match, missing, unexpected) = if within {
        let catalog = catalog_keys(a)?;
        let unexpected = tag(&mut survivors, &catalog);
        let found: Vec<&String> = survivors.iter().map(|s| &s.key).collect();
        let missing: Vec<String> = catalog
            .iter()
            .filter(|(k, _)| !found.contains(&&k.to_string()))
            .map(|(_, (_, label))| label.clone())
            .collect();
        let ok = unexpected == 0
            && missing.is_empty()
            && search.incomplete_cells.is_empty()
            && search.uncertified_cells.is_empty()
            && search.inconsistencies.is_empty();
        (Some(ok), missing, unexpected)
    } else {
        for s in survivors.iter_mut() {
            s.ty = "unclassified".into();
        }
        (None, Vec::new(), 0)
    };
    survivors.sort_by(|x, y| (type_rank(x), &x.label, &x.key).cmp(&(type_rank(y), &y.label, &y.key)));
    Ok(ClassificationReport {
        a,
        within_hypotheses: within,
        cells_visited: all.len(),
        candidates,
        survivors,
        catalog_match,
        missing,
        unexpected,
        search,
        audit: PredicateAudit {
            excluded_by,
            cells_excluded,
        },
    })
}

/// Searches the cells removed by the exclusion predicates, up to `n <= n_max`,
/// with no predicate pruning.
pub fn audit(a: u32, n_max: u32, h0_override: Option<&[i64]>, opts: &SearchOptions) -> Result<AuditReport> {
    if a < 4 {
        return Err(Error::InvalidMultiplet(format!("audit needs a >= 4, got {a}")));
    }
    let mut excluded_by: BTreeMap<String, usize> = BTreeMap::new();
    let cells: Vec<SearchCell> = structural_cells(a, n_max)
        .into_iter()
        .filter(|c| h0_override.map_or(true, |hs| c.n.is_some() && hs.contains(&c.h0)))
        .filter(|c| {
            let ex = c.excluded_by();
            for p in &ex {
                *excluded_by.entry(p.to_string()).or_default() += 1;
            }
            !ex.is_empty()
        })
        .collect();
    let (mut survivors, candidates, search) = sweep(&cells, opts);
    let outside_catalog = tag(&mut survivors, &catalog_keys(a)?);
    Ok(AuditReport {
        a,
        n_max,
        h0_override: h0_override.map(<[i64]>::to_vec),
        cells_swept: cells.len(),
        excluded_by,
        candidates,
        survivors,
        outside_catalog,
        search,
    })
}
