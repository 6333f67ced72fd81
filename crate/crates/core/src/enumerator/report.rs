//! Reports for classification and audit runs.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::lattice::DualGraph;
use crate::multiplet::json::{MultipletJson, TermJson};

use super::cells::SearchCell;

#[derive(Clone, Debug, Serialize)]
pub struct Survivor {
    /// Catalog type, or `"unexpected"`.
    #[serde(rename = "type")]
    pub ty: String,
    /// Catalog configuration label such as `II[1,1]`.
    pub label: Option<String>,
    pub volume: String,
    pub index: u32,
    #[serde(rename = "E0")]
    pub e0: Vec<TermJson>,
    pub dual_graph: DualGraph,
    pub key: String,
    pub cell: SearchCell,
    /// Number of distinct multiplets found with this key.
    pub representatives: usize,
    pub multiplet: MultipletJson,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub cells_searched: usize,
    pub nodes: u64,
    /// Cells whose node limit was reached.
    pub incomplete_cells: Vec<String>,
    /// Cells whose `E_b` could contain components the search does not model.
    pub uncertified_cells: Vec<String>,
    /// Candidates that passed the search but failed the independent re-check.
    pub inconsistencies: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredicateAudit {
    /// Number of structural cells each exclusion predicate removes.
    pub excluded_by: BTreeMap<String, usize>,
    pub cells_excluded: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub a: u32,
    pub within_hypotheses: bool,
    pub cells_visited: usize,
    pub candidates: usize,
    pub survivors: Vec<Survivor>,
    /// `None` when `a < 4`, where no catalog applies.
    pub catalog_match: Option<bool>,
    pub missing: Vec<String>,
    pub unexpected: usize,
    pub search: SweepSummary,
    pub audit: PredicateAudit,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub a: u32,
    pub n_max: u32,
    pub h0_override: Option<Vec<i64>>,
    pub cells_swept: usize,
    pub excluded_by: BTreeMap<String, usize>,
    pub candidates: usize,
    pub survivors: Vec<Survivor>,
    pub outside_catalog: usize,
    pub search: SweepSummary,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.catalog_match == Some(true)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "classification at a = {}", self.a);
        if !self.within_hypotheses {
            let _ = writeln!(s, "note: a < 4 lies outside the classified range; no catalog comparison");
        }
        let _ = writeln!(
            s,
            "cells visited {}, searched {}, nodes {}, candidates {}",
            self.cells_visited, self.search.cells_searched, self.search.nodes, self.candidates
        );
        let _ = writeln!(s, "{:<6} {:<14} {:>8} {:>6}  E0", "type", "config", "volume", "index");
        for v in &self.survivors {
            let e0: Vec<String> = v.e0.iter().map(|t| format!("{}*{}", t.coeff, t.curve)).collect();
            let _ = writeln!(
                s,
                "{:<6} {:<14} {:>8} {:>6}  {}",
                v.ty,
                v.label.as_deref().unwrap_or("-"),
                v.volume,
                v.index,
                e0.join(" + ")
            );
        }
        write_sweep(&mut s, &self.search);
        match self.catalog_match {
            Some(true) => s.push_str("catalog match: yes\n"),
            Some(false) => {
                let _ = writeln!(
                    s,
                    "catalog match: NO (missing {:?}, unexpected {})",
                    self.missing, self.unexpected
                );
            }
            None => {}
        }
        s
    }
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.outside_catalog == 0
            && self.search.incomplete_cells.is_empty()
            && self.search.uncertified_cells.is_empty()
            && self.search.inconsistencies.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "audit at a = {}, n <= {}", self.a, self.n_max);
        if let Some(h) = &self.h0_override {
            let _ = writeln!(s, "h0 restricted to {h:?}");
        }
        let _ = writeln!(s, "excluded cells swept: {}", self.cells_swept);
        for (p, k) in &self.excluded_by {
            let _ = writeln!(s, "  {p}: {k}");
        }
        let _ = writeln!(
            s,
            "nodes {}, candidates {}, survivors {}, outside catalog {}",
            self.search.nodes,
            self.candidates,
            self.survivors.len(),
            self.outside_catalog
        );
        for v in &self.survivors {
            let _ = writeln!(s, "  survivor {} {} in {}", v.ty, v.volume, v.cell);
        }
        write_sweep(&mut s, &self.search);
        let _ = writeln!(s, "audit: {}", if self.passed() { "pass" } else { "FAIL" });
        s
    }
}

fn write_sweep(s: &mut String, w: &SweepSummary) {
    for c in &w.incomplete_cells {
        let _ = writeln!(s, "incomplete: {c}");
    }
    for c in &w.uncertified_cells {
        let _ = writeln!(s, "uncertified: {c}");
    }
    for c in &w.inconsistencies {
        let _ = writeln!(s, "inconsistency: {c}");
    }
}
