//! Serializable views of multiplets and their certificates.

use serde::Serialize;

use super::{
    certificate_index_is_a, check_basic_pair, identity_failures, index_of, local_lemma_checks, volume,
    CertificateReport, FundamentalMultiplet, Violation,
};
use crate::elimination::{LocalDatum, Location, Subscheme};
use crate::error::Result;
use crate::lattice::{BaseSurface, Divisor, SurfaceModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub curve: String,
    pub coeff: i64,
}

pub fn divisor_terms(model: &SurfaceModel, d: &Divisor) -> Vec<TermJson> {
    d.terms()
        .map(|(c, k)| TermJson {
            curve: model.name(c).to_string(),
            coeff: k,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointJson {
    pub kind: &'static str,
    pub curves: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contact: Option<u32>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaJson {
    pub level: u32,
    pub points: Vec<PointJson>,
}

fn point_json(model: &SurfaceModel, p: &LocalDatum) -> PointJson {
    let names = |cs: &[crate::lattice::CurveId]| cs.iter().map(|&c| model.name(c).to_string()).collect();
    let (kind, contact) = match p.location {
        Location::FreePoint => ("free", None),
        Location::OnCurve { contact, .. } => ("on_curve", Some(contact)),
        Location::AtNode { contact, .. } => ("at_node", Some(contact)),
    };
    PointJson {
        kind,
        curves: names(&p.curves()),
        contact,
        multiplicity: p.multiplicity,
    }
}

pub fn delta_json(model: &SurfaceModel, level: u32, delta: &Subscheme) -> DeltaJson {
    DeltaJson {
        level,
        points: delta.points.iter().map(|p| point_json(model, p)).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificatesJson {
    pub basic_pair: CertificateReport,
    pub certified_nef: Option<bool>,
    pub fundamental: Option<bool>,
    pub identities: Vec<String>,
    pub local_lemmas: Vec<Violation>,
    pub index_is_a: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultipletJson {
    pub a: u32,
    pub b: u32,
    pub base: String,
    pub base_n: Option<u32>,
    #[serde(rename = "E_b")]
    pub e_b: Vec<TermJson>,
    pub deltas: Vec<DeltaJson>,
    #[serde(rename = "E_0")]
    pub e_0: Vec<TermJson>,
    pub volume: String,
    pub index: u32,
    pub certificates: CertificatesJson,
}

impl MultipletJson {
    pub fn all_pass(&self) -> bool {
        let c = &self.certificates;
        c.basic_pair.all_pass()
            && c.fundamental != Some(false)
            && c.identities.is_empty()
            && c.local_lemmas.is_empty()
            && c.index_is_a
            && self.index == self.a
    }
}

pub fn multiplet_json(m: &FundamentalMultiplet) -> Result<MultipletJson> {
    let ladder = m.descend()?;
    let pair = ladder.basic_pair();
    let top = ladder.top();
    let base = top.model.base();
    Ok(MultipletJson {
        a: m.a,
        b: m.b,
        base: base.to_string(),
        base_n: match base {
            BaseSurface::Hirzebruch(n) => Some(n),
            BaseSurface::ProjectivePlane => None,
        },
        e_b: divisor_terms(&top.model, &top.e),
        deltas: (1..=m.b)
            .rev()
            .map(|i| delta_json(&ladder.level(i).model, i, m.delta(i)))
            .collect(),
        e_0: divisor_terms(&pair.model, &pair.e0),
        volume: volume(&ladder)?.to_string(),
        index: index_of(&pair),
        certificates: CertificatesJson {
            basic_pair: check_basic_pair(&pair),
            certified_nef: pair.certified_nef,
            fundamental: ladder.is_fundamental(),
            identities: identity_failures(&ladder),
            local_lemmas: local_lemma_checks(&ladder),
            index_is_a: certificate_index_is_a(&pair),
        },
    })
}
