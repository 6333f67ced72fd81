//! The eight multiplet types with volume at least `2a`, expanded into their
//! concrete configurations.
//!
//! Types I-IV put a subscheme of degree `d` on the minimal section at the
//! last level. By the low-coefficient lemma every point of it has full contact
//! with `sigma`, so the configurations are the partitions of `d`; the same
//! holds for the degree-2 subscheme of A5 along the fiber.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::FundamentalMultiplet;
use crate::combinat::partitions;
use crate::elimination::{LocalDatum, Subscheme};
use crate::error::{Error, Result};
use crate::lattice::{CurveId, Divisor, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatalogType {
    O,
    I,
    II,
    III,
    IV,
    A5,
    B4,
    C4,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub ty: CatalogType,
    /// Multiplicities of the points of the nonempty subscheme, e.g. `[2, 1]`.
    pub partition: Vec<u32>,
    pub multiplet: FundamentalMultiplet,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        if self.partition.is_empty() {
            self.ty.to_string()
        } else {
            let parts: Vec<String> = self.partition.iter().map(|p| p.to_string()).collect();
            format!("{}[{}]", self.ty, parts.join(","))
        }
    }
}

const SIGMA: CurveId = CurveId(0);

impl CatalogType {
    pub const ALL: [CatalogType; 8] = [
        CatalogType::O,
        CatalogType::I,
        CatalogType::II,
        CatalogType::III,
        CatalogType::IV,
        CatalogType::A5,
        CatalogType::B4,
        CatalogType::C4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogType::O => "O",
            CatalogType::I => "I",
            CatalogType::II => "II",
            CatalogType::III => "III",
            CatalogType::IV => "IV",
            CatalogType::A5 => "A5",
            CatalogType::B4 => "B4",
            CatalogType::C4 => "C4",
        }
    }

    /// Degree of the subscheme on `sigma` for the types O-IV.
    fn section_degree(self) -> Option<u32> {
        match self {
            CatalogType::O => Some(0),
            CatalogType::I => Some(1),
            CatalogType::II => Some(2),
            CatalogType::III => Some(3),
            CatalogType::IV => Some(4),
            _ => None,
        }
    }

    pub fn valid_for(self, a: u32) -> bool {
        match self {
            CatalogType::A5 => a == 5,
            CatalogType::B4 | CatalogType::C4 => a == 4,
            _ => a >= 2,
        }
    }

    /// The types expected at index `a`.
    pub fn for_index(a: u32) -> Vec<CatalogType> {
        CatalogType::ALL.into_iter().filter(|t| t.valid_for(a)).collect()
    }

    /// `(-K_S^2)` of every surface of this type.
    pub fn volume(self, a: u32) -> BigRational {
        let a = a as i64;
        let num = match (self, self.section_degree()) {
            (_, Some(d)) => 2 * a * a + (4 - d as i64) * a + 2,
            (CatalogType::A5, _) => 54,
            _ => 8 * a,
        };
        BigRational::new(BigInt::from(num), BigInt::from(a))
    }

    pub fn entries(self, a: u32) -> Result<Vec<CatalogEntry>> {
        if !self.valid_for(a) {
            return Err(Error::InvalidMultiplet(format!("type {self} does not exist at a = {a}")));
        }
        let entry = |partition: Vec<u32>, multiplet| CatalogEntry {
            ty: self,
            partition,
            multiplet,
        };
        let mut out = Vec::new();
        match self {
            CatalogType::A5 => {
                for parts in partitions(2, 2) {
                    let mut top = SurfaceModel::hirzebruch(8);
                    let l = top.add_fiber("l")?;
                    let e = Divisor::from_terms([(SIGMA, 4), (l, 2)]);
                    let d3 = Subscheme::new(parts.iter().map(|&p| LocalDatum::on_curve(l, p, p)).collect());
                    let m = FundamentalMultiplet::new(5, 3, top, e, vec![d3, Subscheme::empty(), Subscheme::empty()])?;
                    out.push(entry(parts, m));
                }
            }
            CatalogType::B4 => {
                let top = SurfaceModel::hirzebruch(4);
                let e = Divisor::from_terms([(SIGMA, 3)]);
                let d2 = Subscheme::new(vec![LocalDatum::on_curve(SIGMA, 2, 3)]);
                let m = FundamentalMultiplet::new(4, 2, top, e, vec![d2, Subscheme::empty()])?;
                out.push(entry(vec![3], m));
            }
            CatalogType::C4 => {
                let mut top = SurfaceModel::hirzebruch(5);
                let l = top.add_fiber("l")?;
                let e = Divisor::from_terms([(SIGMA, 3), (l, 2)]);
                let d2 = Subscheme::new(vec![LocalDatum::on_curve(l, 1, 1)]);
                let d1 = Subscheme::new(vec![LocalDatum::at_node(SIGMA, l, 3, 3)]);
                let m = FundamentalMultiplet::new(4, 2, top, e, vec![d2, d1])?;
                out.push(entry(vec![1, 3], m));
            }
            _ => {
                let d = self.section_degree().unwrap_or(0);
                let b = (a + 1) / 2;
                for parts in partitions(d, d) {
                    let top = SurfaceModel::hirzebruch(2 * a - d);
                    let e = Divisor::from_terms([(SIGMA, a as i64 - 1)]);
                    let mut deltas = vec![Subscheme::empty(); b as usize];
                    deltas[b as usize - 1] =
                        Subscheme::new(parts.iter().map(|&p| LocalDatum::on_curve(SIGMA, p, p)).collect());
                    out.push(entry(parts, FundamentalMultiplet::new(a, b, top, e, deltas)?));
                }
            }
        }
        Ok(out)
    }

    pub fn configurations(self, a: u32) -> Result<Vec<FundamentalMultiplet>> {
        Ok(self.entries(a)?.into_iter().map(|e| e.multiplet).collect())
    }
}

impl fmt::Display for CatalogType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "type",
                name: s.to_string(),
            })
    }
}
