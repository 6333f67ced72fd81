//! Curvilinear zero-dimensional subschemes and their eliminations.
//!
//! A point of multiplicity `m` is eliminated by `m` successive blow-ups, each
//! after the first centred on the newest exceptional curve, which leaves a
//! straight chain `Gamma_1 - ... - Gamma_m` of `(-2)`-curves ending in a
//! `(-1)`-curve. Contact with a tracked curve `C` of order `k` means the first
//! `k` centres also lie on the strict transform of `C`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{BlowUpPoint, CurveId, Divisor, DivisorClass, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Location {
    FreePoint,
    /// General point of `curve`, with contact order `contact` along it.
    OnCurve { curve: CurveId, contact: u32 },
    /// The node `c1 ∩ c2`; contact 1 along `c1` and `contact` along `c2`.
    AtNode { c1: CurveId, c2: CurveId, contact: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalDatum {
    pub location: Location,
    pub multiplicity: u32,
}

impl LocalDatum {
    pub fn free(m: u32) -> Self {
        LocalDatum {
            location: Location::FreePoint,
            multiplicity: m,
        }
    }

    pub fn on_curve(curve: CurveId, contact: u32, m: u32) -> Self {
        LocalDatum {
            location: Location::OnCurve { curve, contact },
            multiplicity: m,
        }
    }

    pub fn at_node(c1: CurveId, c2: CurveId, contact: u32, m: u32) -> Self {
        LocalDatum {
            location: Location::AtNode { c1, c2, contact },
            multiplicity: m,
        }
    }

    /// Length of the intersection of the datum with the tracked curve `c`.
    pub fn contact_with(&self, c: CurveId) -> u32 {
        match self.location {
            Location::FreePoint => 0,
            Location::OnCurve { curve, contact } => {
                if curve == c {
                    contact
                } else {
                    0
                }
            }
            Location::AtNode { c1, c2, contact } => {
                if c == c1 {
                    1
                } else if c == c2 {
                    contact
                } else {
                    0
                }
            }
        }
    }

    /// Tracked curves through the point.
    pub fn curves(&self) -> Vec<CurveId> {
        match self.location {
            Location::FreePoint => vec![],
            Location::OnCurve { curve, .. } => vec![curve],
            Location::AtNode { c1, c2, .. } => vec![c1, c2],
        }
    }

    fn validate(&self, model: &SurfaceModel) -> Result<()> {
        let m = self.multiplicity;
        if m == 0 {
            return Err(Error::InvalidDatum("multiplicity must be positive".into()));
        }
        match self.location {
            Location::FreePoint => Ok(()),
            Location::OnCurve { curve, contact } => {
                model.curve(curve)?;
                if contact == 0 || contact > m {
                    return Err(Error::InvalidDatum(format!(
                        "contact {contact} along {} outside 1..={m}",
                        model.name(curve)
                    )));
                }
                Ok(())
            }
            Location::AtNode { c1, c2, contact } => {
                if contact == 0 || contact > m {
                    return Err(Error::InvalidDatum(format!("node contact {contact} outside 1..={m}")));
                }
                if c1 == c2 || model.curve_intersection(c1, c2)? != 1 {
                    return Err(Error::InvalidDatum(format!(
                        "{} and {} do not meet transversally in one point",
                        model.name(c1),
                        model.name(c2)
                    )));
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subscheme {
    pub points: Vec<LocalDatum>,
}

impl Subscheme {
    pub fn empty() -> Self {
        Subscheme::default()
    }

    pub fn new(points: Vec<LocalDatum>) -> Self {
        Subscheme { points }
    }

    pub fn degree(&self) -> u32 {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `deg(Δ ∩ C)`.
    pub fn degree_on(&self, c: CurveId) -> u32 {
        self.points.iter().map(|p| p.contact_with(c)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationResult {
    pub model: SurfaceModel,
    /// Number of exceptional classes on the source surface.
    pub source_exc: usize,
    pub chains: Vec<Vec<CurveId>>,
    pub rel_canonical: Divisor,
}

impl EliminationResult {
    /// `K_{Y/X}` as a lattice class: the sum of the new exceptional total transforms.
    pub fn rel_canonical_class(&self) -> DivisorClass {
        let n = self.model.n_exc();
        let mut exc = vec![0; n];
        for e in exc.iter_mut().skip(self.source_exc) {
            *e = 1;
        }
        DivisorClass::new(vec![0; self.model.base().rank()], exc)
    }

    /// `ψ*L - s K_{Y/X}` for a class `L` of the source surface.
    pub fn transform_class(&self, l: &DivisorClass, s: i64) -> DivisorClass {
        &l.padded(self.model.n_exc()) - &(&self.rel_canonical_class() * s)
    }
}

fn push_chain_step(model: &mut SurfaceModel, chain: &mut Vec<CurveId>, point: BlowUpPoint, label: &str) -> Result<CurveId> {
    let name = format!("Gamma_{label}_{}", chain.len() + 1);
    let id = model.blow_up_in_place(point, Some(name))?;
    chain.push(id);
    Ok(id)
}

/// Realizes the elimination of `delta` as an extension of the blow-up tape.
///
/// `tag` prefixes chain curve names (`Gamma_<tag>P<j>_<i>`).
pub fn eliminate_tagged(model: &SurfaceModel, delta: &Subscheme, tag: &str) -> Result<EliminationResult> {
    for p in &delta.points {
        p.validate(model)?;
    }
    let source_exc = model.n_exc();
    let mut y = model.clone();
    let mut chains = Vec::with_capacity(delta.points.len());
    let mut rel = Divisor::new();
    for (j, p) in delta.points.iter().enumerate() {
        let label = format!("{tag}P{}", j + 1);
        let m = p.multiplicity;
        let mut chain = Vec::with_capacity(m as usize);
        // the curve whose strict transform the chain keeps following
        let (first, follow, k) = match p.location {
            Location::FreePoint => (BlowUpPoint::Generic, None, 1),
            Location::OnCurve { curve, contact } => (BlowUpPoint::OnCurve(curve), Some(curve), contact),
            Location::AtNode { c1, c2, contact } => (BlowUpPoint::NodeOf(c1, c2), Some(c2), contact),
        };
        let mut last = push_chain_step(&mut y, &mut chain, first, &label)?;
        for step in 1..m {
            let pt = match follow {
                Some(c) if step < k => BlowUpPoint::NodeOf(last, c),
                _ => BlowUpPoint::OnCurve(last),
            };
            last = push_chain_step(&mut y, &mut chain, pt, &label)?;
        }
        for (i, &g) in chain.iter().enumerate() {
            rel.set(g, i as i64 + 1);
        }
        chains.push(chain);
    }
    Ok(EliminationResult {
        model: y,
        source_exc,
        chains,
        rel_canonical: rel,
    })
}

pub fn eliminate(model: &SurfaceModel, delta: &Subscheme) -> Result<EliminationResult> {
    eliminate_tagged(model, delta, "")
}

/// Pulls a divisor back along the recorded tape: each new exceptional curve
/// receives the sum of the coefficients of the tracked curves through its centre.
pub fn pullback(e: &Divisor, result: &EliminationResult) -> Divisor {
    let mut out = e.clone();
    for rec in &result.model.tape()[result.source_exc..] {
        let c: i64 = rec.point.curves().map(|x| out.coeff(x)).sum();
        out.set(rec.exceptional, c);
    }
    out
}

/// `E^{Δ,s} = ψ*E - s K_{Y/X}`.
pub fn transform(e: &Divisor, result: &EliminationResult, s: i64) -> Divisor {
    pullback(e, result).combine(&result.rel_canonical, -s)
}

/// Whether `-K_Y` is nonnegative on every chain curve.
pub fn check_psi_nef(result: &EliminationResult) -> bool {
    let k = result.model.canonical_class();
    result
        .chains
        .iter()
        .flatten()
        .all(|&g| result.model.dot_curve(&k, g).map_or(false, |v| v <= 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIGMA: CurveId = CurveId(0);

    fn chain_self_ints(r: &EliminationResult, j: usize) -> Vec<i64> {
        r.chains[j].iter().map(|&g| r.model.self_intersection(g).unwrap()).collect()
    }

    #[test]
    fn on_curve_chain_shape() {
        let m = SurfaceModel::hirzebruch(4);
        let d = Subscheme::new(vec![LocalDatum::on_curve(SIGMA, 2, 3)]);
        let r = eliminate(&m, &d).unwrap();
        assert_eq!(chain_self_ints(&r, 0), vec![-2, -2, -1]);
        let ch = &r.chains[0];
        let meets: Vec<i64> = ch.iter().map(|&g| r.model.curve_intersection(SIGMA, g).unwrap()).collect();
        assert_eq!(meets, vec![0, 1, 0]);
        assert_eq!(r.model.curve_intersection(ch[0], ch[1]).unwrap(), 1);
        assert_eq!(r.model.curve_intersection(ch[1], ch[2]).unwrap(), 1);
        assert_eq!(r.model.curve_intersection(ch[0], ch[2]).unwrap(), 0);
        let coeffs: Vec<i64> = ch.iter().map(|&g| r.rel_canonical.coeff(g)).collect();
        assert_eq!(coeffs, vec![1, 2, 3]);
        assert_eq!(r.model.self_intersection(SIGMA).unwrap(), -6);
        assert!(check_psi_nef(&r));
    }

    #[test]
    fn single_free_point() {
        let m = SurfaceModel::projective_plane();
        let r = eliminate(&m, &Subscheme::new(vec![LocalDatum::free(1)])).unwrap();
        assert_eq!(chain_self_ints(&r, 0), vec![-1]);
        assert_eq!(r.rel_canonical.terms().collect::<Vec<_>>(), vec![(r.chains[0][0], 1)]);
        assert_eq!(r.model.n_exc(), 1);
    }

    #[test]
    fn node_chain_for_c4() {
        let mut m = SurfaceModel::hirzebruch(5);
        let l = m.add_fiber("l").unwrap();
        let d = Subscheme::new(vec![LocalDatum::at_node(SIGMA, l, 3, 3)]);
        let r = eliminate(&m, &d).unwrap();
        let ch = &r.chains[0];
        assert_eq!(chain_self_ints(&r, 0), vec![-2, -2, -1]);
        let on_sigma: Vec<i64> = ch.iter().map(|&g| r.model.curve_intersection(SIGMA, g).unwrap()).collect();
        let on_l: Vec<i64> = ch.iter().map(|&g| r.model.curve_intersection(l, g).unwrap()).collect();
        assert_eq!(on_sigma, vec![1, 0, 0]);
        assert_eq!(on_l, vec![0, 0, 1]);

        let e = Divisor::from_terms([(SIGMA, 3), (l, 2)]);
        let t = transform(&e, &r, 3);
        assert_eq!(t.coeff(SIGMA), 3);
        assert_eq!(t.coeff(l), 2);
        let chain: Vec<i64> = ch.iter().map(|&g| t.coeff(g)).collect();
        assert_eq!(chain, vec![2, 1, 0]);
    }

    #[test]
    fn transform_on_curve_example() {
        let mut m = SurfaceModel::hirzebruch(2);
        let c = m.add_fiber("C").unwrap();
        let r = eliminate(&m, &Subscheme::new(vec![LocalDatum::on_curve(c, 2, 4)])).unwrap();
        let t = transform(&Divisor::from_terms([(c, 3)]), &r, 1);
        let chain: Vec<i64> = r.chains[0].iter().map(|&g| t.coeff(g)).collect();
        assert_eq!(t.coeff(c), 3);
        assert_eq!(chain, vec![2, 4, 3, 2]);
    }

    #[test]
    fn empty_subscheme_is_identity() {
        let m = SurfaceModel::hirzebruch(3);
        let r = eliminate(&m, &Subscheme::empty()).unwrap();
        let e = Divisor::from_terms([(SIGMA, 5)]);
        for s in 0..4 {
            assert_eq!(transform(&e, &r, s), e);
        }
        assert!(check_psi_nef(&r));
        assert_eq!(r.model, m);
    }

    #[test]
    fn blowing_up_an_interior_chain_curve_breaks_psi_nef() {
        let m = SurfaceModel::hirzebruch(1);
        let mut r = eliminate(&m, &Subscheme::new(vec![LocalDatum::free(3)])).unwrap();
        let interior = r.chains[0][1];
        r.model.blow_up_in_place(BlowUpPoint::OnCurve(interior), None).unwrap();
        assert_eq!(r.model.self_intersection(interior).unwrap(), -3);
        assert!(!check_psi_nef(&r));
    }

    #[test]
    fn invalid_data_rejected() {
        let mut m = SurfaceModel::hirzebruch(3);
        let l = m.add_fiber("l").unwrap();
        let l2 = m.add_fiber("l2").unwrap();
        let bad = [
            LocalDatum::on_curve(SIGMA, 0, 2),
            LocalDatum::on_curve(SIGMA, 3, 2),
            LocalDatum::free(0),
            LocalDatum::at_node(l, l2, 1, 1),
            LocalDatum::on_curve(CurveId(42), 1, 1),
        ];
        for d in bad {
            assert!(eliminate(&m, &Subscheme::new(vec![d])).is_err(), "{d:?}");
        }
    }

    #[test]
    fn degree_counts_blow_ups() {
        let mut m = SurfaceModel::hirzebruch(6);
        let l = m.add_fiber("l").unwrap();
        let d = Subscheme::new(vec![
            LocalDatum::on_curve(SIGMA, 1, 2),
            LocalDatum::on_curve(SIGMA, 3, 3),
            LocalDatum::at_node(l, SIGMA, 2, 4),
            LocalDatum::free(2),
        ]);
        let r = eliminate(&m, &d).unwrap();
        assert_eq!(r.model.n_exc() as u32, d.degree());
        assert_eq!(d.degree_on(SIGMA), 1 + 3 + 2);
        assert_eq!(d.degree_on(l), 1);
        for j in 0..d.points.len() {
            let s = chain_self_ints(&r, j);
            assert_eq!(s.last(), Some(&-1));
            assert!(s[..s.len() - 1].iter().all(|&x| x == -2));
        }
        assert!(check_psi_nef(&r));
    }
}
