//! Nonsingular rational surfaces presented as blow-up tapes over `P^2` or a
//! Hirzebruch surface `F_n`.
//!
//! A [`SurfaceModel`] carries its Picard lattice in the basis
//! `{h}` (resp. `{sigma, l}`) followed by the total transforms `e_1..e_N` of the
//! exceptional curves, in tape order. Curves are tracked symbolically: each
//! [`CurveRecord`] stores the class of its current strict transform and nothing
//! else. Incidence between tracked curves is read off the intersection form,
//! and every blow-up is either at a general point, a general point of one
//! tracked curve, or the transverse intersection point of two tracked curves.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod graph;

pub use graph::{DualGraph, GraphVertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseSurface {
    ProjectivePlane,
    Hirzebruch(u32),
}

impl BaseSurface {
    /// Number of base coordinates of a class.
    pub fn rank(self) -> usize {
        match self {
            BaseSurface::ProjectivePlane => 1,
            BaseSurface::Hirzebruch(_) => 2,
        }
    }

    fn form(self, x: &[i64], y: &[i64]) -> i64 {
        match self {
            BaseSurface::ProjectivePlane => x[0] * y[0],
            BaseSurface::Hirzebruch(n) => -(n as i64) * x[0] * y[0] + x[0] * y[1] + x[1] * y[0],
        }
    }

    /// Base coordinates of the canonical class.
    pub fn canonical(self) -> Vec<i64> {
        match self {
            BaseSurface::ProjectivePlane => vec![-3],
            BaseSurface::Hirzebruch(n) => vec![-2, -(n as i64) - 2],
        }
    }

    /// Whether a class with these base coordinates is nef on the unblown base.
    pub fn is_nef(self, base: &[i64]) -> bool {
        match self {
            BaseSurface::ProjectivePlane => base[0] >= 0,
            BaseSurface::Hirzebruch(n) => base[0] >= 0 && base[1] >= n as i64 * base[0],
        }
    }

    /// Whether a class with these base coordinates is effective on the unblown base.
    pub fn is_effective(self, base: &[i64]) -> bool {
        base.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::ProjectivePlane => write!(f, "P2"),
            BaseSurface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

/// Integer class in the lattice basis of a [`SurfaceModel`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub base: Vec<i64>,
    pub exc: Vec<i64>,
}

impl DivisorClass {
    pub fn new(base: Vec<i64>, exc: Vec<i64>) -> Self {
        DivisorClass { base, exc }
    }

    pub fn zero(rank: usize, n_exc: usize) -> Self {
        DivisorClass {
            base: vec![0; rank],
            exc: vec![0; n_exc],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.base.iter().chain(&self.exc).all(|&c| c == 0)
    }

    /// The same class read on a model with more blow-ups (pullback).
    pub fn padded(&self, n_exc: usize) -> Self {
        let mut exc = self.exc.clone();
        exc.resize(n_exc.max(exc.len()), 0);
        DivisorClass {
            base: self.base.clone(),
            exc,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.base.len(), other.base.len(), "base rank mismatch");
        assert_eq!(self.exc.len(), other.exc.len(), "exceptional rank mismatch");
        DivisorClass {
            base: self.base.iter().zip(&other.base).map(|(&a, &b)| f(a, b)).collect(),
            exc: self.exc.iter().zip(&other.exc).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl Add<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<i64> for &DivisorClass {
    type Output = DivisorClass;
    fn mul(self, k: i64) -> DivisorClass {
        DivisorClass {
            base: self.base.iter().map(|c| c * k).collect(),
            exc: self.exc.iter().map(|c| c * k).collect(),
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self * -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveId(pub u32);

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub id: CurveId,
    pub name: String,
    /// Class of the current strict transform.
    pub cls: DivisorClass,
    pub alive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlowUpPoint {
    Generic,
    /// A general point of the curve, off every other tracked curve.
    OnCurve(CurveId),
    /// The transverse intersection point of two tracked curves.
    NodeOf(CurveId, CurveId),
}

impl BlowUpPoint {
    pub fn curves(&self) -> impl Iterator<Item = CurveId> {
        let (a, b) = match *self {
            BlowUpPoint::Generic => (None, None),
            BlowUpPoint::OnCurve(c) => (Some(c), None),
            BlowUpPoint::NodeOf(c, d) => (Some(c), Some(d)),
        };
        a.into_iter().chain(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpRecord {
    pub point: BlowUpPoint,
    pub exceptional: CurveId,
}

/// Formal integer combination of tracked curves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(BTreeMap<CurveId, i64>);

impl Divisor {
    pub fn new() -> Self {
        Divisor(BTreeMap::new())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CurveId, i64)>) -> Self {
        let mut d = Divisor::new();
        for (c, k) in terms {
            d.add_term(c, k);
        }
        d
    }

    pub fn coeff(&self, c: CurveId) -> i64 {
        self.0.get(&c).copied().unwrap_or(0)
    }

    pub fn set(&mut self, c: CurveId, k: i64) {
        if k == 0 {
            self.0.remove(&c);
        } else {
            self.0.insert(c, k);
        }
    }

    pub fn add_term(&mut self, c: CurveId, k: i64) {
        let v = self.coeff(c) + k;
        self.set(c, v);
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveId, i64)> + '_ {
        self.0.iter().map(|(&c, &k)| (c, k))
    }

    /// Curves with nonzero coefficient, in creation order.
    pub fn support(&self) -> Vec<CurveId> {
        self.0.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&k| k > 0)
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        Divisor::from_terms(self.terms().map(|(c, v)| (c, v * k)))
    }

    pub fn combine(&self, other: &Divisor, k: i64) -> Divisor {
        let mut d = self.clone();
        for (c, v) in other.terms() {
            d.add_term(c, k * v);
        }
        d
    }
}

impl Serialize for Divisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms())
    }
}

impl<'de> Deserialize<'de> for Divisor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<(CurveId, i64)> = Vec::deserialize(d)?;
        Ok(Divisor::from_terms(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    base: BaseSurface,
    tape: Vec<BlowUpRecord>,
    curves: Vec<CurveRecord>,
}

impl SurfaceModel {
    /// `F_n` with its minimal section tracked as `sigma`.
    pub fn hirzebruch(n: u32) -> Self {
        let mut m = SurfaceModel {
            base: BaseSurface::Hirzebruch(n),
            tape: Vec::new(),
            curves: Vec::new(),
        };
        m.push_curve("sigma".to_string(), DivisorClass::new(vec![1, 0], vec![]));
        m
    }

    pub fn projective_plane() -> Self {
        SurfaceModel {
            base: BaseSurface::ProjectivePlane,
            tape: Vec::new(),
            curves: Vec::new(),
        }
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn tape(&self) -> &[BlowUpRecord] {
        &self.tape
    }

    pub fn curves(&self) -> &[CurveRecord] {
        &self.curves
    }

    pub fn n_exc(&self) -> usize {
        self.tape.len()
    }

    fn push_curve(&mut self, name: String, cls: DivisorClass) -> CurveId {
        let id = CurveId(self.curves.len() as u32);
        self.curves.push(CurveRecord {
            id,
            name,
            cls,
            alive: true,
        });
        id
    }

    /// Tracks a general fiber of `F_n` (through no blown-up point).
    pub fn add_fiber(&mut self, name: impl Into<String>) -> Result<CurveId> {
        match self.base {
            BaseSurface::Hirzebruch(_) => {
                let cls = DivisorClass::new(vec![0, 1], vec![0; self.n_exc()]);
                Ok(self.push_curve(name.into(), cls))
            }
            BaseSurface::ProjectivePlane => Err(Error::InvalidBlowUp("P2 has no fibers".into())),
        }
    }

    /// Tracks a general line of `P^2` (through no blown-up point, no triple points).
    pub fn add_line(&mut self, name: impl Into<String>) -> Result<CurveId> {
        match self.base {
            BaseSurface::ProjectivePlane => {
                let cls = DivisorClass::new(vec![1], vec![0; self.n_exc()]);
                Ok(self.push_curve(name.into(), cls))
            }
            BaseSurface::Hirzebruch(_) => Err(Error::InvalidBlowUp("lines live on P2".into())),
        }
    }

    pub fn curve(&self, id: CurveId) -> Result<&CurveRecord> {
        self.curves.get(id.0 as usize).ok_or(Error::UnknownCurve(id))
    }

    pub fn find(&self, name: &str) -> Option<CurveId> {
        self.curves.iter().find(|c| c.name == name).map(|c| c.id)
    }

    pub fn name(&self, id: CurveId) -> &str {
        self.curves.get(id.0 as usize).map_or("?", |c| c.name.as_str())
    }

    fn check_basis(&self, d: &DivisorClass) -> Result<()> {
        if d.base.len() != self.base.rank() || d.exc.len() != self.n_exc() {
            return Err(Error::BasisMismatch {
                expected_base: self.base.rank(),
                expected_exc: self.n_exc(),
                got_base: d.base.len(),
                got_exc: d.exc.len(),
            });
        }
        Ok(())
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        self.check_basis(d1)?;
        self.check_basis(d2)?;
        Ok(self.form(d1, d2))
    }

    fn form(&self, d1: &DivisorClass, d2: &DivisorClass) -> i64 {
        let exc: i64 = d1.exc.iter().zip(&d2.exc).map(|(a, b)| a * b).sum();
        self.base.form(&d1.base, &d2.base) - exc
    }

    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(self.base.canonical(), vec![1; self.n_exc()])
    }

    pub fn k_squared(&self) -> i64 {
        let k = self.canonical_class();
        self.form(&k, &k)
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass::zero(self.base.rank(), self.n_exc())
    }

    /// Base class `coords` pulled back to this model.
    pub fn base_class(&self, coords: &[i64]) -> Result<DivisorClass> {
        let d = DivisorClass::new(coords.to_vec(), vec![0; self.n_exc()]);
        self.check_basis(&d)?;
        Ok(d)
    }

    pub fn curve_class(&self, id: CurveId) -> Result<&DivisorClass> {
        Ok(&self.curve(id)?.cls)
    }

    pub fn self_intersection(&self, id: CurveId) -> Result<i64> {
        let c = &self.curve(id)?.cls;
        Ok(self.form(c, c))
    }

    pub fn curve_intersection(&self, a: CurveId, b: CurveId) -> Result<i64> {
        Ok(self.form(&self.curve(a)?.cls, &self.curve(b)?.cls))
    }

    pub fn divisor_class(&self, d: &Divisor) -> Result<DivisorClass> {
        let mut acc = self.zero_class();
        for (c, k) in d.terms() {
            acc = &acc + &(&self.curve(c)?.cls * k);
        }
        Ok(acc)
    }

    /// Intersection of a class with a tracked curve.
    pub fn dot_curve(&self, d: &DivisorClass, c: CurveId) -> Result<i64> {
        self.intersect(d, &self.curve(c)?.cls)
    }

    /// Closed nefness test; only decidable here on the unblown base.
    pub fn closed_nef(&self, d: &DivisorClass) -> Option<bool> {
        (self.tape.is_empty() && d.base.len() == self.base.rank()).then(|| self.base.is_nef(&d.base))
    }

    fn validate_point(&self, point: &BlowUpPoint) -> Result<()> {
        match *point {
            BlowUpPoint::Generic => Ok(()),
            BlowUpPoint::OnCurve(c) => self.curve(c).map(|_| ()),
            BlowUpPoint::NodeOf(c, d) => {
                if c == d {
                    return Err(Error::InvalidBlowUp(format!("node of {c} with itself")));
                }
                let k = self.curve_intersection(c, d)?;
                if k != 1 {
                    return Err(Error::InvalidBlowUp(format!(
                        "{} and {} meet with intersection {k}, not in a single transverse point",
                        self.name(c),
                        self.name(d)
                    )));
                }
                Ok(())
            }
        }
    }

    /// Blows up in place and returns the new exceptional curve.
    pub fn blow_up_in_place(&mut self, point: BlowUpPoint, name: Option<String>) -> Result<CurveId> {
        self.validate_point(&point)?;
        let idx = self.n_exc();
        for c in &mut self.curves {
            c.cls.exc.push(0);
        }
        for c in point.curves() {
            self.curves[c.0 as usize].cls.exc[idx] = -1;
        }
        let mut exc = vec![0; idx + 1];
        exc[idx] = 1;
        let cls = DivisorClass::new(vec![0; self.base.rank()], exc);
        let name = name.unwrap_or_else(|| format!("e{}", idx + 1));
        let id = self.push_curve(name, cls);
        self.tape.push(BlowUpRecord {
            point,
            exceptional: id,
        });
        Ok(id)
    }

    /// Blows up and returns the new model together with the new exceptional curve.
    pub fn blow_up(&self, point: BlowUpPoint) -> Result<(SurfaceModel, CurveId)> {
        let mut m = self.clone();
        let id = m.blow_up_in_place(point, None)?;
        Ok((m, id))
    }

    /// Dual graph of the listed curves, optionally weighted by a divisor.
    pub fn dual_graph(&self, support: &[CurveId], weights: Option<&Divisor>) -> Result<DualGraph> {
        let mut ids = support.to_vec();
        ids.sort();
        ids.dedup();
        let mut vertices = Vec::with_capacity(ids.len());
        for &id in &ids {
            vertices.push(GraphVertex {
                curve: id,
                name: self.name(id).to_string(),
                self_int: self.self_intersection(id)?,
                coeff: weights.map(|w| w.coeff(id)),
            });
        }
        let mut edges = Vec::new();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if self.curve_intersection(ids[i], ids[j])? > 0 {
                    edges.push((i, j));
                }
            }
        }
        Ok(DualGraph { vertices, edges })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigma_squared_on_f4() {
        let m = SurfaceModel::hirzebruch(4);
        let s = m.curve_class(CurveId(0)).unwrap().clone();
        assert_eq!(m.intersect(&s, &s).unwrap(), -4);
    }

    #[test]
    fn anticanonical_pairing_on_f8() {
        let m = SurfaceModel::hirzebruch(8);
        let d1 = m.base_class(&[2, 10]).unwrap();
        let d2 = m.base_class(&[6, 48]).unwrap();
        assert_eq!(m.intersect(&d1, &d2).unwrap(), 60);
        assert_eq!(m.intersect(&m.zero_class(), &d2).unwrap(), 0);
    }

    #[test]
    fn basis_mismatch_is_structural() {
        let m = SurfaceModel::hirzebruch(3);
        let bad = DivisorClass::new(vec![1], vec![]);
        assert!(matches!(
            m.intersect(&bad, &m.zero_class()),
            Err(Error::BasisMismatch { .. })
        ));
        let (m1, _) = m.blow_up(BlowUpPoint::Generic).unwrap();
        let stale = m.base_class(&[1, 0]).unwrap();
        assert!(m1.intersect(&stale, &stale).is_err());
    }

    #[test]
    fn canonical_classes() {
        let m = SurfaceModel::hirzebruch(8);
        assert_eq!(m.canonical_class(), DivisorClass::new(vec![-2, -10], vec![]));
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(p2.canonical_class().base, vec![-3]);
        assert_eq!(p2.k_squared(), 9);
        let (m5, _) = SurfaceModel::hirzebruch(5).blow_up(BlowUpPoint::Generic).unwrap();
        assert_eq!(m5.k_squared(), 7);
    }

    #[test]
    fn blow_up_on_sigma() {
        let sigma = CurveId(0);
        let (m, e) = SurfaceModel::hirzebruch(4).blow_up(BlowUpPoint::OnCurve(sigma)).unwrap();
        assert_eq!(m.curve_class(sigma).unwrap(), &DivisorClass::new(vec![1, 0], vec![-1]));
        assert_eq!(m.self_intersection(sigma).unwrap(), -5);
        assert_eq!(m.self_intersection(e).unwrap(), -1);
        assert_eq!(m.curve_intersection(sigma, e).unwrap(), 1);

        for a in 2..8u32 {
            let (m, _) = SurfaceModel::hirzebruch(2 * a - 1)
                .blow_up(BlowUpPoint::OnCurve(sigma))
                .unwrap();
            assert_eq!(m.self_intersection(sigma).unwrap(), -2 * a as i64);
        }
    }

    #[test]
    fn blow_up_node_separates() {
        let mut m = SurfaceModel::hirzebruch(5);
        let l = m.add_fiber("l_1").unwrap();
        let sigma = CurveId(0);
        let (m, e) = m.blow_up(BlowUpPoint::NodeOf(sigma, l)).unwrap();
        assert_eq!(m.curve_intersection(sigma, l).unwrap(), 0);
        assert_eq!(m.curve_intersection(sigma, e).unwrap(), 1);
        assert_eq!(m.curve_intersection(l, e).unwrap(), 1);
        // now they no longer meet
        assert!(matches!(
            m.blow_up(BlowUpPoint::NodeOf(sigma, l)),
            Err(Error::InvalidBlowUp(_))
        ));
    }

    #[test]
    fn node_requires_meeting_curves() {
        let mut m = SurfaceModel::hirzebruch(2);
        let l1 = m.add_fiber("l_1").unwrap();
        let l2 = m.add_fiber("l_2").unwrap();
        assert!(m.blow_up(BlowUpPoint::NodeOf(l1, l2)).is_err());
        assert!(m.blow_up(BlowUpPoint::OnCurve(CurveId(9))).is_err());
    }

    #[test]
    fn graph_of_single_curve() {
        let m = SurfaceModel::hirzebruch(3);
        let g = m.dual_graph(&[CurveId(0)], None).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
        assert_eq!(g.vertices[0].self_int, -3);
    }

    fn arb_class(rank: usize, n_exc: usize) -> impl Strategy<Value = DivisorClass> {
        (
            proptest::collection::vec(-20i64..20, rank),
            proptest::collection::vec(-20i64..20, n_exc),
        )
            .prop_map(|(b, e)| DivisorClass::new(b, e))
    }

    fn arb_model() -> impl Strategy<Value = SurfaceModel> {
        (0u32..7, proptest::collection::vec(0usize..4, 0..6)).prop_map(|(n, steps)| {
            let mut m = SurfaceModel::hirzebruch(n);
            m.add_fiber("l").unwrap();
            for s in steps {
                let last = CurveId(m.curves().len() as u32 - 1);
                let pt = match s {
                    0 => BlowUpPoint::Generic,
                    1 => BlowUpPoint::OnCurve(CurveId(0)),
                    2 => BlowUpPoint::OnCurve(last),
                    _ => BlowUpPoint::OnCurve(CurveId(1)),
                };
                m.blow_up_in_place(pt, None).unwrap();
            }
            m
        })
    }

    proptest! {
        #[test]
        fn form_is_symmetric_bilinear(
            (m, x, y, z) in arb_model().prop_flat_map(|m| {
                let (r, n) = (m.base().rank(), m.n_exc());
                (Just(m), arb_class(r, n), arb_class(r, n), arb_class(r, n))
            }),
            k in -5i64..5,
        ) {
            let xy = m.intersect(&x, &y).unwrap();
            prop_assert_eq!(xy, m.intersect(&y, &x).unwrap());
            let lhs = m.intersect(&(&x + &(&z * k)), &y).unwrap();
            prop_assert_eq!(lhs, xy + k * m.intersect(&z, &y).unwrap());
        }

        #[test]
        fn self_intersections_follow_the_tape(m in arb_model()) {
            prop_assert_eq!(m.k_squared(), 8 - m.n_exc() as i64);
            let base_sq = |id: CurveId| -> i64 {
                if id == CurveId(0) {
                    match m.base() { BaseSurface::Hirzebruch(n) => -(n as i64), _ => 1 }
                } else if id == CurveId(1) { 0 } else { -1 }
            };
            for c in m.curves() {
                let hits = m.tape().iter().filter(|r| r.point.curves().any(|x| x == c.id)).count() as i64;
                prop_assert_eq!(m.self_intersection(c.id).unwrap(), base_sq(c.id) - hits);
            }
        }
    }

    #[test]
    fn effectivity_on_unblown_hirzebruch() {
        // inventory of irreducible curve classes: sigma, fibers, and sections
        // xsigma + yl with y >= nx (base point free)
        for n in 0..5i64 {
            let base = BaseSurface::Hirzebruch(n as u32);
            let mut inventory = vec![(1i64, 0i64), (0, 1)];
            for x in 1..4 {
                for y in n * x..n * x + 4 {
                    inventory.push((x, y));
                }
            }
            let (lo, hi) = (-3i64, 8i64);
            let w = (hi - lo) as usize;
            let idx = |p: i64, q: i64| ((p - lo) as usize) * w + (q - lo) as usize;
            let mut reach = vec![false; w * w];
            reach[idx(0, 0)] = true;
            for p in 0..hi {
                for q in 0..hi {
                    if reach[idx(p, q)] {
                        for &(x, y) in &inventory {
                            if p + x < hi && q + y < hi {
                                reach[idx(p + x, q + y)] = true;
                            }
                        }
                    }
                }
            }
            for p in lo..hi {
                for q in lo..hi {
                    assert_eq!(base.is_effective(&[p, q]), reach[idx(p, q)], "n={n} ({p},{q})");
                }
            }
        }
    }
}
