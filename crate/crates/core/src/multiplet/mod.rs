//! Basic pairs and (pseudo-)fundamental multiplets.
//!
//! A multiplet `(M_b, E_b; Δ_b, ..., Δ_1)` is descended level by level:
//! `E_{i-1} = E_i^{Δ_i, a-i}` and `L_{i-1} = L_i^{Δ_i, i}`, where
//! `L_i ~ -a K_{M_i} - E_i` is the fundamental divisor. The bottom level is
//! the basic pair `(M_0, E_0)`, i.e. the minimal resolution of the log del
//! Pezzo surface together with `-a K_{M/S}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::elimination::{eliminate_tagged, transform, EliminationResult, Subscheme};
use crate::error::{Error, Result};
use crate::lattice::{CurveId, Divisor, DivisorClass, SurfaceModel};

pub mod catalog;
mod certificate;
mod index;
pub mod json;
mod lemmas;

pub use catalog::CatalogType;
pub use certificate::{check_basic_pair, nef_certificate, CertificateReport};
pub use index::{certificate_index_is_a, component_indices, index_of};
pub use lemmas::{local_lemma_checks, Lemma, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalMultiplet {
    pub a: u32,
    pub b: u32,
    pub top: SurfaceModel,
    pub e_top: Divisor,
    /// `[Δ_b, ..., Δ_1]`; each `Δ_i` refers to curves of the model `M_i`.
    pub deltas: Vec<Subscheme>,
}

impl FundamentalMultiplet {
    pub fn new(a: u32, b: u32, top: SurfaceModel, e_top: Divisor, deltas: Vec<Subscheme>) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidMultiplet(format!("a = {a} must be at least 2")));
        }
        if b == 0 || b >= a {
            return Err(Error::InvalidMultiplet(format!("length b = {b} outside 1..{a}")));
        }
        if deltas.len() != b as usize {
            return Err(Error::InvalidMultiplet(format!(
                "{} subschemes given for length {b}",
                deltas.len()
            )));
        }
        Ok(FundamentalMultiplet {
            a,
            b,
            top,
            e_top,
            deltas,
        })
    }

    /// `Δ_i` for `1 <= i <= b`.
    pub fn delta(&self, i: u32) -> &Subscheme {
        &self.deltas[(self.b - i) as usize]
    }

    pub fn descend(&self) -> Result<Ladder> {
        descend(self)
    }

    pub fn volume(&self) -> Result<BigRational> {
        volume(&self.descend()?)
    }
}

/// One rung `(M_i, E_i, L_i)` of a ladder, with the elimination of `Δ_i`.
#[derive(Clone, Debug)]
pub struct Level {
    pub i: u32,
    pub model: SurfaceModel,
    pub e: Divisor,
    pub l: DivisorClass,
    pub delta: Subscheme,
    /// Elimination `M_{i-1} -> M_i` of `Δ_i`; `None` at level 0.
    pub elimination: Option<EliminationResult>,
}

#[derive(Clone, Debug)]
pub struct Ladder {
    pub a: u32,
    pub b: u32,
    /// Indexed by level: `levels[i]` is `(M_i, E_i, L_i)`.
    pub levels: Vec<Level>,
}

/// `L ~ -aK - [E]` on `model`.
pub fn fundamental_class(model: &SurfaceModel, a: u32, e: &Divisor) -> Result<DivisorClass> {
    let k = model.canonical_class();
    Ok(&(&k * -(a as i64)) - &model.divisor_class(e)?)
}

pub fn descend(m: &FundamentalMultiplet) -> Result<Ladder> {
    let a = m.a as i64;
    let mut model = m.top.clone();
    let mut e = m.e_top.clone();
    for (c, _) in e.terms() {
        model.curve(c)?;
    }
    let mut l = fundamental_class(&model, m.a, &e)?;
    let mut levels = Vec::with_capacity(m.b as usize + 1);
    for i in (1..=m.b).rev() {
        let delta = m.delta(i).clone();
        let res = eliminate_tagged(&model, &delta, &format!("D{i}"))?;
        let e_next = transform(&e, &res, a - i as i64);
        let l_next = res.transform_class(&l, i as i64);
        let expected = fundamental_class(&res.model, m.a, &e_next)?;
        if l_next != expected {
            return Err(Error::Inconsistent(format!(
                "L_{} disagrees with -aK - E_{} after eliminating Δ_{i}",
                i - 1,
                i - 1
            )));
        }
        let next_model = res.model.clone();
        levels.push(Level {
            i,
            model,
            e,
            l,
            delta,
            elimination: Some(res),
        });
        model = next_model;
        e = e_next;
        l = l_next;
    }
    levels.push(Level {
        i: 0,
        model,
        e,
        l,
        delta: Subscheme::empty(),
        elimination: None,
    });
    levels.reverse();
    Ok(Ladder {
        a: m.a,
        b: m.b,
        levels,
    })
}

impl Ladder {
    pub fn level(&self, i: u32) -> &Level {
        &self.levels[i as usize]
    }

    pub fn top(&self) -> &Level {
        self.level(self.b)
    }

    pub fn bottom(&self) -> &Level {
        self.level(0)
    }

    /// Nefness of `K + L_0`, certified down the ladder from the closed
    /// criterion on the unblown top surface. `None` when the top model is
    /// itself blown up and no closed criterion applies.
    pub fn certified_nef(&self) -> Option<bool> {
        let top = self.top();
        let bk_l = &(&top.model.canonical_class() * self.b as i64) + &top.l;
        let mut ok = top.model.closed_nef(&bk_l)?;
        for i in 1..=self.b {
            let lower = self.level(i - 1);
            ok &= nef_certificate(&lower.model, &lower.l, &lower.e);
        }
        Some(ok)
    }

    /// Whether `(b+1)K + L_b` fails to be nef (fundamental rather than pseudo-fundamental).
    pub fn is_fundamental(&self) -> Option<bool> {
        let top = self.top();
        let c = &(&top.model.canonical_class() * (self.b as i64 + 1)) + &top.l;
        top.model.closed_nef(&c).map(|nef| !nef)
    }

    /// `((b+1)K + L_b . γ) >= 0` for the `(-1)`-curves `γ` of the top surface.
    pub fn top_minus_one_curves_ok(&self) -> bool {
        let top = self.top();
        let c = &(&top.model.canonical_class() * (self.b as i64 + 1)) + &top.l;
        top.model
            .curves()
            .iter()
            .filter(|r| r.alive && top.model.self_intersection(r.id) == Ok(-1))
            .all(|r| top.model.dot_curve(&c, r.id).map_or(false, |v| v >= 0))
    }

    pub fn basic_pair(&self) -> BasicPair {
        let bottom = self.bottom();
        BasicPair {
            a: self.a,
            model: bottom.model.clone(),
            e0: bottom.e.clone(),
            l0: bottom.l.clone(),
            certified_nef: self.certified_nef(),
        }
    }

    /// `Σ_{j <= i} w(j) deg Δ_j`.
    fn weighted_degree(&self, i: u32, w: impl Fn(i64) -> i64) -> i64 {
        (1..=i).map(|j| w(j as i64) * self.level(j).delta.degree() as i64).sum()
    }
}

#[derive(Clone, Debug)]
pub struct BasicPair {
    pub a: u32,
    pub model: SurfaceModel,
    pub e0: Divisor,
    pub l0: DivisorClass,
    /// Nefness of `K + L_0` as certified by the ladder this pair came from.
    pub certified_nef: Option<bool>,
}

impl BasicPair {
    /// Builds a pair directly; `L_0` is derived from `E_0`.
    pub fn new(a: u32, model: SurfaceModel, e0: Divisor) -> Result<Self> {
        let l0 = fundamental_class(&model, a, &e0)?;
        Ok(BasicPair {
            a,
            model,
            e0,
            l0,
            certified_nef: None,
        })
    }

    /// Tracked curves contracted by the fundamental divisor: the support of
    /// `E_0` together with the `L_0`-trivial curves of coefficient zero.
    pub fn exceptional_locus(&self) -> Vec<CurveId> {
        self.model
            .curves()
            .iter()
            .filter(|c| c.alive && self.model.intersect(&self.l0, &c.cls) == Ok(0))
            .map(|c| c.id)
            .collect()
    }
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-K_S^2)` from the top of the ladder, cross-checked against `(L_0^2)/a^2`.
pub fn volume(ladder: &Ladder) -> Result<BigRational> {
    let a = ladder.a as i64;
    let top = ladder.top();
    let kl = -top.model.intersect(&top.model.canonical_class(), &top.l)?;
    let from_top = rational(kl - ladder.weighted_degree(ladder.b, |j| j), a);
    let bottom = ladder.bottom();
    let l0_sq = bottom.model.intersect(&bottom.l, &bottom.l)?;
    let from_bottom = rational(l0_sq, a * a);
    if from_top != from_bottom {
        return Err(Error::Inconsistent(format!(
            "volume routes disagree: {from_top} from the top level, {from_bottom} from L_0^2"
        )));
    }
    Ok(from_top)
}

/// Checks the four ladder identities at every level; returns the failures.
pub fn identity_failures(ladder: &Ladder) -> Vec<String> {
    let mut out = Vec::new();
    let a = ladder.a as i64;
    let bottom = ladder.bottom();
    let m0 = &bottom.model;
    let kl0 = &m0.canonical_class() + &bottom.l;
    let kl_l0 = m0.intersect(&kl0, &bottom.l).unwrap_or(i64::MIN);
    let l0_sq = m0.intersect(&bottom.l, &bottom.l).unwrap_or(i64::MIN);
    for lv in &ladder.levels {
        let i = lv.i;
        let m = &lv.model;
        let k = m.canonical_class();
        let ec = match m.divisor_class(&lv.e) {
            Ok(c) => c,
            Err(err) => {
                out.push(format!("level {i}: {err}"));
                continue;
            }
        };
        let le = m.intersect(&lv.l, &ec).unwrap_or(i64::MIN);
        let want = ladder.weighted_degree(i, |j| j * (a - j));
        if le != want {
            out.push(format!("level {i}: (L.E) = {le}, expected {want}"));
        }
        let kl_l = m.intersect(&(&k + &lv.l), &lv.l).unwrap_or(i64::MIN);
        let want = ladder.weighted_degree(i, |j| j * (j - 1));
        if kl_l - kl_l0 != want {
            out.push(format!("level {i}: (K+L.L) gap = {}, expected {want}", kl_l - kl_l0));
        }
        for c in lv.e.support() {
            let lc = m.dot_curve(&lv.l, c).unwrap_or(i64::MIN);
            let want: i64 = (1..=i)
                .map(|j| j as i64 * ladder.level(j).delta.degree_on(c) as i64)
                .sum();
            if lc != want {
                out.push(format!("level {i}: (L.{}) = {lc}, expected {want}", m.name(c)));
            }
        }
        let kl = -m.intersect(&k, &lv.l).unwrap_or(i64::MIN);
        let rhs = kl - ladder.weighted_degree(i, |j| j);
        if l0_sq != a * rhs {
            out.push(format!("level {i}: L_0^2 = {l0_sq}, expected a * {rhs}"));
        }
    }
    out
}

pub fn identities_check(ladder: &Ladder) -> bool {
    identity_failures(ladder).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::LocalDatum;

    const SIGMA: CurveId = CurveId(0);

    fn coeffs(level: &Level) -> Vec<(String, i64)> {
        level
            .e
            .terms()
            .map(|(c, k)| (level.model.name(c).to_string(), k))
            .collect()
    }

    #[test]
    fn o_type_descends_to_itself() {
        for a in 2..9 {
            let m = CatalogType::O.configurations(a).unwrap().remove(0);
            let ladder = m.descend().unwrap();
            let bottom = ladder.bottom();
            assert_eq!(bottom.model.base(), crate::lattice::BaseSurface::Hirzebruch(2 * a));
            assert_eq!(bottom.e, Divisor::from_terms([(SIGMA, a as i64 - 1)]));
            assert!(identities_check(&ladder));
            let af = a as i64;
            assert_eq!(volume(&ladder).unwrap(), rational(2 * af * af + 4 * af + 2, af));
        }
    }

    #[test]
    fn a5_descent() {
        let m = CatalogType::A5.configurations(5).unwrap().remove(0);
        let ladder = m.descend().unwrap();
        let bottom = ladder.bottom();
        assert_eq!(coeffs(bottom), vec![("sigma".into(), 4), ("l".into(), 2)]);
        assert_eq!(bottom.model.self_intersection(SIGMA).unwrap(), -8);
        assert_eq!(volume(&ladder).unwrap(), rational(54, 5));
        let kl = -ladder.top().model.intersect(&ladder.top().model.canonical_class(), &ladder.top().l).unwrap();
        assert_eq!(kl, 60);
    }

    #[test]
    fn b4_descent() {
        let m = CatalogType::B4.configurations(4).unwrap().remove(0);
        let ladder = m.descend().unwrap();
        let bottom = ladder.bottom();
        assert_eq!(
            coeffs(bottom),
            vec![("sigma".into(), 3), ("Gamma_D2P1_1".into(), 1), ("Gamma_D2P1_2".into(), 2)]
        );
        let g = bottom.model.dual_graph(&bottom.e.support(), Some(&bottom.e)).unwrap();
        let selfs: Vec<i64> = g.vertices.iter().map(|v| v.self_int).collect();
        assert_eq!(selfs, vec![-6, -2, -2]);
        // sigma - Gamma_2 - Gamma_1
        assert_eq!(g.edges, vec![(0, 2), (1, 2)]);
        assert_eq!(volume(&ladder).unwrap(), rational(8, 1));
    }

    #[test]
    fn c4_descent_and_identities() {
        let m = CatalogType::C4.configurations(4).unwrap().remove(0);
        let ladder = m.descend().unwrap();
        let top = ladder.top();
        let ec = top.model.divisor_class(&top.e).unwrap();
        assert_eq!(top.model.intersect(&top.l, &ec).unwrap(), 2 * 2 + 3 * 3);
        let bottom = ladder.bottom();
        let mut got = coeffs(bottom);
        got.sort();
        assert_eq!(
            got,
            vec![
                ("Gamma_D1P1_1".into(), 2),
                ("Gamma_D1P1_2".into(), 1),
                ("l".into(), 2),
                ("sigma".into(), 3)
            ]
        );
        let l = bottom.model.find("l").unwrap();
        assert_eq!(bottom.model.self_intersection(SIGMA).unwrap(), -6);
        assert_eq!(bottom.model.self_intersection(l).unwrap(), -4);
        assert!(identities_check(&ladder));
        assert_eq!(volume(&ladder).unwrap(), rational(8, 1));
    }

    #[test]
    fn empty_deltas_give_zero_sums() {
        let m = CatalogType::O.configurations(6).unwrap().remove(0);
        let ladder = m.descend().unwrap();
        for lv in &ladder.levels {
            for c in lv.e.support() {
                assert_eq!(lv.model.dot_curve(&lv.l, c).unwrap(), 0);
            }
        }
    }

    #[test]
    fn identities_catch_a_corrupted_ladder() {
        let m = CatalogType::B4.configurations(4).unwrap().remove(0);
        let mut ladder = m.descend().unwrap();
        ladder.levels[1].delta = Subscheme::new(vec![LocalDatum::free(1)]);
        assert!(!identities_check(&ladder));
    }

    #[test]
    fn invalid_multiplets_rejected() {
        let top = SurfaceModel::hirzebruch(3);
        let e = Divisor::from_terms([(SIGMA, 1)]);
        assert!(FundamentalMultiplet::new(4, 0, top.clone(), e.clone(), vec![]).is_err());
        assert!(FundamentalMultiplet::new(4, 4, top.clone(), e.clone(), vec![Subscheme::empty(); 4]).is_err());
        assert!(FundamentalMultiplet::new(4, 2, top.clone(), e.clone(), vec![Subscheme::empty()]).is_err());
        let bad = FundamentalMultiplet::new(
            4,
            1,
            top,
            e,
            vec![Subscheme::new(vec![LocalDatum::on_curve(CurveId(7), 1, 1)])],
        )
        .unwrap();
        assert!(matches!(bad.descend(), Err(Error::UnknownCurve(_))));
    }
}
