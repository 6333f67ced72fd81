//! Complete fans in `Z^2`: validation, Hirzebruch-Jung resolution,
//! discrepancies, Gorenstein index and anticanonical degree.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::lcm;
use crate::error::{Error, Result};
use crate::lattice::{CurveId, DualGraph, GraphVertex};

pub type Ray = (i64, i64);

fn det(v: Ray, w: Ray) -> i64 {
    v.0 * w.1 - v.1 * w.0
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact angular comparison of nonzero vectors, starting from the positive x-axis.
fn angle_cmp(v: Ray, w: Ray) -> Ordering {
    let half = |r: Ray| u8::from(!(r.1 > 0 || (r.1 == 0 && r.0 > 0)));
    half(v).cmp(&half(w)).then_with(|| 0.cmp(&det(v, w)))
}

/// Complete fan given by its rays in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Ray>", into = "Vec<Ray>")]
pub struct Fan2D {
    rays: Vec<Ray>,
}

impl TryFrom<Vec<Ray>> for Fan2D {
    type Error = Error;
    fn try_from(rays: Vec<Ray>) -> Result<Self> {
        Fan2D::new(rays)
    }
}

impl From<Fan2D> for Vec<Ray> {
    fn from(f: Fan2D) -> Self {
        f.rays
    }
}

impl Fan2D {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        if rays.len() < 3 {
            return Err(Error::InvalidFan(format!("{} rays cannot span a complete fan", rays.len())));
        }
        for &r in &rays {
            if r.0.gcd(&r.1) != 1 {
                return Err(Error::InvalidFan(format!("ray {r:?} is not primitive")));
            }
        }
        let n = rays.len();
        for i in 0..n {
            let (v, w) = (rays[i], rays[(i + 1) % n]);
            if det(v, w) <= 0 {
                return Err(Error::InvalidFan(format!("cone <{v:?}, {w:?}> is not strictly convex and positively oriented")));
            }
        }
        // consecutive turns are each below pi; the rays wind once iff
        // the angle order is a rotation of the given order
        let start = (0..n).min_by(|&i, &j| angle_cmp(rays[i], rays[j])).unwrap_or(0);
        let winds_once = (1..n).all(|k| angle_cmp(rays[(start + k - 1) % n], rays[(start + k) % n]) == Ordering::Less);
        if !winds_once {
            return Err(Error::InvalidFan("rays wind around the origin more than once".into()));
        }
        Ok(Fan2D { rays })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// Consecutive ray pairs `<v_i, v_{i+1}>`.
    pub fn cones(&self) -> impl Iterator<Item = (Ray, Ray)> + '_ {
        let n = self.rays.len();
        (0..n).map(move |i| (self.rays[i], self.rays[(i + 1) % n]))
    }

    pub fn is_smooth(&self) -> bool {
        self.cones().all(|(v, w)| det(v, w) == 1)
    }

    /// `c_i` with `v_{i-1} + v_{i+1} = c_i v_i`; requires a smooth fan.
    pub fn self_intersections(&self) -> Result<Vec<i64>> {
        if !self.is_smooth() {
            return Err(Error::InvalidFan("self-intersections need a smooth fan".into()));
        }
        let n = self.rays.len();
        Ok((0..n)
            .map(|i| {
                let (p, v, q) = (self.rays[(i + n - 1) % n], self.rays[i], self.rays[(i + 1) % n]);
                let s = (p.0 + q.0, p.1 + q.1);
                // s = c v with v primitive; D_i^2 = -c
                let c = if v.0 != 0 { s.0 / v.0 } else { s.1 / v.1 };
                -c
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertedRay {
    pub ray: Ray,
    /// Index of the original cone `<v_k, v_{k+1}>` containing the ray.
    pub cone: usize,
    /// Coefficient of the ray's divisor in `K_M - π^* K_S`.
    pub discrepancy: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedFan {
    pub original: Fan2D,
    pub fan: Fan2D,
    pub inserted: Vec<InsertedRay>,
}

/// Hirzebruch-Jung chain of the cone `<v, w>`, in order from `v` to `w`.
fn hj_chain(v: Ray, w: Ray) -> Vec<Ray> {
    let mut out = Vec::new();
    let (mut v, w) = (v, w);
    let mut d = det(v, w);
    while d > 1 {
        // u = (w + q v)/d with 0 <= q < d; then det(v, u) = 1 and det(u, w) = q
        let q = (0..d)
            .find(|q| (w.0 + q * v.0) % d == 0 && (w.1 + q * v.1) % d == 0)
            .expect("the cone lattice contains a point with det(v, u) = 1");
        let u = ((w.0 + q * v.0) / d, (w.1 + q * v.1) / d);
        out.push(u);
        v = u;
        d = q;
    }
    out
}

/// `λ + μ - 1` for `u = λ v + μ w`.
fn discrepancy(v: Ray, w: Ray, u: Ray) -> BigRational {
    let d = det(v, w);
    ratio(det(u, w) + det(v, u) - d, d)
}

pub fn hj_resolve(fan: &Fan2D) -> ResolvedFan {
    let mut rays = Vec::new();
    let mut inserted = Vec::new();
    for (k, (v, w)) in fan.cones().enumerate() {
        rays.push(v);
        for u in hj_chain(v, w) {
            rays.push(u);
            inserted.push(InsertedRay {
                ray: u,
                cone: k,
                discrepancy: discrepancy(v, w, u),
            });
        }
    }
    ResolvedFan {
        original: fan.clone(),
        fan: Fan2D::new(rays).expect("refining a complete fan keeps it complete"),
        inserted,
    }
}

impl ResolvedFan {
    fn discrepancy_of(&self, r: Ray) -> BigRational {
        self.inserted
            .iter()
            .find(|x| x.ray == r)
            .map_or_else(BigRational::zero, |x| x.discrepancy.clone())
    }

    /// Coefficients of `π^*(-K_S) = Σ (1 + a_j) D_j` over the refined rays.
    pub fn anticanonical_pullback(&self) -> Vec<BigRational> {
        self.fan
            .rays()
            .iter()
            .map(|&r| BigRational::one() + self.discrepancy_of(r))
            .collect()
    }

    /// Weighted dual graph of the exceptional curves; weights are the
    /// coefficients in `-a K_{M/S}`.
    pub fn exceptional_graph(&self, a: u32) -> Result<DualGraph> {
        let selfs = self.fan.self_intersections()?;
        let rays = self.fan.rays();
        let n = rays.len();
        let mut vertices = Vec::new();
        let mut pos = Vec::new();
        for (i, &r) in rays.iter().enumerate() {
            if let Some(x) = self.inserted.iter().find(|x| x.ray == r) {
                let c = -&x.discrepancy * BigRational::from_integer(BigInt::from(a));
                if !c.is_integer() {
                    return Err(Error::InvalidFan(format!("-{a}K is not Cartier along {r:?}")));
                }
                let coeff = i64::try_from(c.to_integer()).map_err(|_| Error::InvalidFan("coefficient overflow".into()))?;
                pos.push(i);
                vertices.push(GraphVertex {
                    curve: CurveId(i as u32),
                    name: format!("D({},{})", r.0, r.1),
                    self_int: selfs[i],
                    coeff: Some(coeff),
                });
            }
        }
        let mut edges = Vec::new();
        for x in 0..pos.len() {
            for y in x + 1..pos.len() {
                let (i, j) = (pos[x], pos[y]);
                if (i + 1) % n == j || (j + 1) % n == i {
                    edges.push((x, y));
                }
            }
        }
        Ok(DualGraph { vertices, edges })
    }
}

/// `(-K_S^2)`, computed on the minimal resolution.
pub fn anticanonical_square(fan: &Fan2D) -> BigRational {
    let res = hj_resolve(fan);
    let coeffs = res.anticanonical_pullback();
    let selfs = res.fan.self_intersections().expect("resolution is smooth");
    let n = coeffs.len();
    let mut total = BigRational::zero();
    for i in 0..n {
        let j = (i + 1) % n;
        total += &coeffs[i] * &coeffs[i] * BigRational::from_integer(BigInt::from(selfs[i]));
        total += BigRational::from_integer(BigInt::from(2)) * &coeffs[i] * &coeffs[j];
    }
    total
}

/// Least common denominator of the functionals `φ` with `φ(v) = φ(w) = -1`.
pub fn gorenstein_index(fan: &Fan2D) -> u64 {
    fan.cones()
        .map(|(v, w)| {
            let d = det(v, w);
            let p = ratio(v.1 - w.1, d);
            let q = ratio(w.0 - v.0, d);
            let den = p.denom().lcm(q.denom());
            u64::try_from(den).unwrap_or(u64::MAX)
        })
        .fold(1, lcm)
}

/// Least `a'` making every discrepancy of the resolution integral after scaling.
pub fn discrepancy_index(res: &ResolvedFan) -> u64 {
    res.inserted
        .iter()
        .map(|x| u64::try_from(x.discrepancy.denom().abs()).unwrap_or(u64::MAX))
        .fold(1, lcm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ToricFamily {
    O,
    I,
    II1,
    II2,
    P113,
}

impl ToricFamily {
    pub const ALL: [ToricFamily; 5] = [
        ToricFamily::O,
        ToricFamily::I,
        ToricFamily::II1,
        ToricFamily::II2,
        ToricFamily::P113,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ToricFamily::O => "O",
            ToricFamily::I => "I",
            ToricFamily::II1 => "II1",
            ToricFamily::II2 => "II2",
            ToricFamily::P113 => "P113",
        }
    }
}

impl FromStr for ToricFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ToricFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "toric family",
                name: s.to_string(),
            })
    }
}

/// The fan of the family at index `a` (`P113` ignores `a`).
pub fn family_fan(family: ToricFamily, a: u32) -> Result<Fan2D> {
    if a < 2 {
        return Err(Error::InvalidFan(format!("a = {a} must be at least 2")));
    }
    let t = 2 * a as i64;
    let rays = match family {
        ToricFamily::O => vec![(1, 0), (0, 1), (-1, -t)],
        ToricFamily::I => vec![(1, 0), (0, 1), (-1, -t + 1), (-1, -t)],
        ToricFamily::II1 => vec![(1, 0), (0, 1), (-1, -t + 2), (-1, -t)],
        ToricFamily::II2 => vec![(1, 0), (0, 1), (-1, -t + 2), (-1, -t + 1), (1, -1)],
        ToricFamily::P113 => vec![(1, 0), (0, 1), (-1, -3)],
    };
    Fan2D::new(rays)
}

#[derive(Clone, Debug, Serialize)]
pub struct ToricReport {
    pub family: String,
    pub a: u32,
    pub rays: Vec<Ray>,
    pub inserted: Vec<Ray>,
    pub discrepancies: Vec<String>,
    /// Coefficients of the inserted curves in `-index * K_{M/S}`.
    pub coefficients: Vec<String>,
    pub index: u64,
    pub volume: String,
}

pub fn toric_report(family: ToricFamily, a: u32) -> Result<ToricReport> {
    let fan = family_fan(family, a)?;
    let res = hj_resolve(&fan);
    let index = gorenstein_index(&fan);
    let scale = BigRational::from_integer(BigInt::from(index));
    Ok(ToricReport {
        family: family.name().to_string(),
        a,
        rays: fan.rays().to_vec(),
        inserted: res.inserted.iter().map(|x| x.ray).collect(),
        discrepancies: res.inserted.iter().map(|x| x.discrepancy.to_string()).collect(),
        coefficients: res.inserted.iter().map(|x| (-&x.discrepancy * &scale).to_string()).collect(),
        index,
        volume: anticanonical_square(&fan).to_string(),
    })
}
