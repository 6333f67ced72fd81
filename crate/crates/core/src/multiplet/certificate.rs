use serde::Serialize;

use super::BasicPair;
use crate::lattice::{Divisor, DivisorClass, SurfaceModel};

/// Sufficient nefness test used down a ladder: if the previous level's
/// `iK + L` is nef, `E` is effective and `L` is nonnegative on every
/// component of `E`, then `jK + L` is nef for `0 <= j <= i`.
pub fn nef_certificate(model: &SurfaceModel, l: &DivisorClass, e: &Divisor) -> bool {
    e.is_effective()
        && e
            .support()
            .into_iter()
            .all(|c| model.dot_curve(l, c).map_or(false, |v| v >= 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub nonzero: bool,
    pub effective: bool,
    pub coefficients_in_range: bool,
    pub snc: bool,
    pub k_plus_l_nef: bool,
    /// `(K + L_0 . L_0)`.
    pub k_plus_l_dot_l: i64,
    pub l_orthogonal: bool,
    /// `2 <= -(C^2) <= 2a/(a - e)` on every component.
    pub component_bounds: bool,
    pub failures: Vec<String>,
}

impl CertificateReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_basic_pair(p: &BasicPair) -> CertificateReport {
    let m = &p.model;
    let a = p.a as i64;
    let mut failures = Vec::new();
    let support = p.e0.support();

    let nonzero = !p.e0.is_zero();
    if !nonzero {
        failures.push("E_0 is zero".to_string());
    }
    let effective = p.e0.is_effective();
    if !effective {
        failures.push("E_0 is not effective".to_string());
    }
    let coefficients_in_range = p.e0.terms().all(|(_, k)| (1..a).contains(&k));
    if !coefficients_in_range {
        failures.push(format!("E_0 has coefficients outside 1..{}", a - 1));
    }
    let mut snc = true;
    for (x, &c) in support.iter().enumerate() {
        for &d in &support[x + 1..] {
            if m.curve_intersection(c, d).map_or(true, |v| !(0..=1).contains(&v)) {
                snc = false;
                failures.push(format!("{} and {} are not in normal crossing", m.name(c), m.name(d)));
            }
        }
    }

    let kl = &m.canonical_class() + &p.l0;
    let k_plus_l_nef = match p.certified_nef.or_else(|| m.closed_nef(&kl)) {
        Some(true) => true,
        Some(false) => {
            failures.push("K + L_0 is not certified nef".to_string());
            false
        }
        None => {
            failures.push("nefness of K + L_0 is not certified".to_string());
            false
        }
    };
    let k_plus_l_dot_l = m.intersect(&kl, &p.l0).unwrap_or(0);
    if k_plus_l_dot_l <= 0 {
        failures.push(format!("(K + L_0 . L_0) = {k_plus_l_dot_l} is not positive"));
    }

    let mut l_orthogonal = true;
    let mut component_bounds = true;
    for (c, e) in p.e0.terms() {
        let lc = m.dot_curve(&p.l0, c).unwrap_or(i64::MIN);
        if lc != 0 {
            l_orthogonal = false;
            failures.push(format!("(L_0 . {}) = {lc}", m.name(c)));
        }
        let d = -m.self_intersection(c).unwrap_or(0);
        // d <= 2a/(a-e), cleared of denominators
        if e < a && (d < 2 || d * (a - e) > 2 * a) {
            component_bounds = false;
            failures.push(format!("{} has -C^2 = {d} outside [2, 2a/(a-e)] for e = {e}", m.name(c)));
        }
    }

    CertificateReport {
        nonzero,
        effective,
        coefficients_in_range,
        snc,
        k_plus_l_nef,
        k_plus_l_dot_l,
        l_orthogonal,
        component_bounds,
        failures,
    }
}
