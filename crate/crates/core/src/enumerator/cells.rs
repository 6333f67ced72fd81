//! Search cells `(M_b, L_b)` and the numerical predicates that prune them.
//!
//! A cell on `F_n` is `L_b = h0 σ + h l`, which forces
//! `E_b ~ (2a - h0) σ + ((n+2)a - h) l` and `b = ⌊h0/2⌋`. A cell on `P^2` is
//! `L_b = h·line` with `b = ⌊h/3⌋`.

use std::fmt;

use serde::Serialize;

use crate::lattice::BaseSurface;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SearchCell {
    pub a: u32,
    /// `None` for `P^2`, otherwise the `n` of `F_n`.
    pub n: Option<u32>,
    /// `(L_b . l)`; zero on `P^2`.
    pub h0: i64,
    /// `(L_b . σ) + n h0` on `F_n`, the degree of `L_b` on `P^2`.
    pub h: i64,
    pub b: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Predicate {
    /// No fundamental multiplet on `P^2`.
    P1,
    /// `0 < h0 < 2a`.
    P2,
    /// `n h0 <= h <= (n+2)a`: `L_b` nef and `E_b` effective.
    P3,
    /// `1 <= b < a` and `bK + L_b` nef, plus the `F_1` section condition.
    P4,
    /// `h0 <= a` needs a horizontal component of `E_b` other than `σ`.
    P5,
    /// `h0 >= a + 2` only for `a = 4`, `h0 = 6`, `n >= 3`, `h = 4(n+2)`.
    P6,
    /// `n (h0 - a) <= 2a`.
    P7,
    /// `h0 = a + 1` forces `h >= 2a^2 - 2a - 2` and `2a - 4 <= n <= 2a`.
    P8,
}

impl Predicate {
    pub const STRUCTURAL: [Predicate; 3] = [Predicate::P2, Predicate::P3, Predicate::P4];
    /// Exclusions that depend on `a >= 4`.
    pub const EXCLUSIONS: [Predicate; 5] = [Predicate::P1, Predicate::P5, Predicate::P6, Predicate::P7, Predicate::P8];

    pub fn holds(self, c: &SearchCell) -> bool {
        let a = c.a as i64;
        let (h0, h) = (c.h0, c.h);
        let Some(n) = c.n.map(i64::from) else {
            return match self {
                Predicate::P1 => {
                    let budget = 3 * h - 2 * a * a;
                    budget >= 0 && h * (3 * a - h) <= (a - 1) * budget
                }
                Predicate::P4 => c.b >= 1 && c.b < c.a && h >= 3 * c.b as i64 && h < 3 * (c.b as i64 + 1),
                Predicate::P3 => h >= 0 && h <= 3 * a,
                _ => true,
            };
        };
        let b = c.b as i64;
        match self {
            Predicate::P1 => true,
            Predicate::P2 => h0 > 0 && h0 < 2 * a,
            Predicate::P3 => n * h0 <= h && h <= (n + 2) * a,
            Predicate::P4 => {
                let (x, y) = (h0 - 2 * b, h - b * (n + 2));
                let nef = b >= 1 && b < a && x >= 0 && y >= n * x && h0 < 2 * b + 2;
                // on F_1 the section is a (-1)-curve
                let section = n != 1 || (h - (b + 1) * 3) - (h0 - 2 * b - 2) >= 0;
                nef && section
            }
            Predicate::P5 => h0 > a || (h <= 2 * a + n * (h0 - 1) && c.budget() >= h),
            Predicate::P6 => {
                h0 < a + 2
                    || (n * (2 * a - h0) + 2 * h0 + 4 * a >= 2 * a * a
                        && (a != 4 || (h0 == 6 && n >= 3 && h == 4 * (n + 2))))
            }
            Predicate::P7 => h0 <= a || n * (h0 - a) <= 2 * a,
            Predicate::P8 => {
                h0 != a + 1 || (h >= 2 * a * a - 2 * a - 2 && 2 * a - 4 <= n && n <= 2 * a)
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl SearchCell {
    pub fn hirzebruch(a: u32, n: u32, h0: i64, h: i64) -> Self {
        SearchCell {
            a,
            n: Some(n),
            h0,
            h,
            b: (h0.max(0) / 2) as u32,
        }
    }

    pub fn plane(a: u32, h: i64) -> Self {
        SearchCell {
            a,
            n: None,
            h0: 0,
            h,
            b: (h.max(0) / 3) as u32,
        }
    }

    pub fn base(&self) -> BaseSurface {
        match self.n {
            Some(n) => BaseSurface::Hirzebruch(n),
            None => BaseSurface::ProjectivePlane,
        }
    }

    /// `(-K_b . L_b)`.
    pub fn anticanonical_degree(&self) -> i64 {
        match self.n {
            Some(n) => (2 - n as i64) * self.h0 + 2 * self.h,
            None => 3 * self.h,
        }
    }

    /// Room `Σ i deg Δ_i <= (-K_b . L_b) - 2a^2` left by the volume bound.
    pub fn budget(&self) -> i64 {
        self.anticanonical_degree() - 2 * (self.a as i64).pow(2)
    }

    /// Class of `E_b` in the basis `(σ, l)` or `(line)`.
    pub fn e_class(&self) -> Vec<i64> {
        let a = self.a as i64;
        match self.n {
            Some(n) => vec![2 * a - self.h0, (n as i64 + 2) * a - self.h],
            None => vec![3 * a - self.h],
        }
    }

    pub fn structural(&self) -> bool {
        Predicate::STRUCTURAL.iter().all(|p| p.holds(self))
    }

    /// Exclusion predicates violated by this cell.
    pub fn excluded_by(&self) -> Vec<Predicate> {
        Predicate::EXCLUSIONS.into_iter().filter(|p| !p.holds(self)).collect()
    }

    /// Whether `E_b` may contain a component that the search does not model:
    /// a horizontal curve other than `σ` on `F_n`, or a curve of degree at
    /// least two on `P^2`. Such a component `C` has `(L_b . C) >= h`, which
    /// must fit in the volume budget.
    pub fn unmodelled_component_possible(&self) -> bool {
        let cls = self.e_class();
        match self.n {
            Some(n) => cls[0] >= 1 && cls[1] >= n as i64 && self.h <= self.budget(),
            None => cls[0] >= 2 && self.h <= self.budget(),
        }
    }
}

impl fmt::Display for SearchCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "F{n}(h0={}, h={}, b={})", self.h0, self.h, self.b),
            None => write!(f, "P2(h={}, b={})", self.h, self.b),
        }
    }
}

/// Every cell satisfying the structural predicates with `n <= n_max`.
pub fn structural_cells(a: u32, n_max: u32) -> Vec<SearchCell> {
    let ai = a as i64;
    let mut out: Vec<SearchCell> = (1..=3 * ai).map(|h| SearchCell::plane(a, h)).collect();
    for n in 0..=n_max {
        for h0 in 1..2 * ai {
            for h in n as i64 * h0..=(n as i64 + 2) * ai {
                out.push(SearchCell::hirzebruch(a, n, h0, h));
            }
        }
    }
    out.retain(SearchCell::structural);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_cells_pass_every_predicate() {
        // (a, n, h0, h) of the catalog tops
        let cells = [
            (5, 10, 6, 60),
            (5, 8, 6, 48),
            (4, 4, 5, 24),
            (4, 5, 5, 26),
            (7, 12, 8, 98),
            (7, 11, 8, 91),
        ];
        for (a, n, h0, h) in cells {
            let c = SearchCell::hirzebruch(a, n, h0, h);
            assert!(c.structural(), "{c}");
            assert!(c.excluded_by().is_empty(), "{c}: {:?}", c.excluded_by());
        }
    }

    #[test]
    fn plane_is_excluded_from_four_on() {
        for a in 4..9 {
            let cells = structural_cells(a, 0);
            assert!(cells.iter().filter(|c| c.n.is_none()).all(|c| !Predicate::P1.holds(c)));
        }
    }

    #[test]
    fn budget_matches_volume_bound() {
        // type O at a = 5 has a * volume = 2a^2 + 4a + 2 = 72
        let c = SearchCell::hirzebruch(5, 10, 6, 60);
        assert_eq!(c.anticanonical_degree(), 72);
        assert_eq!(c.budget(), 72 - 50);
    }

    #[test]
    fn no_unmodelled_components_in_classified_cells() {
        for a in 4..10 {
            for c in structural_cells(a, 2 * a) {
                if c.excluded_by().is_empty() {
                    assert!(!c.unmodelled_component_possible(), "{c}");
                }
            }
        }
    }
}
