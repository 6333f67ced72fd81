//! Depth-first search over the subschemes `Δ_b, ..., Δ_1` of a cell.
//!
//! Every level keeps `E_i` effective and `L_i` nonnegative on the components
//! of `E_i`, so each accepted ladder is certified by construction. The
//! budgets `r_C = (L_i . C)` shrink by `i` times the contact of `Δ_i` with
//! `C` and must reach zero on `E_0`, and `Σ i deg Δ_i` is bounded by the
//! volume budget of the cell.

use std::collections::BTreeMap;

use crate::combinat::partitions;
use crate::elimination::{eliminate_tagged, transform, LocalDatum, Subscheme};
use crate::lattice::{CurveId, Divisor, DivisorClass, SurfaceModel};
use crate::multiplet::{check_basic_pair, fundamental_class, index_of, BasicPair, FundamentalMultiplet};

use super::cells::SearchCell;

const SIGMA: CurveId = CurveId(0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Abort a cell after this many search nodes; the cell is then reported incomplete.
    pub max_nodes: u64,
    /// Require `(-K_S^2) >= 2a`; otherwise only a positive volume is required.
    pub volume_bound: bool,
    /// Require the index of `-K_S` to be exactly `a`.
    pub require_index: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_nodes: 20_000_000,
            volume_bound: true,
            require_index: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CellOutcome {
    pub cell: SearchCell,
    /// Number of `E_b` shapes tried.
    pub shapes: usize,
    pub nodes: u64,
    pub found: Vec<FundamentalMultiplet>,
    /// The node limit was reached.
    pub incomplete: bool,
    /// `E_b` could contain components the search does not model.
    pub uncertified: bool,
}

/// `E_b` as `σ` plus fibres on `F_n` or as lines on `P^2`, one model per
/// partition of the fibre (line) part into coefficients below `a`.
pub fn top_shapes(cell: &SearchCell) -> Vec<(SurfaceModel, Divisor)> {
    let a = cell.a as i64;
    let cls = cell.e_class();
    let mut out = Vec::new();
    match cell.n {
        Some(n) => {
            let (c, f) = (cls[0], cls[1]);
            if !(0..a).contains(&c) || f < 0 {
                return out;
            }
            for parts in partitions(f as u32, cell.a - 1) {
                let mut m = SurfaceModel::hirzebruch(n);
                let mut e = Divisor::from_terms([(SIGMA, c)]);
                for (t, &p) in parts.iter().enumerate() {
                    let Ok(l) = m.add_fiber(format!("l{}", t + 1)) else { continue };
                    e.set(l, p as i64);
                }
                out.push((m, e));
            }
        }
        None => {
            let d = cls[0];
            if d < 0 {
                return out;
            }
            for parts in partitions(d as u32, cell.a - 1) {
                let mut m = SurfaceModel::projective_plane();
                let mut e = Divisor::new();
                for (t, &p) in parts.iter().enumerate() {
                    let Ok(l) = m.add_line(format!("line{}", t + 1)) else { continue };
                    e.set(l, p as i64);
                }
                out.push((m, e));
            }
        }
    }
    out
}

enum Slot {
    /// Points on a general position of one curve; a multiset of options.
    On(Vec<LocalDatum>),
    /// The single node of two curves.
    Node(Vec<LocalDatum>),
}

impl Slot {
    fn options(&self) -> &[LocalDatum] {
        match self {
            Slot::On(o) | Slot::Node(o) => o,
        }
    }
}

struct LevelPlan {
    i: u32,
    slots: Vec<Slot>,
    /// Support curves whose budget must be exhausted once the slot is left.
    closes: Vec<Vec<CurveId>>,
    exact: bool,
}

struct Search<'c> {
    cell: &'c SearchCell,
    opts: SearchOptions,
    a: i64,
    top_degree: i64,
    normalize: bool,
    nodes: u64,
    aborted: bool,
    found: Vec<FundamentalMultiplet>,
    top: Option<(SurfaceModel, Divisor)>,
}

struct State {
    model: SurfaceModel,
    e: Divisor,
    l: DivisorClass,
    /// Remaining room for `Σ_{j <= i} j deg Δ_j`.
    room: i64,
    /// `[Δ_b, ..., Δ_{i+1}]`.
    deltas: Vec<Subscheme>,
}

pub fn search_cell(cell: &SearchCell, opts: &SearchOptions) -> CellOutcome {
    let shapes = top_shapes(cell);
    let a = cell.a as i64;
    let top_degree = cell.anticanonical_degree();
    let mut s = Search {
        cell,
        opts: *opts,
        a,
        top_degree,
        normalize: false,
        nodes: 0,
        aborted: false,
        found: Vec::new(),
        top: None,
    };
    let room = if opts.volume_bound { cell.budget() } else { top_degree - 1 };
    for (model, e) in &shapes {
        if s.aborted || room < 0 {
            break;
        }
        let Ok(l) = fundamental_class(model, cell.a, e) else { continue };
        s.normalize = match cell.n {
            Some(n) if n >= 1 => {
                let bkl = &(&model.canonical_class() * cell.b as i64) + &l;
                !bkl.is_zero() && model.intersect(&bkl, &bkl) == Ok(0)
            }
            _ => false,
        };
        s.top = Some((model.clone(), e.clone()));
        let state = State {
            model: model.clone(),
            e: e.clone(),
            l,
            room,
            deltas: Vec::new(),
        };
        if s.admissible(&state, cell.b) {
            s.level(cell.b, state);
        }
    }
    CellOutcome {
        cell: *cell,
        shapes: shapes.len(),
        nodes: s.nodes,
        found: s.found,
        incomplete: s.aborted,
        uncertified: cell.unmodelled_component_possible(),
    }
}

impl Search<'_> {
    /// Budget checks on entering level `i` (before choosing `Δ_i`).
    fn admissible(&self, st: &State, i: u32) -> bool {
        let mut total = 0;
        let mut le = 0;
        for (c, k) in st.e.terms() {
            let Ok(r) = st.model.dot_curve(&st.l, c) else { return false };
            if r < 0 || r > st.room || (i == 0 && r != 0) {
                return false;
            }
            total += r;
            le += k * r;
        }
        total <= 2 * st.room && le <= (self.a - 1) * st.room
    }

    fn level(&mut self, i: u32, st: State) {
        self.nodes += 1;
        if self.nodes > self.opts.max_nodes {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        if i == 0 {
            self.accept(st);
            return;
        }
        let Some(plan) = self.plan(i, &st) else { return };
        let mut rem: BTreeMap<CurveId, i64> = BTreeMap::new();
        for slot in &plan.slots {
            for d in slot.options() {
                for c in d.curves() {
                    rem.entry(c).or_insert_with(|| st.model.dot_curve(&st.l, c).unwrap_or(0));
                }
            }
        }
        let mut chosen = Vec::new();
        self.choose(&plan, &st, 0, 0, &mut rem, 0, &mut chosen);
    }

    fn plan(&self, i: u32, st: &State) -> Option<LevelPlan> {
        let a = self.a;
        let s = a - i as i64;
        let m = &st.model;
        let skip_sigma = self.normalize && i == self.cell.b && self.cell.n.is_some();
        let support = st.e.support();
        let r = |c: CurveId| m.dot_curve(&st.l, c).unwrap_or(-1);
        let ii = i as i64;
        let exact = i == 1;
        let mut slots = Vec::new();

        for &c in &support {
            let e = st.e.coeff(c);
            if e < s || (skip_sigma && c == SIGMA) {
                continue;
            }
            let mut opts = Vec::new();
            let mut k = 1;
            while ii * k <= r(c) && k * (e - s) <= a - 1 {
                let mut mm = k;
                while ii * mm <= st.room && e * k - s * mm >= 0 {
                    let last = if mm > k { e * k - s * mm } else { k * (e - s) };
                    if !exact || last == 0 {
                        opts.push(LocalDatum::on_curve(c, k as u32, mm as u32));
                    }
                    mm += 1;
                }
                k += 1;
            }
            if !opts.is_empty() {
                slots.push(Slot::On(opts));
            }
        }

        let alive: Vec<CurveId> = m.curves().iter().filter(|c| c.alive).map(|c| c.id).collect();
        for (x, &c) in alive.iter().enumerate() {
            for &d in &alive[x + 1..] {
                let (ec, ed) = (st.e.coeff(c), st.e.coeff(d));
                if ec + ed < s || (ec == 0 && ed == 0) {
                    continue;
                }
                if skip_sigma && (c == SIGMA || d == SIGMA) {
                    continue;
                }
                if m.curve_intersection(c, d) != Ok(1) {
                    continue;
                }
                let mut opts = Vec::new();
                for (c1, c2, e1, e2) in [(c, d, ec, ed), (d, c, ed, ec)] {
                    let mut k2 = 1;
                    while ii <= r(c1) && ii * k2 <= r(c2) {
                        if c1 == d && k2 == 1 {
                            k2 += 1;
                            continue;
                        }
                        let lo = (e2 - s) + e1;
                        let hi = k2 * (e2 - s) + e1;
                        if lo.min(hi) < 0 || lo.max(hi) > a - 1 {
                            break;
                        }
                        let tail = e1 + k2 * e2;
                        let mut mm = k2;
                        while ii * mm <= st.room {
                            if mm > k2 && (tail - s * mm < 0 || tail - s * (k2 + 1) > a - 1) {
                                break;
                            }
                            let last = if mm > k2 { tail - s * mm } else { hi };
                            if !exact || last == 0 {
                                opts.push(LocalDatum::at_node(c1, c2, k2 as u32, mm as u32));
                            }
                            mm += 1;
                        }
                        k2 += 1;
                    }
                }
                if !opts.is_empty() {
                    slots.push(Slot::Node(opts));
                }
            }
        }

        let mut closes = vec![Vec::new(); slots.len()];
        if exact {
            for &c in &support {
                let last = slots
                    .iter()
                    .rposition(|sl| sl.options().iter().any(|d| d.contact_with(c) > 0));
                match last {
                    Some(p) => closes[p].push(c),
                    None if r(c) != 0 => return None,
                    None => {}
                }
            }
        }
        Some(LevelPlan {
            i,
            slots,
            closes,
            exact,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        plan: &LevelPlan,
        st: &State,
        slot: usize,
        start: usize,
        rem: &mut BTreeMap<CurveId, i64>,
        cost: i64,
        chosen: &mut Vec<LocalDatum>,
    ) {
        if self.aborted {
            return;
        }
        if slot == plan.slots.len() {
            self.descend(plan.i, st, cost, chosen);
            return;
        }
        if !plan.exact || plan.closes[slot].iter().all(|c| rem[c] == 0) {
            self.choose(plan, st, slot + 1, 0, rem, cost, chosen);
        }
        let ii = plan.i as i64;
        let opts = plan.slots[slot].options();
        let multiset = matches!(plan.slots[slot], Slot::On(..));
        for (j, d) in opts.iter().enumerate().skip(start) {
            let c = ii * d.multiplicity as i64;
            if cost + c > st.room {
                continue;
            }
            let curves = d.curves();
            if curves.iter().any(|x| rem[x] < ii * d.contact_with(*x) as i64) {
                continue;
            }
            for x in &curves {
                *rem.get_mut(x).unwrap() -= ii * d.contact_with(*x) as i64;
            }
            chosen.push(*d);
            if multiset {
                self.choose(plan, st, slot, j, rem, cost + c, chosen);
            } else {
                self.choose(plan, st, slot + 1, 0, rem, cost + c, chosen);
            }
            chosen.pop();
            for x in &curves {
                *rem.get_mut(x).unwrap() += ii * d.contact_with(*x) as i64;
            }
        }
    }

    fn descend(&mut self, i: u32, st: &State, cost: i64, chosen: &[LocalDatum]) {
        let delta = Subscheme::new(chosen.to_vec());
        let Ok(res) = eliminate_tagged(&st.model, &delta, &format!("D{i}")) else { return };
        let e = transform(&st.e, &res, self.a - i as i64);
        if e.terms().any(|(_, k)| k < 0 || k >= self.a) {
            return;
        }
        let l = res.transform_class(&st.l, i as i64);
        let mut deltas = st.deltas.clone();
        deltas.push(delta);
        let next = State {
            model: res.model,
            e,
            l,
            room: st.room - cost,
            deltas,
        };
        if self.admissible(&next, i - 1) {
            self.level(i - 1, next);
        }
    }

    fn accept(&mut self, st: State) {
        let a = self.a;
        if st.e.is_zero() {
            return;
        }
        let spent: i64 = st
            .deltas
            .iter()
            .enumerate()
            .map(|(x, d)| (self.cell.b as i64 - x as i64) * d.degree() as i64)
            .sum();
        let a_vol = self.top_degree - spent;
        if a_vol <= 0 || (self.opts.volume_bound && a_vol < 2 * a * a) {
            return;
        }
        let kl = &st.model.canonical_class() + &st.l;
        if st.model.intersect(&kl, &st.l).map_or(true, |v| v <= 0) {
            return;
        }
        let Ok(mut pair) = BasicPair::new(self.cell.a, st.model, st.e) else { return };
        // nefness holds by the level-by-level construction
        pair.certified_nef = Some(true);
        if self.opts.require_index && index_of(&pair) != self.cell.a {
            return;
        }
        if !check_basic_pair(&pair).all_pass() {
            return;
        }
        let Some((top, e_top)) = self.top.clone() else { return };
        if let Ok(m) = FundamentalMultiplet::new(self.cell.a, self.cell.b, top, e_top, st.deltas) {
            self.found.push(m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplet::CatalogType;

    fn run(a: u32, n: u32, h0: i64, h: i64) -> CellOutcome {
        search_cell(&SearchCell::hirzebruch(a, n, h0, h), &SearchOptions::default())
    }

    #[test]
    fn finds_type_o_at_five() {
        let out = run(5, 10, 6, 60);
        assert!(!out.incomplete);
        let want = CatalogType::O.configurations(5).unwrap();
        assert_eq!(out.found, want);
    }

    #[test]
    fn finds_b4_and_c4() {
        let b4 = CatalogType::B4.configurations(4).unwrap();
        let out = run(4, 4, 5, 24);
        assert!(out.found.iter().any(|m| m.deltas == b4[0].deltas && m.e_top == b4[0].e_top));
        let c4 = CatalogType::C4.configurations(4).unwrap();
        let out = run(4, 5, 5, 26);
        assert!(out.found.iter().any(|m| m.deltas == c4[0].deltas), "{:?}", out.found);
    }

    #[test]
    fn shapes_follow_fibre_partitions() {
        let c = SearchCell::hirzebruch(5, 8, 6, 46);
        // E_b ~ 4σ + 4l: fibre coefficients partition 4 into parts below 5
        assert_eq!(top_shapes(&c).len(), 5);
        assert!(top_shapes(&SearchCell::hirzebruch(5, 8, 4, 46)).is_empty());
    }
}
