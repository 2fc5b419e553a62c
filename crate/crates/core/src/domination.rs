//! Domination, total domination and disjunctive total domination.
//!
//! A set `S` is *disjunctive total dominating* (DTD) when every vertex has a
//! neighbor in `S` or has at least two members of `S` at distance exactly 2.
//! The exact solver handles graphs of order at most 64 by a branching search
//! over 64-bit masks with iterative deepening on the set size.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DistanceTable, Graph, Vertex, VertexSet};

/// Largest order accepted by [`exact_number`].
pub const MAX_EXACT_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DominationKind {
    Domination,
    TotalDomination,
    DisjunctiveTotalDomination,
}

impl DominationKind {
    pub const ALL: [DominationKind; 3] =
        [DominationKind::Domination, DominationKind::TotalDomination, DominationKind::DisjunctiveTotalDomination];

    /// Short name used on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            DominationKind::Domination => "dom",
            DominationKind::TotalDomination => "tdom",
            DominationKind::DisjunctiveTotalDomination => "dtd",
        }
    }

    fn is_total(self) -> bool {
        self != DominationKind::Domination
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DominationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dom" | "domination" | "gamma" => Ok(DominationKind::Domination),
            "tdom" | "total" | "td" => Ok(DominationKind::TotalDomination),
            "dtd" | "disjunctive" => Ok(DominationKind::DisjunctiveTotalDomination),
            other => Err(Error::Input(format!("unknown domination kind '{other}' (expected dom, tdom or dtd)"))),
        }
    }
}

/// Outcome of an exact solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: DominationKind,
    pub value: usize,
    pub witness: VertexSet,
    /// Search nodes visited across all deepening rounds.
    pub explored: u64,
}

pub fn is_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    g.vertices().all(|v| s.contains(v) || !g.neighbors(v).is_disjoint(s))
}

pub fn is_total_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    g.vertices().all(|v| !g.neighbors(v).is_disjoint(s))
}

/// DTD test against a precomputed distance table.
pub fn is_dtd_set(g: &Graph, s: &VertexSet, dist: &DistanceTable) -> bool {
    g.vertices().all(|v| dtd_covers(g, s, dist, v))
}

fn dtd_covers(g: &Graph, s: &VertexSet, dist: &DistanceTable, v: Vertex) -> bool {
    !g.neighbors(v).is_disjoint(s) || s.iter().filter(|&u| dist.raw(v, u) == 2).nth(1).is_some()
}

/// DTD test that computes distances on the fly.
pub fn is_dtd(g: &Graph, s: &VertexSet) -> bool {
    is_dtd_set(g, s, &g.bfs_distances())
}

/// Vertices that `s` fails to disjunctively totally dominate.
pub fn dtd_uncovered(g: &Graph, s: &VertexSet) -> VertexSet {
    let dist = g.bfs_distances();
    g.vertices().filter(|&v| !dtd_covers(g, s, &dist, v)).collect()
}

/// Vertices left undominated by `s` under the given kind.
pub fn uncovered(g: &Graph, s: &VertexSet, kind: DominationKind) -> VertexSet {
    match kind {
        DominationKind::Domination => {
            g.vertices().filter(|&v| !s.contains(v) && g.neighbors(v).is_disjoint(s)).collect()
        }
        DominationKind::TotalDomination => g.vertices().filter(|&v| g.neighbors(v).is_disjoint(s)).collect(),
        DominationKind::DisjunctiveTotalDomination => dtd_uncovered(g, s),
    }
}

pub fn satisfies(g: &Graph, s: &VertexSet, kind: DominationKind) -> bool {
    match kind {
        DominationKind::Domination => is_dominating_set(g, s),
        DominationKind::TotalDomination => is_total_dominating_set(g, s),
        DominationKind::DisjunctiveTotalDomination => is_dtd(g, s),
    }
}

/// Precomputed masks for the branching search.
struct Solver {
    kind: DominationKind,
    full: u64,
    nbr: Vec<u64>,
    d2: Vec<u64>,
    support: u64,
    explored: u64,
}

impl Solver {
    fn new(g: &Graph, kind: DominationKind) -> Result<Self> {
        let n = g.order();
        if n > MAX_EXACT_ORDER {
            return Err(Error::TooLarge { order: n, max: MAX_EXACT_ORDER });
        }
        if kind.is_total() {
            if let Some(v) = g.isolated_vertex() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        let nbr = g.masks().expect("order checked above");
        let d2 = (0..n)
            .map(|v| {
                let mut two = 0u64;
                for u in g.neighbors(v).iter() {
                    two |= nbr[u];
                }
                two & !nbr[v] & !(1 << v)
            })
            .collect();
        let support = VertexSet::to_mask(&g.support_vertices()).expect("order checked above");
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Solver { kind, full, nbr, d2, support, explored: 0 })
    }

    fn uncovered(&self, s: u64) -> u64 {
        let mut u = 0;
        let mut rest = self.full;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let hit = match self.kind {
                DominationKind::Domination => (s >> v) & 1 == 1 || self.nbr[v] & s != 0,
                DominationKind::TotalDomination => self.nbr[v] & s != 0,
                DominationKind::DisjunctiveTotalDomination => {
                    self.nbr[v] & s != 0 || (self.d2[v] & s).count_ones() >= 2
                }
            };
            if !hit {
                u |= 1 << v;
            }
        }
        u
    }

    /// Vertices of `allowed` whose addition can still help cover `v`.
    fn rescuers(&self, v: usize, s: u64, allowed: u64) -> u64 {
        match self.kind {
            DominationKind::Domination => (self.nbr[v] | 1 << v) & allowed,
            DominationKind::TotalDomination => self.nbr[v] & allowed,
            DominationKind::DisjunctiveTotalDomination => {
                let have = (self.d2[v] & s).count_ones();
                let far = self.d2[v] & allowed;
                let far = if have + far.count_ones() >= 2 { far } else { 0 };
                (self.nbr[v] & allowed) | far
            }
        }
    }

    /// Lower bound on the number of vertices still needed.
    fn lower_bound(&self, s: u64, unc: u64, allowed: u64) -> u32 {
        if unc == 0 {
            return 0;
        }
        let mut best = 0;
        let mut rest = allowed;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let gain = match self.kind {
                DominationKind::Domination => ((self.nbr[u] | 1 << u) & unc).count_ones(),
                DominationKind::TotalDomination => (self.nbr[u] & unc).count_ones(),
                DominationKind::DisjunctiveTotalDomination => {
                    2 * (self.nbr[u] & unc).count_ones() + (self.d2[u] & unc).count_ones()
                }
            };
            best = best.max(gain);
        }
        if best == 0 {
            return u32::MAX;
        }
        let demand: u32 = match self.kind {
            DominationKind::DisjunctiveTotalDomination => {
                let mut total = 0;
                let mut rest = unc;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    total += 2 - (self.d2[v] & s).count_ones().min(1);
                }
                total
            }
            _ => unc.count_ones(),
        };
        demand.div_ceil(best)
    }

    /// Searches for a set of at most `budget` more vertices extending `s`.
    fn search(&mut self, s: u64, forbidden: u64, budget: u32) -> Option<u64> {
        self.explored += 1;
        let unc = self.uncovered(s);
        if unc == 0 {
            return Some(s);
        }
        if budget == 0 {
            return None;
        }
        let allowed = self.full & !s & !forbidden;
        if self.lower_bound(s, unc, allowed) > budget {
            return None;
        }
        let mut pick = 0u64;
        let mut pick_len = u32::MAX;
        let mut rest = unc;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let r = self.rescuers(v, s, allowed);
            let len = r.count_ones();
            if len == 0 {
                return None;
            }
            if len < pick_len {
                pick = r;
                pick_len = len;
                if len == 1 {
                    break;
                }
            }
        }
        let mut excluded = 0u64;
        for u in ordered(pick & self.support).chain(ordered(pick & !self.support)) {
            if let Some(found) = self.search(s | 1 << u, forbidden | excluded, budget - 1) {
                return Some(found);
            }
            excluded |= 1 << u;
        }
        None
    }
}

fn ordered(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Exact γ, γt or γt^d together with a minimum witness.
///
/// Disconnected graphs are allowed. The total variants reject isolated
/// vertices. Orders above [`MAX_EXACT_ORDER`] are refused.
pub fn exact_number(g: &Graph, kind: DominationKind) -> Result<SolveResult> {
    let mut solver = Solver::new(g, kind)?;
    let root_unc = solver.uncovered(0);
    let mut k = solver.lower_bound(0, root_unc, solver.full);
    loop {
        if let Some(mask) = solver.search(0, 0, k) {
            let witness = VertexSet::from_mask(mask);
            return Ok(SolveResult { kind, value: witness.len(), witness, explored: solver.explored });
        }
        k += 1;
    }
}

/// Looks for a set of size at most `k`; `None` proves none exists.
pub fn find_set_of_size(g: &Graph, kind: DominationKind, k: usize) -> Result<Option<VertexSet>> {
    let mut solver = Solver::new(g, kind)?;
    Ok(solver.search(0, 0, k as u32).map(VertexSet::from_mask))
}

fn require_order(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Input(format!("formula needs n >= 3, got {n}")));
    }
    Ok(())
}

/// γt^d of the cycle C_n.
pub fn dtd_cycle_formula(n: usize) -> Result<usize> {
    require_order(n)?;
    Ok(if n.is_multiple_of(5) { 2 * n / 5 } else { (2 * (n + 1)).div_ceil(5) })
}

/// γt^d of the path P_n.
pub fn dtd_path_formula(n: usize) -> Result<usize> {
    require_order(n)?;
    let base = (2 * (n + 1)).div_ceil(5);
    Ok(if n % 5 == 1 { base + 1 } else { base })
}

/// γt of the cycle C_n.
pub fn gt_cycle_formula(n: usize) -> Result<usize> {
    require_order(n)?;
    Ok(n / 2 + n.div_ceil(4) - n / 4)
}

/// A minimum DTD-set of C_n (vertices in cyclic order `0..n`): the pairs
/// `{5i, 5i+1}` plus a short tail fixed by `n mod 5`.
pub fn cycle_witness(n: usize) -> Result<VertexSet> {
    require_order(n)?;
    if n < 5 {
        return Ok(VertexSet::from([0, 1]));
    }
    let mut s: VertexSet = (0..n / 5).flat_map(|i| [5 * i, 5 * i + 1]).collect();
    match n % 5 {
        0 => {}
        1 => s.extend([n - 1]),
        _ => s.extend([n - 5, n - 4]),
    }
    Ok(s)
}

/// A minimum DTD-set of P_n (vertices in path order `0..n`): pairs
/// `{5i+1, 5i+2}` followed by at most two vertices near the far end.
pub fn path_witness(n: usize) -> Result<VertexSet> {
    require_order(n)?;
    let path = crate::graph::Graph::from_edge_list(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())?;
    let mut s: VertexSet = (0..).map(|i| 5 * i).take_while(|b| b + 2 < n).flat_map(|b| [b + 1, b + 2]).collect();
    for v in [n - 2, n - 1] {
        if !is_dtd(&path, &s) {
            s.insert(v);
        }
    }
    Ok(s)
}

fn exchange_hypothesis(g: &Graph, s: &VertexSet, v: Vertex) -> Result<Vertex> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    if !is_dtd(g, s) {
        return Err(Error::Input("the given set is not a DTD-set".into()));
    }
    let leaves = g.leaves();
    if g.neighbors(v).is_disjoint(&leaves) {
        return Err(Error::Input(format!("vertex {v} is not a support vertex")));
    }
    let inner = g.neighbors(v).difference(&leaves);
    match inner.len() {
        1 => Ok(inner.first().unwrap()),
        k => Err(Error::Input(format!("support vertex {v} has {k} non-leaf neighbors; exactly one is required"))),
    }
}

/// Given a minimum DTD-set `s` and a support vertex `v` with exactly one
/// non-leaf neighbor, returns a DTD-set of the same size containing `v`.
///
/// When `v` is missing, `s` must hold one of its leaves; that leaf is traded
/// for `v`.
pub fn support_exchange(g: &Graph, s: &VertexSet, v: Vertex) -> Result<VertexSet> {
    exchange_hypothesis(g, s, v)?;
    swap_in(g, s, v, v)
}

/// Like [`support_exchange`], but when the non-leaf neighbor `w` of `v` has
/// degree 2 the result contains both `v` and `w`.
pub fn support_exchange_with_neighbor(g: &Graph, s: &VertexSet, v: Vertex) -> Result<VertexSet> {
    let w = exchange_hypothesis(g, s, v)?;
    if g.degree(w) != 2 {
        return Err(Error::Input(format!("neighbor {w} of support vertex {v} has degree {}, not 2", g.degree(w))));
    }
    let s = swap_in(g, s, v, v)?;
    swap_in(g, &s, v, w)
}

/// Trades a leaf of `v` in `s` for `target`.
fn swap_in(g: &Graph, s: &VertexSet, v: Vertex, target: Vertex) -> Result<VertexSet> {
    if s.contains(target) {
        return Ok(s.clone());
    }
    let leaf = g
        .neighbors(v)
        .iter()
        .find(|&u| g.degree(u) == 1 && s.contains(u))
        .ok_or_else(|| Error::Invariant(format!("no leaf of {v} in the set; the input set is not minimum")))?;
    let out = s.clone().without(leaf).with(target);
    if !is_dtd(g, &out) {
        return Err(Error::Invariant(format!("exchanging {leaf} for {target} broke domination")));
    }
    Ok(out)
}
