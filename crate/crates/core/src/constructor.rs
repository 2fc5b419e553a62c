//! Constructive DTD-sets for claw-free graphs.
//!
//! For a leaf `y` with neighbor `x`, the clique `X = N[x] - y` splits the rest
//! of the graph into *fragments*. Small exceptional fragments (P2, P3, P5,
//! P6, C3 and G3) get a fixed selection that depends on how the chosen
//! attachment vertex `x_F` meets them; other fragments are solved
//! recursively. [`algorithm_a`] and [`algorithm_b`] return these selections
//! verbatim. [`construct_dtd_clawfree`] then tries the documented repairs,
//! keeps the smallest candidate that is a DTD-set within `4n/7`, and falls
//! back to the exact solver otherwise.

use std::fmt;

use crate::domination::{exact_number, is_dtd, DominationKind, MAX_EXACT_ORDER};
use crate::error::{Error, Result};
use crate::families::{classify_in, generate, FamilyClass, FamilyId};
use crate::graph::{Graph, Vertex, VertexSet};

/// Fragments at most this large are solved exactly inside the recursion.
const EXACT_FRAGMENT_ORDER: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FragmentKind {
    P1,
    P2,
    P3,
    P5,
    P6,
    C3,
    G3,
    NonExceptional,
}

impl FragmentKind {
    /// Members of the exceptional list.
    pub fn is_exceptional(self) -> bool {
        !matches!(self, FragmentKind::P1 | FragmentKind::NonExceptional)
    }
}

/// How `x_F` meets its fragment; names the step of the algorithm that fires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Attachment {
    /// P1 and non-exceptional fragments.
    Free,
    P2Both,
    P2One,
    P3Center,
    P3Leaf,
    C3,
    P5Leaf,
    P5Inner,
    P6Leaf,
    P6Support,
    P6Inner,
    G3W3,
    G3U3,
    G3W2,
    G3U2,
    G3W1,
    G3U1V1,
}

impl Attachment {
    pub fn step(self) -> &'static str {
        match self {
            Attachment::Free => "3",
            Attachment::P2Both => "4.1",
            Attachment::P2One => "4.2",
            Attachment::P3Center => "5.1",
            Attachment::P3Leaf => "5.2",
            Attachment::C3 => "6",
            Attachment::P5Leaf => "7.1",
            Attachment::P5Inner => "7.2",
            Attachment::P6Leaf => "8.1",
            Attachment::P6Support => "8.2",
            Attachment::P6Inner => "8.3",
            Attachment::G3W3 => "9.1",
            Attachment::G3U3 => "9.2",
            Attachment::G3W2 => "9.3",
            Attachment::G3U2 => "9.4",
            Attachment::G3W1 => "9.5.1",
            Attachment::G3U1V1 => "9.5.2",
        }
    }
}

/// Host-vertex labels of a G3: center `c`, the short arms `u`, `v` (with
/// `u[0]v[0]` an edge) and the long arm `w`, each listed outward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G3Labels {
    pub c: Vertex,
    pub u: [Vertex; 3],
    pub v: [Vertex; 3],
    pub w: [Vertex; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentRecord {
    pub vertices: VertexSet,
    pub kind: FragmentKind,
    /// The chosen attachment vertex `x_F`.
    pub chosen: Vertex,
    pub attachment: Attachment,
    /// Path fragments listed end to end, oriented for the firing step.
    pub path: Vec<Vertex>,
    pub g3: Option<G3Labels>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// The leaf, or for the extended form the degree-2 support of `z`.
    pub y: Vertex,
    /// The leaf hanging off `y` in the extended form.
    pub z: Option<Vertex>,
    pub x: Vertex,
    /// `N[x] - y`, a clique.
    pub clique: VertexSet,
    pub fragments: Vec<FragmentRecord>,
    /// Clique vertices not chosen for an exceptional fragment.
    pub x1: VertexSet,
    /// P1-fragment vertices, `x1`, and the root vertices.
    pub big_y: VertexSet,
}

/// Which route produced a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodTag {
    ExactSmall,
    ExactMinDeg2,
    ProofPath,
    FallbackExact,
}

impl MethodTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::ExactSmall => "exact-small",
            MethodTag::ExactMinDeg2 => "exact-mindeg2",
            MethodTag::ProofPath => "proof-path",
            MethodTag::FallbackExact => "fallback-exact",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub set: VertexSet,
    pub method: MethodTag,
}

/// Leaf-rooted decomposition at the leaf `y`.
pub fn decompose(g: &Graph, y: Vertex) -> Result<Decomposition> {
    check_vertex(g, y)?;
    g.require_claw_free()?;
    if g.degree(y) != 1 {
        return Err(Error::Input(format!("vertex {y} is not a leaf")));
    }
    let x = g.neighbors(y).first().unwrap();
    let clique = g.closed_neighborhood(x).without(y);
    build(g, y, None, x, clique, VertexSet::from([y]))
}

/// The second-phase decomposition at a leaf `z` whose support `y` has
/// degree 2: `x` is the other neighbor of `y`, `X = N[x] - y`, and the
/// fragments are the components of `G - X - {y, z}`.
pub fn decompose_extended(g: &Graph, z: Vertex) -> Result<Decomposition> {
    check_vertex(g, z)?;
    g.require_claw_free()?;
    if g.degree(z) != 1 {
        return Err(Error::Input(format!("vertex {z} is not a leaf")));
    }
    let y = g.neighbors(z).first().unwrap();
    if g.degree(y) != 2 {
        return Err(Error::Input(format!("support vertex {y} of leaf {z} does not have degree 2")));
    }
    let x = g.neighbors(y).clone().without(z).first().unwrap();
    let clique = g.closed_neighborhood(x).without(y);
    build(g, y, Some(z), x, clique, VertexSet::from([y, z]))
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn build(
    g: &Graph,
    y: Vertex,
    z: Option<Vertex>,
    x: Vertex,
    clique: VertexSet,
    roots: VertexSet,
) -> Result<Decomposition> {
    if !g.is_clique(&clique) {
        return Err(Error::Invariant(format!("N[{x}] minus {y} is not a clique")));
    }
    let (rest, map) = g.remove_vertices(&clique.union(&roots));
    let mut owner: Vec<Option<usize>> = vec![None; g.order()];
    let mut fragments = Vec::new();
    for (i, comp) in rest.components().iter().enumerate() {
        let vertices = map.lift(comp);
        let touching = clique.intersection(&g.set_neighborhood(&vertices));
        for a in touching.iter() {
            if let Some(j) = owner[a] {
                return Err(Error::Invariant(format!("clique vertex {a} meets fragments {j} and {i}")));
            }
            owner[a] = Some(i);
        }
        let chosen = touching.first().ok_or_else(|| Error::Invariant("fragment detached from the clique".into()))?;
        fragments.push(classify_fragment(g, vertices, chosen)?);
    }
    let taken: VertexSet = fragments.iter().filter(|f| f.kind.is_exceptional()).map(|f| f.chosen).collect();
    let x1 = clique.difference(&taken);
    let mut big_y = x1.union(&roots).with(x);
    for f in fragments.iter().filter(|f| f.kind == FragmentKind::P1) {
        big_y.extend(f.vertices.iter());
    }
    Ok(Decomposition { y, z, x, clique, fragments, x1, big_y })
}

/// Orders a path subgraph from its lower-id end.
fn path_order(g: &Graph, vs: &VertexSet) -> Vec<Vertex> {
    let inner = |v: Vertex| g.neighbors(v).intersection(vs);
    let start = vs.iter().find(|&v| inner(v).len() == 1).unwrap_or_else(|| vs.first().unwrap());
    let mut order = vec![start];
    while order.len() < vs.len() {
        let last = *order.last().unwrap();
        let next = inner(last).iter().find(|v| !order.contains(v)).expect("fragment is a path");
        order.push(next);
    }
    order
}

fn is_path(g: &Graph, vs: &VertexSet, n: usize) -> bool {
    let (h, _) = g.induced_subgraph(vs);
    h.order() == n && h.size() == n - 1 && h.is_connected() && h.max_degree().unwrap_or(0) <= 2
}

/// Labels an induced G3 on `vs` with host ids.
pub fn label_g3(g: &Graph, vs: &VertexSet) -> Option<G3Labels> {
    if vs.len() != 10 || !crate::canon::is_isomorphic(&g.induced_subgraph(vs).0, &generate(&FamilyId::G(3)).ok()?) {
        return None;
    }
    let inner = |v: Vertex| g.neighbors(v).intersection(vs);
    let tri: Vec<Vertex> = vs.iter().filter(|&v| inner(v).len() == 3).collect();
    let arm = |t: Vertex| -> Vec<Vertex> {
        let mut out = vec![t];
        let mut cur = inner(t).iter().find(|v| !tri.contains(v)).unwrap();
        loop {
            out.push(cur);
            match inner(cur).iter().find(|v| !out.contains(v)) {
                Some(n) => cur = n,
                None => break out,
            }
        }
    };
    let arms: Vec<Vec<Vertex>> = tri.iter().map(|&t| arm(t)).collect();
    let ci = arms.iter().position(|a| a.len() == 4)?;
    let others: Vec<&Vec<Vertex>> = arms.iter().enumerate().filter(|&(i, _)| i != ci).map(|(_, a)| a).collect();
    let [a, b] = others[..] else { return None };
    Some(G3Labels {
        c: arms[ci][0],
        u: [a[0], a[1], a[2]],
        v: [b[0], b[1], b[2]],
        w: [arms[ci][1], arms[ci][2], arms[ci][3]],
    })
}

fn classify_fragment(g: &Graph, vertices: VertexSet, xf: Vertex) -> Result<FragmentRecord> {
    let adj = |v: Vertex| g.has_edge(xf, v);
    let bad = |what: &str| Error::Invariant(format!("{what} attachment of {xf} to fragment {vertices}"));
    let (h, _) = g.induced_subgraph(&vertices);
    let n = vertices.len();
    let mut rec = FragmentRecord {
        vertices: vertices.clone(),
        kind: FragmentKind::NonExceptional,
        chosen: xf,
        attachment: Attachment::Free,
        path: Vec::new(),
        g3: None,
    };
    if n == 1 {
        rec.kind = FragmentKind::P1;
    } else if n == 3 && h.size() == 3 {
        rec.kind = FragmentKind::C3;
        rec.attachment = Attachment::C3;
    } else if matches!(n, 2 | 3 | 5 | 6) && is_path(g, &vertices, n) {
        let mut p = path_order(g, &vertices);
        let (kind, att) = match n {
            2 => match (adj(p[0]), adj(p[1])) {
                (true, true) => (FragmentKind::P2, Attachment::P2Both),
                (a, _) => {
                    if !a {
                        p.reverse();
                    }
                    (FragmentKind::P2, Attachment::P2One)
                }
            },
            3 => {
                if adj(p[1]) {
                    (FragmentKind::P3, Attachment::P3Center)
                } else if adj(p[0]) != adj(p[2]) {
                    if !adj(p[0]) {
                        p.reverse();
                    }
                    (FragmentKind::P3, Attachment::P3Leaf)
                } else {
                    return Err(bad("P3"));
                }
            }
            5 => {
                if adj(p[4]) && !adj(p[0]) {
                    p.reverse();
                }
                if adj(p[0]) {
                    (FragmentKind::P5, Attachment::P5Leaf)
                } else {
                    if !adj(p[1]) {
                        p.reverse();
                    }
                    if !(adj(p[2]) && adj(p[1])) {
                        return Err(bad("P5"));
                    }
                    (FragmentKind::P5, Attachment::P5Inner)
                }
            }
            _ => {
                if adj(p[5]) && !adj(p[0]) {
                    p.reverse();
                }
                if adj(p[0]) {
                    (FragmentKind::P6, Attachment::P6Leaf)
                } else if adj(p[1]) || adj(p[4]) {
                    if !adj(p[1]) {
                        p.reverse();
                    }
                    (FragmentKind::P6, Attachment::P6Support)
                } else if adj(p[2]) && adj(p[3]) {
                    (FragmentKind::P6, Attachment::P6Inner)
                } else {
                    return Err(bad("P6"));
                }
            }
        };
        rec.kind = kind;
        rec.attachment = att;
        rec.path = p;
    } else if n == 10 && h.size() == 10 {
        if let Some(mut l) = label_g3(g, &vertices) {
            let swap = |l: &mut G3Labels| std::mem::swap(&mut l.u, &mut l.v);
            rec.attachment = if adj(l.w[2]) {
                Attachment::G3W3
            } else if adj(l.u[2]) || adj(l.v[2]) {
                if !adj(l.u[2]) {
                    swap(&mut l);
                }
                Attachment::G3U3
            } else if adj(l.w[1]) {
                Attachment::G3W2
            } else if adj(l.u[1]) || adj(l.v[1]) {
                if !adj(l.u[1]) {
                    swap(&mut l);
                }
                Attachment::G3U2
            } else if !adj(l.c) {
                return Err(bad("G3"));
            } else if adj(l.w[0]) {
                Attachment::G3W1
            } else if adj(l.u[0]) && adj(l.v[0]) {
                Attachment::G3U1V1
            } else {
                return Err(bad("G3"));
            };
            rec.kind = FragmentKind::G3;
            rec.g3 = Some(l);
        }
    }
    Ok(rec)
}

/// The vertices Steps 4 to 9 add for an exceptional fragment.
fn exceptional_selection(g: &Graph, f: &FragmentRecord) -> Result<VertexSet> {
    let xf = f.chosen;
    let p = &f.path;
    Ok(match f.attachment {
        Attachment::P2Both => VertexSet::from([xf]),
        Attachment::P2One => VertexSet::from([p[0]]),
        Attachment::P3Center => VertexSet::from([xf, p[1]]),
        Attachment::P3Leaf => VertexSet::from([p[0], p[1]]),
        Attachment::C3 => {
            let nb = g.neighbors(xf).intersection(&f.vertices).first().expect("x_F touches its fragment");
            VertexSet::from([xf, nb])
        }
        Attachment::P5Leaf | Attachment::P5Inner => VertexSet::from([xf, p[2], p[3]]),
        Attachment::P6Leaf => VertexSet::from([xf, p[3], p[4]]),
        Attachment::P6Support => VertexSet::from([p[1], p[3], p[4]]),
        Attachment::P6Inner => VertexSet::from([xf, p[1], p[3], p[4]]),
        Attachment::G3W3
        | Attachment::G3U3
        | Attachment::G3W2
        | Attachment::G3U2
        | Attachment::G3W1
        | Attachment::G3U1V1 => {
            let l = f.g3.expect("G3 fragments carry labels");
            let d = VertexSet::from([xf, l.u[0], l.u[1], l.v[0], l.v[1], l.w[0], l.w[1]]);
            let (out, inn): (&[Vertex], &[Vertex]) = match f.attachment {
                Attachment::G3W3 => (&[l.w[0], l.w[1]], &[l.w[2]]),
                Attachment::G3U3 => (&[l.u[0], l.u[1]], &[l.u[2]]),
                Attachment::G3W2 => (&[l.w[1]], &[]),
                Attachment::G3U2 => (&[l.u[1]], &[]),
                Attachment::G3W1 => (&[l.u[0], l.w[0]], &[l.c]),
                _ => (&[l.u[0], l.v[0]], &[l.c]),
            };
            let mut s: VertexSet = d.iter().filter(|v| !out.contains(v)).collect();
            s.extend(inn.iter().copied());
            s
        }
        Attachment::Free => return Err(Error::Invariant("no fixed selection for this fragment".into())),
    })
}

/// Steps 3 to 9, shared by both algorithms.
fn fragment_steps(
    g: &Graph,
    dec: &Decomposition,
    solve: &mut dyn FnMut(&Graph) -> Result<VertexSet>,
    s: &mut VertexSet,
) -> Result<()> {
    for f in &dec.fragments {
        match f.kind {
            FragmentKind::P1 => {}
            FragmentKind::NonExceptional => {
                let (h, map) = g.induced_subgraph(&f.vertices);
                s.extend(map.lift(&solve(&h)?).iter());
            }
            _ => s.extend(exceptional_selection(g, f)?.iter()),
        }
    }
    Ok(())
}

/// Algorithm A: Steps 1 and 2 seed `S` from `|Y|`, Step 3 delegates every
/// non-exceptional fragment other than P1 to `solve`, and Steps 4 to 9 add
/// the fixed selections. The result need not be a DTD-set yet.
pub fn algorithm_a(
    g: &Graph,
    dec: &Decomposition,
    solve: &mut dyn FnMut(&Graph) -> Result<VertexSet>,
) -> Result<VertexSet> {
    let mut s = VertexSet::from([dec.x]);
    if dec.big_y.len() >= 4 {
        let other = dec
            .x1
            .iter()
            .find(|&v| v != dec.x)
            .ok_or_else(|| Error::Invariant("|Y| >= 4 but X_1 has no vertex besides x".into()))?;
        s.insert(other);
    }
    fragment_steps(g, dec, solve, &mut s)?;
    Ok(s)
}

/// Algorithm B: as Algorithm A, except Steps 1 and 2 add both `x` and `y`,
/// and Step 10 adds `x_F` for every P1 fragment.
pub fn algorithm_b(
    g: &Graph,
    dec: &Decomposition,
    solve: &mut dyn FnMut(&Graph) -> Result<VertexSet>,
) -> Result<VertexSet> {
    let mut s = VertexSet::from([dec.x, dec.y]);
    fragment_steps(g, dec, solve, &mut s)?;
    for f in dec.fragments.iter().filter(|f| f.kind == FragmentKind::P1) {
        s.insert(f.chosen);
    }
    Ok(s)
}

/// Greedy DTD-set: repeatedly adds the vertex with the largest coverage gain.
pub fn greedy_dtd(g: &Graph) -> Result<VertexSet> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let dist = g.bfs_distances();
    let far: Vec<VertexSet> = g.vertices().map(|v| dist.sphere(v, 2)).collect();
    let mut s = VertexSet::new();
    let covered = |s: &VertexSet, v: Vertex| !g.neighbors(v).is_disjoint(s) || far[v].intersection_len(s) >= 2;
    loop {
        let open: Vec<Vertex> = g.vertices().filter(|&v| !covered(&s, v)).collect();
        if open.is_empty() {
            return Ok(s);
        }
        let gain = |u: Vertex| -> usize {
            open.iter()
                .map(|&v| {
                    if g.has_edge(u, v) {
                        2
                    } else if far[v].contains(u) {
                        1
                    } else {
                        0
                    }
                })
                .sum()
        };
        let best = g.vertices().filter(|&u| !s.contains(u)).max_by_key(|&u| (gain(u), std::cmp::Reverse(u)));
        s.insert(best.expect("an open vertex has a neighbor outside the set"));
    }
}

/// A DTD-set of a connected claw-free graph outside the exceptional list,
/// of size at most `4n/7`.
///
/// Orders up to 11 and graphs without leaves are solved exactly. Otherwise
/// the leaf decomposition proposes candidates; the smallest one that is a
/// DTD-set within the bound wins, and the exact solver is the last resort.
pub fn construct_dtd_clawfree(g: &Graph) -> Result<Construction> {
    let limit = (g.order() / 3).max(1);
    Builder { limit }.run(g, 0)
}

fn exceptional_member(g: &Graph) -> Option<FamilyId> {
    matches!(g.order(), 2 | 3 | 5 | 6 | 10).then(|| classify_in(g, FamilyClass::CalE)).flatten()
}

fn bound(n: usize) -> usize {
    4 * n / 7
}

struct Builder {
    limit: usize,
}

impl Builder {
    fn run(&self, g: &Graph, depth: usize) -> Result<Construction> {
        if depth > self.limit {
            return Err(Error::Invariant(format!("recursion deeper than {}", self.limit)));
        }
        g.require_claw_free()?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        if let Some(id) = exceptional_member(g) {
            return Err(Error::Exceptional(id.to_string()));
        }
        let exact = |method| -> Result<Construction> {
            Ok(Construction { set: exact_number(g, DominationKind::DisjunctiveTotalDomination)?.witness, method })
        };
        if g.order() <= 11 {
            return exact(MethodTag::ExactSmall);
        }
        if g.min_degree().unwrap_or(0) >= 2 {
            return exact(MethodTag::ExactMinDeg2);
        }
        let mut fell_back = false;
        let found = self.proof_path(g, depth, &mut fell_back)?;
        match found {
            Some(set) => {
                let method = if fell_back { MethodTag::FallbackExact } else { MethodTag::ProofPath };
                Ok(Construction { set, method })
            }
            None if g.order() <= MAX_EXACT_ORDER => exact(MethodTag::FallbackExact),
            None => Err(Error::Invariant(format!(
                "no candidate met the bound and order {} is beyond the exact solver",
                g.order()
            ))),
        }
    }

    /// Solves a piece the proof handles by induction.
    fn solve_piece(&self, h: &Graph, depth: usize, fell_back: &mut bool) -> Result<VertexSet> {
        if h.order() <= EXACT_FRAGMENT_ORDER {
            return Ok(exact_number(h, DominationKind::DisjunctiveTotalDomination)?.witness);
        }
        let c = self.run(h, depth + 1)?;
        *fell_back |= c.method == MethodTag::FallbackExact;
        Ok(c.set)
    }

    fn proof_path(&self, g: &Graph, depth: usize, fell_back: &mut bool) -> Result<Option<VertexSet>> {
        let n = g.order();
        let leaves = g.leaves();
        let root = leaves.first().expect("a graph with minimum degree 1 has a leaf");
        let mut roots = vec![root];
        let x = g.neighbors(root).first().unwrap();
        if g.degree(x) == 2 {
            let heavy = g.support_vertices().iter().find(|&s| g.degree(s) >= 3);
            if let Some(s) = heavy {
                roots.push(g.neighbors(s).intersection(&leaves).first().unwrap());
            }
        }
        let mut best: Option<VertexSet> = None;
        let offer = |c: VertexSet, best: &mut Option<VertexSet>| {
            if c.len() <= bound(n) && best.as_ref().is_none_or(|b| c.len() < b.len()) && is_dtd(g, &c) {
                *best = Some(c);
            }
        };
        for &y in &roots {
            let dec = decompose(g, y)?;
            let s = algorithm_a(g, &dec, &mut |h| self.solve_piece(h, depth, fell_back))?;
            for c in self.phase_one_candidates(g, &dec, &s, depth, fell_back)? {
                offer(c, &mut best);
            }
            if best.is_some() {
                return Ok(best);
            }
        }
        let deg2_leaf = leaves.iter().find(|&z| g.degree(g.neighbors(z).first().unwrap()) == 2);
        if let Some(z) = deg2_leaf {
            let dec = decompose_extended(g, z)?;
            let s = algorithm_b(g, &dec, &mut |h| self.solve_piece(h, depth, fell_back))?;
            for c in phase_two_candidates(g, &dec, &s) {
                offer(c, &mut best);
            }
        }
        Ok(best)
    }

    fn phase_one_candidates(
        &self,
        g: &Graph,
        dec: &Decomposition,
        s: &VertexSet,
        depth: usize,
        fell_back: &mut bool,
    ) -> Result<Vec<VertexSet>> {
        let mut out = vec![s.clone()];
        // Adding a second clique vertex makes every clique vertex and the
        // leaf covered by adjacency.
        out.extend(dec.clique.iter().filter(|&w| w != dec.x).map(|w| s.clone().with(w)));
        // Remove the path x_F z2 z3 z4 built from a P3 fragment hanging by a
        // leaf, solve what is left and put z2, z3 back.
        for f in dec.fragments.iter().filter(|f| f.attachment == Attachment::P3Leaf) {
            let z = [f.chosen, f.path[0], f.path[1], f.path[2]];
            let cut: VertexSet = z.iter().copied().collect();
            let (rest, map) = g.remove_vertices(&cut);
            if rest.order() < 2 || !rest.is_connected() || rest.isolated_vertex().is_some() {
                continue;
            }
            if exceptional_member(&rest).is_some() {
                if let Some(l) = label_g3(g, &map.lift(&VertexSet::full(rest.order()))) {
                    out.extend(claim_g_sets(&l, dec.y, z));
                }
                continue;
            }
            let sub = self.solve_piece(&rest, depth, fell_back)?;
            out.push(map.lift(&sub).with(z[1]).with(z[2]));
        }
        Ok(out)
    }
}

/// The explicit sets used when the graph minus the P4 `z` is a G3 with the
/// root leaf at the end of an arm.
fn claim_g_sets(l: &G3Labels, y: Vertex, z: [Vertex; 4]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let tail = [z[1], z[2]];
    for (a, b) in [(l.u, l.v), (l.v, l.u)] {
        if a[2] == y {
            out.push([a[1], b[0], b[1], l.w[0], l.w[1]].into_iter().chain(tail).collect());
        }
    }
    if l.w[2] == y {
        out.push([l.u[0], l.u[1], l.v[1], l.w[1], l.c].into_iter().chain(tail).collect());
    }
    out
}

fn phase_two_candidates(g: &Graph, dec: &Decomposition, s: &VertexSet) -> Vec<VertexSet> {
    let mut out = vec![s.clone()];
    let others: Vec<Vertex> = dec.clique.iter().filter(|&w| w != dec.x).collect();
    if s.intersection_len(&dec.clique) >= 3 {
        out.push(s.clone().without(dec.x));
    }
    for f in dec.fragments.iter().filter(|f| f.attachment == Attachment::P2One) {
        let (x1, y1, z1) = (f.chosen, f.path[0], f.path[1]);
        if g.degree(z1) > 1 {
            if let Some(x2) = g.neighbors(z1).intersection(&dec.clique).iter().find(|&v| v != x1) {
                out.push(s.clone().without(y1).with(x1).with(x2));
            }
        } else {
            out.extend(dec.x1.iter().filter(|&w| w != dec.x).map(|w| s.clone().with(w)));
        }
    }
    for f in &dec.fragments {
        let (Some(l), xf) = (f.g3, f.chosen) else { continue };
        match f.attachment {
            Attachment::G3W3 => out.push(s.clone().without(xf).without(l.w[2]).with(l.w[0])),
            Attachment::G3U3 => out.push(s.clone().without(l.u[2]).without(l.v[0]).without(xf).with(l.u[0]).with(l.c)),
            _ => {}
        }
    }
    out.extend(others.iter().map(|&w| s.clone().with(w)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::exact_number;

    fn fam(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn decomposition_of_p8() {
        let g = fam("P(8)");
        let dec = decompose(&g, 0).unwrap();
        assert_eq!(dec.x, 1);
        assert_eq!(dec.clique, VertexSet::from([1, 2]));
        assert_eq!(dec.x1, VertexSet::from([1]));
        assert_eq!(dec.big_y, VertexSet::from([0, 1]));
        assert_eq!(dec.fragments.len(), 1);
        assert_eq!(dec.fragments[0].kind, FragmentKind::P5);
        assert_eq!(dec.fragments[0].attachment, Attachment::P5Leaf);
        assert_eq!(dec.fragments[0].path, [3, 4, 5, 6, 7]);
        assert!(decompose(&fam("T(3)"), 3).is_err());
    }

    #[test]
    fn algorithm_steps() {
        // Leaf 0 on x = 1; clique {1, 2}; P3 fragment 3-4-5 hanging from 2 by
        // the leaf 3.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let dec = decompose(&g, 0).unwrap();
        assert_eq!(dec.fragments[0].attachment, Attachment::P3Leaf);
        let s = algorithm_a(&g, &dec, &mut |_| unreachable!()).unwrap();
        assert_eq!(s, VertexSet::from([1, 3, 4]));
        // Triangle fragment.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
        let dec = decompose(&g, 0).unwrap();
        assert_eq!(dec.fragments[0].kind, FragmentKind::C3);
        assert_eq!(algorithm_a(&g, &dec, &mut |_| unreachable!()).unwrap(), VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn algorithm_b_keeps_roots() {
        let g = fam("H(2)");
        let dec = decompose_extended(&g, 1).unwrap();
        assert_eq!((dec.y, dec.z, dec.x), (2, Some(1), 3));
        let s =
            algorithm_b(&g, &dec, &mut |h| Ok(exact_number(h, DominationKind::DisjunctiveTotalDomination)?.witness))
                .unwrap();
        assert!(s.contains(2) && s.contains(3));
    }

    #[test]
    fn construct_on_equality_families() {
        for (name, size) in [("H(2)", 8), ("H(3)", 12), ("L(13)", 8), ("L(14)", 8)] {
            let g = fam(name);
            let c = construct_dtd_clawfree(&g).unwrap();
            assert!(is_dtd(&g, &c.set), "{name}");
            assert_eq!(c.set.len(), size, "{name}");
        }
        assert!(matches!(construct_dtd_clawfree(&fam("P(6)")), Err(Error::Exceptional(_))));
        assert!(matches!(construct_dtd_clawfree(&fam("T(3)")), Err(Error::NotClawFree { .. })));
    }

    #[test]
    fn greedy_small_cases() {
        assert_eq!(greedy_dtd(&fam("C(5)")).unwrap().len(), 2);
        assert_eq!(greedy_dtd(&fam("P(2)")).unwrap(), VertexSet::from([0, 1]));
        assert_eq!(greedy_dtd(&fam("Star(3)")).unwrap().len(), 2);
    }
}
