//! Exhaustive generation of small graphs, one per isomorphism class.
//!
//! Connected graphs (and connected claw-free graphs) of order `n` are grown
//! from those of order `n - 1` by adding a vertex with every possible
//! neighborhood and keeping one child per canonical certificate. This is
//! complete because every connected graph has a vertex whose removal leaves
//! it connected, and induced subgraphs of claw-free graphs are claw-free.
//! Free trees come from the level-sequence algorithm of Wright, Richmond,
//! Odlyzko and McKay.

use std::collections::HashSet;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::canon::{canonical_form, Certificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io;

/// Largest builtin order for all connected graphs.
pub const MAX_CONNECTED_ORDER: usize = 8;
/// Largest builtin order for connected claw-free graphs.
pub const MAX_CLAW_FREE_ORDER: usize = 12;
/// Largest builtin order for trees.
pub const MAX_TREE_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum GraphClass {
    #[value(name = "all")]
    AllConnected,
    #[value(name = "clawfree")]
    ConnectedClawFree,
    Trees,
}

impl GraphClass {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            GraphClass::AllConnected => g.is_connected(),
            GraphClass::ConnectedClawFree => g.is_connected() && g.is_claw_free(),
            GraphClass::Trees => g.is_tree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin,
    Graph6File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub class: GraphClass,
    pub source: Source,
}

impl EnumSpec {
    pub fn builtin(order: usize, class: GraphClass) -> Self {
        EnumSpec { order, class, source: Source::Builtin }
    }
}

/// All graphs described by `spec`, pairwise non-isomorphic, sorted by
/// canonical certificate.
///
/// A corpus file contributes its graphs of the requested order that belong
/// to the class; duplicates up to isomorphism are dropped.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Graph>> {
    match &spec.source {
        Source::Builtin => {
            let max = match spec.class {
                GraphClass::AllConnected => MAX_CONNECTED_ORDER,
                GraphClass::ConnectedClawFree => MAX_CLAW_FREE_ORDER,
                GraphClass::Trees => MAX_TREE_ORDER,
            };
            if spec.order > max {
                return Err(Error::TooLarge { order: spec.order, max });
            }
            Ok(match spec.class {
                GraphClass::AllConnected => connected_graphs(spec.order),
                GraphClass::ConnectedClawFree => connected_claw_free_graphs(spec.order),
                GraphClass::Trees => free_trees(spec.order).collect(),
            })
        }
        Source::Graph6File(path) => {
            let graphs = io::read_graph6_file(path)?;
            let wanted = graphs.into_iter().filter(|g| g.order() == spec.order && spec.class.admits(g));
            Ok(dedup(wanted))
        }
    }
}

/// Keeps the first graph of each isomorphism class, as canonical graphs.
pub fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out: Vec<Certificate> =
        graphs.into_iter().map(|g| canonical_form(&g)).filter(|c| seen.insert(c.clone())).collect();
    out.sort();
    out.iter().map(Certificate::to_graph).collect()
}

/// Connected graphs of order `n` up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    grow(n, false)
}

/// Connected claw-free graphs of order `n` up to isomorphism.
pub fn connected_claw_free_graphs(n: usize) -> Vec<Graph> {
    grow(n, true)
}

fn grow(n: usize, claw_free: bool) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let mut certs: Vec<Certificate> =
            level.par_iter().flat_map_iter(|g| children(g, claw_free)).collect::<HashSet<_>>().into_iter().collect();
        certs.sort();
        level = certs.iter().map(Certificate::to_graph).collect();
    }
    level
}

/// Certificates of every one-vertex extension of `g` that stays connected
/// (and claw-free, if asked).
fn children(g: &Graph, claw_free: bool) -> Vec<Certificate> {
    let rows = g.masks().expect("builtin orders fit a word");
    let n = rows.len();
    let mut out = HashSet::new();
    for s in 1u64..1 << n {
        if claw_free && !extension_is_claw_free(&rows, s) {
            continue;
        }
        let mut child = rows.clone();
        let mut bits = s;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            child[u] |= 1 << n;
        }
        child.push(s);
        if new_vertex_is_preferred(&child) {
            out.insert(canonical_form(&Graph::from_masks(&child)));
        }
    }
    out.into_iter().collect()
}

/// Isomorphism-invariant score used to pick which vertex a graph is
/// grown by: degree first, then the degree sum of the neighbors.
fn score(rows: &[u64], v: usize) -> (u32, u32) {
    let mut sum = 0;
    let mut bits = rows[v];
    while bits != 0 {
        sum += rows[bits.trailing_zeros() as usize].count_ones();
        bits &= bits - 1;
    }
    (rows[v].count_ones(), sum)
}

/// Rejects a child when some other non-cut vertex scores strictly higher
/// than the newly added last vertex. Every class still appears: grow it from
/// the deletion of a top-scoring non-cut vertex.
fn new_vertex_is_preferred(rows: &[u64]) -> bool {
    let last = rows.len() - 1;
    let mine = score(rows, last);
    (0..last).all(|v| score(rows, v) <= mine || is_cut_vertex(rows, v))
}

fn is_cut_vertex(rows: &[u64], v: usize) -> bool {
    let all = ((1u64 << rows.len()) - 1) & !(1 << v);
    let start = all & all.wrapping_neg();
    let (mut seen, mut frontier) = (start, start);
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[u] & all & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen != all
}

/// Whether joining a new vertex to `s` in a claw-free graph creates a claw.
///
/// A new claw is either centered at the new vertex (an independent triple in
/// `s`) or uses it as a leaf at some `u` in `s`, which happens exactly when
/// two non-adjacent neighbors of `u` lie outside `s`.
fn extension_is_claw_free(rows: &[u64], s: u64) -> bool {
    let mut a_bits = s;
    while a_bits != 0 {
        let a = a_bits.trailing_zeros() as usize;
        a_bits &= a_bits - 1;
        let far = s & !rows[a] & !(1 << a);
        let mut b_bits = far & !((2u64 << a) - 1);
        while b_bits != 0 {
            let b = b_bits.trailing_zeros() as usize;
            b_bits &= b_bits - 1;
            if far & !rows[b] & !(1 << b) != 0 {
                return false;
            }
        }
        let outside = rows[a] & !s;
        let mut o = outside;
        while o != 0 {
            let x = o.trailing_zeros() as usize;
            o &= o - 1;
            if outside & !rows[x] & !(1 << x) != 0 {
                return false;
            }
        }
    }
    true
}

/// Free trees on `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> FreeTrees {
    let layout = match n {
        0 => None,
        _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
    };
    FreeTrees { n, layout, small_done: false }
}

/// Iterator over level sequences of canonical free trees.
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    small_done: bool,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n == 1 {
            if self.small_done {
                return None;
            }
            self.small_done = true;
            return Some(Graph::empty(1));
        }
        let current = next_tree(self.layout.take()?)?;
        let g = layout_to_graph(&current);
        self.layout = next_rooted_tree(&current, None);
        Some(g)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

fn next_tree(cand: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&cand);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(cand);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&cand, Some(p))?;
    if cand[p] > 2 {
        let (nl, _) = split_tree(&next);
        let h = nl.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, v) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + i] = v;
        }
    }
    Some(next)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|&(_, &d)| d == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (i, &d) in layout.iter().enumerate() {
        stack.truncate(d);
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edge_list(layout.len(), &edges).expect("level sequence encodes a tree")
}
