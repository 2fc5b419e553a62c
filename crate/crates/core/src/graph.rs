//! Simple undirected graphs on the dense vertex range `0..n`.
//!
//! [`Graph`] is immutable once built. Every derived graph (induced
//! subgraphs, vertex deletions, edge additions) is a fresh value, so graphs
//! can be shared freely across worker threads.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A set of vertex ids stored as a bitset.
///
/// Trailing zero words are trimmed after every mutation so that equality and
/// hashing depend only on the members.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from the low bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet { words: vec![mask] };
        s.trim();
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    /// Returns the members as a single word, or `None` if some member is ≥ 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.words.get(v / 64).is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    /// Largest member.
    pub fn last(&self) -> Option<Vertex> {
        let w = self.words.len().checked_sub(1)?;
        Some(w * 64 + 63 - self.words[w].leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() };
        s.trim();
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet {
            words: self.words.iter().enumerate().map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0)).collect(),
        };
        s.trim();
        s
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().enumerate().all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Builder-style insertion.
    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    /// Builder-style removal.
    pub fn without(mut self, v: Vertex) -> Self {
        self.remove(v);
        self
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Sorted comma-separated list, e.g. `0,3,7`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for VertexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(VertexSet::new());
        }
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<Vertex>()
                    .map_err(|_| Error::Input(format!("malformed vertex '{}' in set list", tok.trim())))
            })
            .collect()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders sets by their sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub const INFINITY: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// Hop distance, or `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        match self.dist[u * self.n + v] {
            Self::INFINITY => None,
            d => Some(d as usize),
        }
    }

    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Vertices at distance exactly `d` from `v`.
    pub fn sphere(&self, v: Vertex, d: usize) -> VertexSet {
        (0..self.n).filter(|&u| self.get(v, u) == Some(d)).collect()
    }
}

/// Maps between a host graph and a derived graph on a subset of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    /// `old_to_new[v]` is the new id of host vertex `v`, if kept.
    pub old_to_new: Vec<Option<Vertex>>,
    /// `new_to_old[i]` is the host vertex carrying new id `i`.
    pub new_to_old: Vec<Vertex>,
}

impl Relabeling {
    /// Lifts a set on the derived graph back to host ids.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.new_to_old[v]).collect()
    }

    /// Projects a host set onto the derived graph, dropping removed vertices.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.old_to_new.get(v).copied().flatten()).collect()
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(); n];
        let mut m = 0;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                m += 1;
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph from per-vertex neighbor masks (requires `n <= 64`).
    ///
    /// The masks must be symmetric and loop-free.
    pub fn from_masks(rows: &[u64]) -> Self {
        let adj: Vec<VertexSet> = rows.iter().map(|&r| VertexSet::from_mask(r)).collect();
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| r & (1 << v) == 0));
        Graph { adj, m }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        self.adj[v].clone().with(v)
    }

    /// Open neighborhood of a set, N(S).
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// δ(G); `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).max()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices().flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Neighbor masks, available when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.adj[v].is_empty())
    }

    /// G + uv. Adding an existing edge returns an identical graph.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::from_edge_list(self.order(), &edges)
    }

    /// G − uv.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().filter(|&e| e != (u.min(v), u.max(v))).collect();
        Graph::from_edge_list(self.order(), &edges).expect("edges of a valid graph")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edge_list(off + other.order(), &edges).expect("edges of valid graphs")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.order(), &edges).expect("permutation of a valid graph")
    }

    /// Breadth-first distances from a single source.
    pub fn distances_from(&self, s: Vertex) -> Vec<u32> {
        let mut dist = vec![DistanceTable::INFINITY; self.order()];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == DistanceTable::INFINITY {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_distances(&self) -> DistanceTable {
        let n = self.order();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(self.distances_from(s));
        }
        DistanceTable { n, dist }
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let comp: VertexSet = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != DistanceTable::INFINITY)
                .map(|(v, _)| v)
                .collect();
            seen = seen.union(&comp);
            comps.push(comp);
        }
        comps
    }

    /// The empty graph and K_1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.distances_from(0).iter().all(|&d| d != DistanceTable::INFINITY)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| s.clone().without(u).is_subset(&self.adj[u]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].is_disjoint(s))
    }

    /// An induced K_{1,3} as `(center, a, b, c)`, if one exists.
    pub fn find_claw(&self) -> Option<(Vertex, Vertex, Vertex, Vertex)> {
        for c in self.vertices() {
            let nb = self.adj[c].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some((c, a, b, d));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Like [`Graph::find_claw`] but as an error, for operations that need claw-freeness.
    pub fn require_claw_free(&self) -> Result<()> {
        match self.find_claw() {
            None => Ok(()),
            Some((center, a, b, c)) => Err(Error::NotClawFree { center, leaves: [a, b, c] }),
        }
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn support_vertices(&self) -> VertexSet {
        self.set_neighborhood(&self.leaves())
    }

    /// G[S] together with the dense relabeling (kept vertices in ascending order).
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Relabeling) {
        let new_to_old: Vec<Vertex> = s.iter().filter(|&v| v < self.order()).collect();
        let mut old_to_new = vec![None; self.order()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj: Vec<VertexSet> =
            new_to_old.iter().map(|&v| self.adj[v].iter().filter_map(|w| old_to_new[w]).collect()).collect();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        (Graph { adj, m }, Relabeling { old_to_new, new_to_old })
    }

    /// G − S.
    pub fn remove_vertices(&self, s: &VertexSet) -> (Graph, Relabeling) {
        self.induced_subgraph(&VertexSet::full(self.order()).difference(s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
