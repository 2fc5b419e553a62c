//! Canonical labeling and isomorphism testing.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! individualizes a vertex of the first smallest non-singleton cell and
//! recurses. Every discrete partition is a labeling; the certificate is the
//! maximum packed adjacency over all explored leaves. Subtrees are skipped
//! when an automorphism fixing the current prefix maps the candidate onto a
//! vertex already explored. Automorphisms come from twin transpositions and
//! from leaves that reproduce an earlier certificate.
//!
//! Aimed at graphs of a few dozen vertices; highly symmetric inputs that are
//! not resolved by twin pruning cost time proportional to their group size.

use std::cmp::Ordering;

use crate::graph::{Graph, Vertex};

/// Upper-triangle adjacency of the canonically relabeled graph.
///
/// Bits run column by column (`(0,1), (0,2), (1,2), (0,3), ...`), the same
/// order graph6 uses, so two graphs are isomorphic exactly when their
/// certificates are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    n: usize,
    bits: Vec<u64>,
}

impl Certificate {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("certificate encodes a simple graph")
    }
}

const MAX_GENERATORS: usize = 128;

struct Search {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    first: Option<(Vec<Vertex>, Vec<u64>)>,
    best: Option<(Vec<Vertex>, Vec<u64>)>,
    generators: Vec<Vec<Vertex>>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Search { n, words, rows, first: None, best: None, generators: Vec::new() }
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn mask_of(&self, cell: &[Vertex]) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for &v in cell {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    fn count_into(&self, v: Vertex, mask: &[u64]) -> u32 {
        self.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
    }

    /// Splits cells by neighbor counts into each splitter until equitable.
    fn refine(&self, cells: &mut Vec<Vec<Vertex>>) {
        loop {
            let mut changed = false;
            let mut si = 0;
            while si < cells.len() {
                let mask = self.mask_of(&cells[si]);
                let mut next = Vec::with_capacity(cells.len() + 1);
                for cell in cells.drain(..) {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(u32, Vertex)> = cell.iter().map(|&v| (self.count_into(v, &mask), v)).collect();
                    if keyed.iter().all(|k| k.0 == keyed[0].0) {
                        next.push(cell);
                        continue;
                    }
                    changed = true;
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|k| k.1).collect());
                            start = i;
                        }
                    }
                }
                *cells = next;
                si += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn pack(&self, ord: &[Vertex]) -> Vec<u64> {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adjacent(ord[i], ord[j]) {
                    bits[k / 64] |= 1 << (k % 64);
                }
                k += 1;
            }
        }
        bits
    }

    fn seed_twin_generators(&mut self) {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let twins =
                    (0..self.n).filter(|&x| x != u && x != v).all(|x| self.adjacent(u, x) == self.adjacent(v, x));
                if twins && self.generators.len() < MAX_GENERATORS {
                    let mut perm: Vec<Vertex> = (0..self.n).collect();
                    perm.swap(u, v);
                    self.generators.push(perm);
                }
            }
        }
    }

    fn record_automorphism(&mut self, from: &[Vertex], to: &[Vertex]) {
        if self.generators.len() >= MAX_GENERATORS {
            return;
        }
        let mut perm = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            self.generators.push(perm);
        }
    }

    fn leaf(&mut self, cells: &[Vec<Vertex>]) {
        let ord: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
        let cert = self.pack(&ord);
        let Some((first_ord, first_cert)) = self.first.clone() else {
            self.first = Some((ord.clone(), cert.clone()));
            self.best = Some((ord, cert));
            return;
        };
        if cert == first_cert {
            self.record_automorphism(&first_ord, &ord);
            return;
        }
        let (best_ord, best_cert) = self.best.clone().expect("best set with first");
        match cert.cmp(&best_cert) {
            Ordering::Greater => self.best = Some((ord, cert)),
            Ordering::Equal => self.record_automorphism(&best_ord, &ord),
            Ordering::Less => {}
        }
    }

    /// Orbit representative map under generators fixing `prefix` pointwise.
    fn orbits(&self, prefix: &[Vertex]) -> Vec<Vertex> {
        let mut parent: Vec<Vertex> = (0..self.n).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn dfs(&mut self, cells: Vec<Vec<Vertex>>, prefix: &mut Vec<Vertex>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                let orb = self.orbits(prefix);
                if explored.iter().any(|&u| orb[u] == orb[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            self.refine(&mut child);
            prefix.push(v);
            self.dfs(child, prefix);
            prefix.pop();
        }
    }

    fn run(mut self) -> (Vec<Vertex>, Vec<u64>) {
        if self.n == 0 {
            return (Vec::new(), Vec::new());
        }
        self.seed_twin_generators();
        let mut cells = vec![(0..self.n).collect::<Vec<_>>()];
        self.refine(&mut cells);
        self.dfs(cells, &mut Vec::new());
        self.best.expect("search visits at least one leaf")
    }
}

/// A canonical relabeling: vertex `v` maps to `labeling[v]`.
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    let (ord, _) = Search::new(g).run();
    let mut perm = vec![0; g.order()];
    for (label, &v) in ord.iter().enumerate() {
        perm[v] = label;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> Certificate {
    let (_, bits) = Search::new(g).run();
    Certificate { n: g.order(), bits }
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}
