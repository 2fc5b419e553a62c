//! Theorem checkers over exhaustive small universes.
//!
//! Each checker walks a universe of graphs, solves the relevant parameters
//! exactly and returns a [`VerificationReport`]. Per-graph work runs on the
//! rayon pool; results are merged in universe order, so reports do not
//! depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::domination::{exact_number, DominationKind};
use crate::enumerate::{connected_claw_free_graphs, connected_graphs, dedup, free_trees, GraphClass};
use crate::error::{Error, Result};
use crate::families::{classify_in, generate, FamilyClass, FamilyId};
use crate::graph::Graph;
use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Census7,
    Tree,
    Graph,
    #[value(name = "clawfree")]
    #[serde(rename = "clawfree")]
    ClawFree,
    #[value(name = "mindeg2")]
    #[serde(rename = "mindeg2")]
    MinDeg2,
    DtdLeGt,
}

impl Theorem {
    pub const ALL: [Theorem; 6] =
        [Theorem::Census7, Theorem::Tree, Theorem::Graph, Theorem::ClawFree, Theorem::MinDeg2, Theorem::DtdLeGt];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Census7 => "census7",
            Theorem::Tree => "tree",
            Theorem::Graph => "graph",
            Theorem::ClawFree => "clawfree",
            Theorem::MinDeg2 => "mindeg2",
            Theorem::DtdLeGt => "dtd-le-gt",
        }
    }

    /// Largest order checked when no `max_n` is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Theorem::Census7 => 7,
            Theorem::Tree => 12,
            _ => 8,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub corpus: Option<PathBuf>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityCase {
    pub graph6: String,
    pub order: usize,
    /// Matched family member, or `"unclassified"`.
    pub family: String,
}

pub const UNCLASSIFIED: &str = "unclassified";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub universe: String,
    pub checked: usize,
    pub status: Status,
    pub violations: Vec<Violation>,
    pub equality_cases: Vec<EqualityCase>,
    pub counts: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl VerificationReport {
    fn new(theorem: Theorem, universe: String) -> Self {
        VerificationReport {
            theorem,
            universe,
            checked: 0,
            status: Status::Pass,
            violations: Vec::new(),
            equality_cases: Vec::new(),
            counts: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn bump(&mut self, key: impl Into<String>, by: u64) {
        *self.counts.entry(key.into()).or_insert(0) += by;
    }

    fn violation(&mut self, g: Option<&Graph>, detail: impl Into<String>) {
        let graph6 = g.map(io::to_graph6).unwrap_or_default();
        self.violations.push(Violation { graph6, detail: detail.into() });
    }

    /// Records an equality graph; an unnamed one is also a violation.
    fn equality(&mut self, g: &Graph, family: Option<FamilyId>) {
        let family = family.map_or_else(|| UNCLASSIFIED.to_string(), |f| f.to_string());
        if family == UNCLASSIFIED {
            self.violation(Some(g), "equality case matches no expected family");
        }
        self.equality_cases.push(EqualityCase { graph6: io::to_graph6(g), order: g.order(), family });
    }

    fn finish(mut self, start: Instant) -> Self {
        self.status = if self.passed() { Status::Pass } else { Status::Fail };
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

/// Serializes a report. Key order is fixed, so output differs between runs
/// only in `elapsed_ms`.
pub fn emit_report(r: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(r).expect("reports serialize") + "\n",
        ReportFormat::Text => {
            let mut s = String::new();
            let status = if r.passed() { "pass" } else { "fail" };
            let _ = writeln!(s, "theorem: {}", r.theorem);
            let _ = writeln!(s, "universe: {}", r.universe);
            let _ = writeln!(s, "checked: {}", r.checked);
            let _ = writeln!(s, "status: {status}");
            let _ = writeln!(s, "violations: {}", r.violations.len());
            for v in &r.violations {
                let _ = writeln!(s, "  {} {}", if v.graph6.is_empty() { "-" } else { &v.graph6 }, v.detail);
            }
            let _ = writeln!(s, "equality_cases: {}", r.equality_cases.len());
            for e in &r.equality_cases {
                let _ = writeln!(s, "  n={} {} {}", e.order, e.graph6, e.family);
            }
            let _ = writeln!(s, "counts:");
            for (k, v) in &r.counts {
                let _ = writeln!(s, "  {k}: {v}");
            }
            let _ = writeln!(s, "elapsed_ms: {}", r.elapsed_ms);
            s
        }
    }
}

/// Runs one checker, on a dedicated pool when `jobs` is set.
pub fn run_theorem(theorem: Theorem, opts: &VerifyOptions) -> Result<VerificationReport> {
    let max_n = opts.max_n.unwrap_or(theorem.default_max_n());
    let corpus = opts.corpus.as_deref();
    let go = || match theorem {
        Theorem::Census7 => check_order7_census(),
        Theorem::Tree => check_tree_theorem(max_n, corpus),
        Theorem::Graph => check_graph_theorem(max_n, corpus),
        Theorem::ClawFree => check_clawfree_theorem(max_n, corpus),
        Theorem::MinDeg2 => check_mindeg2_observation(max_n, corpus),
        Theorem::DtdLeGt => check_dtd_le_gt(max_n, corpus),
    };
    match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Input(format!("cannot start {j} workers: {e}")))?
            .install(go),
        None => go(),
    }
}

fn dtd(g: &Graph) -> Result<usize> {
    Ok(exact_number(g, DominationKind::DisjunctiveTotalDomination)?.value)
}

fn gt(g: &Graph) -> Result<usize> {
    Ok(exact_number(g, DominationKind::TotalDomination)?.value)
}

/// `f` on every graph, in parallel, results in input order.
fn solve_all<T: Send>(graphs: &[Graph], f: impl Fn(&Graph) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    graphs.par_iter().map(f).collect()
}

fn check_range(what: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if n > hi {
        return Err(Error::TooLarge { order: n, max: hi });
    }
    if n < lo {
        return Err(Error::Input(format!("{what} needs max-n of at least {lo}, got {n}")));
    }
    Ok(())
}

fn corpus_graphs(path: Option<&Path>, class: GraphClass, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let Some(path) = path else { return Ok(Vec::new()) };
    let graphs = io::read_graph6_file(path)?;
    let mut out = dedup(graphs.into_iter().filter(|g| class.admits(g) && keep(g)));
    out.sort_by_key(|g| g.order());
    Ok(out)
}

fn corpus_note(path: Option<&Path>, count: usize) -> String {
    path.map_or_else(String::new, |p| format!(" plus {count} graphs from {}", p.display()))
}

fn iso_to(g: &Graph, id: &FamilyId) -> bool {
    generate(id).is_ok_and(|h| h.order() == g.order() && h.size() == g.size() && is_isomorphic(g, &h))
}

/// Connected graphs of order 7: those with total domination number 4, the
/// claw-free ones among them, and those whose DTD number is also 4.
pub fn check_order7_census() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut r = VerificationReport::new(Theorem::Census7, "all connected graphs of order 7".into());
    let graphs = connected_graphs(7);
    r.checked = graphs.len();
    let gts = solve_all(&graphs, gt)?;
    let gt4: Vec<&Graph> = graphs.iter().zip(&gts).filter(|&(_, &v)| v == 4).map(|(g, _)| g).collect();
    let claw_free: Vec<&Graph> = gt4.iter().copied().filter(|g| g.is_claw_free()).collect();
    let mut both = Vec::new();
    let mut l_seen = Vec::new();
    for g in &claw_free {
        match classify_in(g, FamilyClass::CalL) {
            Some(FamilyId::L(i)) => l_seen.push(i),
            _ => r.violation(Some(g), "claw-free graph with total domination number 4 is not one of L1..L12"),
        }
        if dtd(g)? == 4 {
            both.push(*g);
        }
    }
    r.bump("connected", graphs.len() as u64);
    r.bump("gt4", gt4.len() as u64);
    r.bump("gt4_clawfree", claw_free.len() as u64);
    r.bump("gt4_clawfree_dtd4", both.len() as u64);
    for (key, want, got) in
        [("gt4", 20, gt4.len()), ("gt4_clawfree", 12, claw_free.len()), ("gt4_clawfree_dtd4", 6, both.len())]
    {
        if got != want {
            r.violation(None, format!("{key}: expected {want}, found {got}"));
        }
    }
    l_seen.sort_unstable();
    if l_seen != (1..=12).collect::<Vec<_>>() {
        r.violation(None, format!("claw-free graphs match L indices {l_seen:?}, expected 1..12"));
    }
    for g in both {
        r.equality(g, classify_in(g, FamilyClass::CalS1));
    }
    Ok(r.finish(start))
}

/// Members of order `n` expected to attain `2(n-1)/3` among trees.
pub fn expected_tree_equalities(n: usize) -> Vec<FamilyId> {
    let mut out = Vec::new();
    if n >= 4 && n % 3 == 1 {
        let k = (n - 1) / 3;
        out.push(FamilyId::T(k));
        if k >= 2 {
            out.push(FamilyId::F(k));
        }
    }
    match n {
        4 => out.push(FamilyId::Star(3)),
        7 => out.push(FamilyId::TStar),
        _ => {}
    }
    out
}

fn classify_tree(g: &Graph) -> Option<FamilyId> {
    classify_in(g, FamilyClass::CalT)
        .or_else(|| classify_in(g, FamilyClass::CalF))
        .or_else(|| [FamilyId::Star(3), FamilyId::TStar].into_iter().find(|id| iso_to(g, id)))
}

/// Trees of order 4 to `max_n` other than P5 and P6: the DTD number is at
/// most `2(n-1)/3`, with equality exactly on the expected members.
pub fn check_tree_theorem(max_n: usize, corpus: Option<&Path>) -> Result<VerificationReport> {
    check_range("tree", max_n, 4, crate::enumerate::MAX_TREE_ORDER)?;
    let start = Instant::now();
    let extra = corpus_graphs(corpus, GraphClass::Trees, |g| g.order() > max_n)?;
    let mut r = VerificationReport::new(
        Theorem::Tree,
        format!("all trees of order 4..={max_n} except P5, P6{}", corpus_note(corpus, extra.len())),
    );
    let mut universe: Vec<(bool, Vec<Graph>)> = (4..=max_n).map(|n| (true, free_trees(n).collect())).collect();
    universe.push((false, extra));
    for (complete, graphs) in universe {
        // P5 and P6 are the excluded trees.
        let graphs: Vec<Graph> =
            graphs.into_iter().filter(|g| !(matches!(g.order(), 5 | 6) && g.max_degree() <= Some(2))).collect();
        let values = solve_all(&graphs, dtd)?;
        let mut found: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (g, &v) in graphs.iter().zip(&values) {
            let n = g.order();
            r.checked += 1;
            r.bump(format!("trees_n{n:02}"), 1);
            if 3 * v > 2 * (n - 1) {
                r.violation(Some(g), format!("DTD number {v} exceeds 2(n-1)/3"));
            } else if 3 * v == 2 * (n - 1) {
                let fam = classify_tree(g);
                if n >= 8 && !fam.as_ref().is_some_and(|f| matches!(f, FamilyId::T(_) | FamilyId::F(_))) {
                    r.violation(Some(g), "equality tree of order at least 8 outside T and F");
                }
                found.entry(n).or_default().extend(fam.as_ref().map(|f| f.to_string()));
                r.equality(g, fam);
            }
        }
        if complete {
            let n = graphs.first().map_or(0, Graph::order);
            let mut got = found.remove(&n).unwrap_or_default();
            got.sort();
            let mut want: Vec<String> = expected_tree_equalities(n).iter().map(|f| f.to_string()).collect();
            want.sort();
            if got != want {
                r.violation(None, format!("order {n}: equality members {got:?}, expected {want:?}"));
            }
        }
    }
    r.bump("equality", r.equality_cases.len() as u64);
    Ok(r.finish(start))
}

fn classify_graph_equality(g: &Graph) -> Option<FamilyId> {
    [FamilyClass::CalT, FamilyClass::CalF, FamilyClass::CalG].into_iter().find_map(|c| classify_in(g, c))
}

/// Connected graphs of order 8 (and corpus graphs of order at least 8):
/// the DTD number is at most `2(n-1)/3`, with equality only on T, F and G
/// members.
pub fn check_graph_theorem(max_n: usize, corpus: Option<&Path>) -> Result<VerificationReport> {
    check_range("graph", max_n, 8, crate::enumerate::MAX_CONNECTED_ORDER)?;
    let start = Instant::now();
    let mut graphs = connected_graphs(8);
    let extra = corpus_graphs(corpus, GraphClass::AllConnected, |g| g.order() >= 8 && g.order() != 8)?;
    let mut r = VerificationReport::new(
        Theorem::Graph,
        format!("all connected graphs of order 8{}", corpus_note(corpus, extra.len())),
    );
    graphs.extend(extra);
    let values = solve_all(&graphs, dtd)?;
    for (g, &v) in graphs.iter().zip(&values) {
        let n = g.order();
        r.checked += 1;
        r.bump(format!("graphs_n{n:02}"), 1);
        if 3 * v > 2 * (n - 1) {
            r.violation(Some(g), format!("DTD number {v} exceeds 2(n-1)/3"));
        } else if 3 * v == 2 * (n - 1) {
            r.bump(format!("equality_n{n:02}"), 1);
            r.equality(g, classify_graph_equality(g));
        }
    }
    Ok(r.finish(start))
}

fn exceptional(g: &Graph) -> Option<FamilyId> {
    matches!(g.order(), 2 | 3 | 5 | 6 | 10).then(|| classify_in(g, FamilyClass::CalE)).flatten()
}

fn clawfree_universe(max_n: usize, corpus: Option<&Path>, lo: usize) -> Result<(Vec<Graph>, usize)> {
    let mut graphs: Vec<Graph> = (lo..=max_n).flat_map(connected_claw_free_graphs).collect();
    let extra = corpus_graphs(corpus, GraphClass::ConnectedClawFree, |g| g.order() > max_n)?;
    let count = extra.len();
    graphs.extend(extra);
    Ok((graphs, count))
}

/// Connected claw-free graphs of order 2 to `max_n`: outside the exceptional
/// list the DTD number is at most `4n/7`, and equality happens only in H
/// and S.
pub fn check_clawfree_theorem(max_n: usize, corpus: Option<&Path>) -> Result<VerificationReport> {
    check_range("clawfree", max_n, 2, crate::enumerate::MAX_CLAW_FREE_ORDER)?;
    let start = Instant::now();
    let (graphs, extra) = clawfree_universe(max_n, corpus, 2)?;
    let mut r = VerificationReport::new(
        Theorem::ClawFree,
        format!("all connected claw-free graphs of order 2..={max_n}{}", corpus_note(corpus, extra)),
    );
    let values = solve_all(&graphs, |g| if exceptional(g).is_some() { Ok(None) } else { dtd(g).map(Some) })?;
    for (g, v) in graphs.iter().zip(values) {
        let n = g.order();
        r.checked += 1;
        r.bump(format!("graphs_n{n:02}"), 1);
        let Some(v) = v else {
            r.bump("exceptional", 1);
            continue;
        };
        if 7 * v > 4 * n {
            r.violation(Some(g), format!("DTD number {v} exceeds 4n/7"));
        } else if 7 * v == 4 * n {
            let fam = classify_in(g, FamilyClass::CalH).or_else(|| classify_in(g, FamilyClass::CalS));
            r.equality(g, fam);
        }
    }
    r.bump("equality", r.equality_cases.len() as u64);
    Ok(r.finish(start))
}

/// Connected claw-free graphs with minimum degree at least 2: the DTD number
/// is below `4n/7` except on C3 and C7.
pub fn check_mindeg2_observation(max_n: usize, corpus: Option<&Path>) -> Result<VerificationReport> {
    check_range("mindeg2", max_n, 3, crate::enumerate::MAX_CLAW_FREE_ORDER)?;
    let start = Instant::now();
    let (mut graphs, _) = clawfree_universe(max_n, corpus, 3)?;
    graphs.retain(|g| g.min_degree() >= Some(2));
    let mut r = VerificationReport::new(
        Theorem::MinDeg2,
        format!(
            "connected claw-free graphs with minimum degree 2 of order 3..={max_n}{}",
            corpus.map_or_else(String::new, |p| format!(" plus {}", p.display()))
        ),
    );
    let values = solve_all(&graphs, dtd)?;
    for (g, &v) in graphs.iter().zip(&values) {
        let n = g.order();
        r.checked += 1;
        r.bump(format!("graphs_n{n:02}"), 1);
        if 7 * v >= 4 * n {
            let cycle = [FamilyId::Cycle(3), FamilyId::Cycle(7)].into_iter().find(|id| iso_to(g, id));
            match cycle {
                Some(id) => {
                    r.bump("allowed", 1);
                    r.equality_cases.push(EqualityCase { graph6: io::to_graph6(g), order: n, family: id.to_string() });
                }
                None => r.violation(Some(g), format!("DTD number {v} is not below 4n/7")),
            }
        }
    }
    Ok(r.finish(start))
}

/// Connected graphs of order 2 to `max_n`: the DTD number never exceeds the
/// total domination number.
pub fn check_dtd_le_gt(max_n: usize, corpus: Option<&Path>) -> Result<VerificationReport> {
    check_range("dtd-le-gt", max_n, 2, crate::enumerate::MAX_CONNECTED_ORDER)?;
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (2..=max_n).flat_map(connected_graphs).collect();
    let extra = corpus_graphs(corpus, GraphClass::AllConnected, |g| g.order() > max_n)?;
    let mut r = VerificationReport::new(
        Theorem::DtdLeGt,
        format!("all connected graphs of order 2..={max_n}{}", corpus_note(corpus, extra.len())),
    );
    graphs.extend(extra);
    let pairs = solve_all(&graphs, |g| Ok((dtd(g)?, gt(g)?)))?;
    for (g, &(d, t)) in graphs.iter().zip(&pairs) {
        r.checked += 1;
        if d > t {
            r.violation(Some(g), format!("DTD number {d} exceeds total domination number {t}"));
        } else if d == t {
            r.bump("equal", 1);
        } else {
            r.bump("strict", 1);
        }
    }
    Ok(r.finish(start))
}
