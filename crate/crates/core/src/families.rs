//! Named graphs and families, with isomorphism-backed membership tests.
//!
//! Every generator uses a fixed vertex numbering:
//!
//! * `Path(n)`, `Cycle(n)`: vertices `0..n` in order.
//! * `Star(n)` is K_{1,n} with center 0. `DoubleStar(r, s)` has centers 0 and
//!   1, leaves `2..2+r` on 0 and the next `s` on 1.
//! * `Corona(H, k)`: the vertices of `H` come first; vertex `v` of `H` gets
//!   the path `h + v*k, ..., h + v*k + k - 1`, attached at its first vertex.
//! * `T(k)`: center 0; arm `i` is `1+3i`, `2+3i`, `3+3i` with `3+3i` a leaf.
//!   `G(k)` adds the edge 1-4. `F(k)` replaces the edge 0-1 by 1-4.
//! * `TStar`: center 0 with leaves 1, 2 and the path 0-3-4-5-6.
//! * `H(t)`: block `i` is `7i` (a clique vertex) and the path
//!   `7i+1, ..., 7i+6`, whose two middle vertices are joined to `7i`.
//! * `L(13)`: `a1..a7 = 0..6`, `b1..b6 = 7..12`, and 13 joined to 2, 3, 9, 10.
//!   `L(14)`: `a1..a7 = 0..6`, `b1..b7 = 7..13`, clique on {2, 3, 9, 10}.
//! * `C10Prime` is C_10 plus 0-5; `C10DoublePrime` also adds 1-6.
//! * `RelateGadget(k)`: adjacent hubs 0 and 1, middles `2..k+4` joined to
//!   both hubs, and middle `2+j` carrying the leaf `k+4+j`.

use std::fmt;
use std::str::FromStr;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    DoubleStar(usize, usize),
    Corona(Box<FamilyId>, usize),
    T(usize),
    F(usize),
    G(usize),
    TStar,
    H(usize),
    L(usize),
    C10Prime,
    C10DoublePrime,
    RelateGadget(usize),
}

/// Characterization classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyClass {
    CalT,
    CalF,
    CalG,
    CalH,
    CalE,
    CalS,
    CalS1,
    CalL,
}

impl FamilyClass {
    pub const ALL: [FamilyClass; 8] = [
        FamilyClass::CalT,
        FamilyClass::CalF,
        FamilyClass::CalG,
        FamilyClass::CalH,
        FamilyClass::CalE,
        FamilyClass::CalS,
        FamilyClass::CalS1,
        FamilyClass::CalL,
    ];

    /// Members of the finite classes; `None` for the infinite ones.
    pub fn members(self) -> Option<Vec<FamilyId>> {
        use FamilyId::*;
        Some(match self {
            FamilyClass::CalE => vec![Path(2), Path(3), Path(5), Path(6), Cycle(3), G(3)],
            FamilyClass::CalS1 => S1_INDICES.iter().map(|&i| L(i)).collect(),
            FamilyClass::CalS => S1_INDICES.iter().chain(&[13, 14]).map(|&i| L(i)).collect(),
            FamilyClass::CalL => (1..=12).map(L).collect(),
            _ => return None,
        })
    }
}

const S1_INDICES: [usize; 6] = [1, 2, 3, 5, 6, 10];

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyClass::CalT => "T",
            FamilyClass::CalF => "F",
            FamilyClass::CalG => "G",
            FamilyClass::CalH => "H",
            FamilyClass::CalE => "E",
            FamilyClass::CalS => "S",
            FamilyClass::CalS1 => "S1",
            FamilyClass::CalL => "L",
        })
    }
}

impl FromStr for FamilyClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyClass::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Input(format!("unknown family class '{s}'")))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyId::*;
        match self {
            Path(n) => write!(f, "P({n})"),
            Cycle(n) => write!(f, "C({n})"),
            Star(n) => write!(f, "Star({n})"),
            Complete(n) => write!(f, "K({n})"),
            DoubleStar(r, s) => write!(f, "DoubleStar({r},{s})"),
            Corona(h, k) => write!(f, "Corona({h},{k})"),
            T(k) => write!(f, "T({k})"),
            F(k) => write!(f, "F({k})"),
            G(k) => write!(f, "G({k})"),
            TStar => f.write_str("T*"),
            H(t) => write!(f, "H({t})"),
            L(i) => write!(f, "L({i})"),
            C10Prime => f.write_str("C10'"),
            C10DoublePrime => f.write_str("C10''"),
            RelateGadget(k) => write!(f, "RelateGadget({k})"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Case-insensitive `NAME` or `NAME(args)`; single-argument names also
    /// accept a glued number, as in `L13` or `P6`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::Input(format!("unknown family '{s}'"));
        let lower = text.to_ascii_lowercase();
        match lower.as_str() {
            "t*" | "tstar" => return Ok(FamilyId::TStar),
            "c10'" | "c10prime" => return Ok(FamilyId::C10Prime),
            "c10''" | "c10doubleprime" => return Ok(FamilyId::C10DoublePrime),
            _ => {}
        }
        let (name, args): (&str, Vec<&str>) = match text.find('(') {
            Some(open) => {
                let inner = text[open + 1..].strip_suffix(')').ok_or_else(bad)?;
                (&text[..open], split_top_level(inner).ok_or_else(bad)?)
            }
            None => {
                let cut = text.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                (&text[..cut], vec![&text[cut..]])
            }
        };
        let name = name.trim().to_ascii_lowercase();
        if name == "corona" {
            let [h, k] = args[..] else { return Err(bad()) };
            let id = FamilyId::Corona(Box::new(h.parse()?), parse_num(k, s)?);
            id.check()?;
            return Ok(id);
        }
        let nums = args.iter().map(|a| parse_num(a, s)).collect::<Result<Vec<_>>>()?;
        let one = |ctor: fn(usize) -> FamilyId| match nums[..] {
            [a] => Ok(ctor(a)),
            _ => Err(bad()),
        };
        let id = match name.as_str() {
            "p" | "path" => one(FamilyId::Path),
            "c" | "cycle" => one(FamilyId::Cycle),
            "star" => one(FamilyId::Star),
            "k" | "complete" => one(FamilyId::Complete),
            "t" => one(FamilyId::T),
            "f" => one(FamilyId::F),
            "g" => one(FamilyId::G),
            "h" => one(FamilyId::H),
            "l" => one(FamilyId::L),
            "relategadget" | "relate" => one(FamilyId::RelateGadget),
            "s" | "doublestar" => match nums[..] {
                [r, t] => Ok(FamilyId::DoubleStar(r, t)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }?;
        id.check()?;
        Ok(id)
    }
}

fn parse_num(t: &str, whole: &str) -> Result<usize> {
    t.trim().parse().map_err(|_| Error::Input(format!("bad parameter '{}' in family '{whole}'", t.trim())))
}

fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let (mut depth, mut start, mut out) = (0i32, 0, Vec::new());
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    out.push(&s[start..]);
    (depth == 0).then_some(out)
}

impl FamilyId {
    /// Validates the parameter ranges.
    pub fn check(&self) -> Result<()> {
        use FamilyId::*;
        let ok = match self {
            Path(n) | Complete(n) => *n >= 1,
            Cycle(n) => *n >= 3,
            Star(n) | T(n) | H(n) | RelateGadget(n) => *n >= 1,
            F(k) | G(k) => *k >= 2,
            L(i) => (1..=14).contains(i),
            DoubleStar(r, s) => *r >= 1 && *s >= 1,
            Corona(h, k) => return if *k >= 1 { h.check() } else { Err(range(self)) },
            TStar | C10Prime | C10DoublePrime => true,
        };
        if ok {
            Ok(())
        } else {
            Err(range(self))
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        use FamilyId::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) => *n,
            Star(n) => n + 1,
            DoubleStar(r, s) => r + s + 2,
            Corona(h, k) => h.order() * (k + 1),
            T(k) | F(k) | G(k) => 3 * k + 1,
            TStar => 7,
            H(t) => 7 * t,
            L(i) if *i >= 13 => 14,
            L(_) => 7,
            C10Prime | C10DoublePrime => 10,
            RelateGadget(k) => 2 * k + 6,
        }
    }
}

fn range(id: &FamilyId) -> Error {
    Error::Input(format!("parameter out of range in family {id}"))
}

fn path_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn t_edges(k: usize) -> Vec<(Vertex, Vertex)> {
    (0..k).flat_map(|i| [(0, 1 + 3 * i), (1 + 3 * i, 2 + 3 * i), (2 + 3 * i, 3 + 3 * i)]).collect()
}

fn l_edges(i: usize) -> Vec<(Vertex, Vertex)> {
    let mut e = match i {
        1 | 5 | 6 => path_edges(7),
        2 => vec![(0, 1), (0, 4), (1, 4), (1, 2), (2, 3), (4, 5), (5, 6)],
        3 => [path_edges(6), vec![(6, 3), (6, 4)]].concat(),
        4 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (5, 2), (5, 3), (6, 5)],
        7 => [path_edges(7), vec![(6, 3), (6, 2)]].concat(),
        8 => [path_edges(6), vec![(6, 1), (6, 3), (6, 2)]].concat(),
        9 => [path_edges(7), vec![(6, 1), (6, 2)]].concat(),
        10 => cycle_edges(7),
        11 => [cycle_edges(6), vec![(6, 0), (6, 4), (6, 5)]].concat(),
        12 => [cycle_edges(6), vec![(6, 0), (6, 5)]].concat(),
        13 => {
            let mut e = path_edges(7);
            e.extend((8..13).map(|v| (v - 1, v)));
            e.extend([(13, 2), (13, 3), (13, 9), (13, 10)]);
            e
        }
        14 => {
            let mut e = path_edges(7);
            e.extend((8..14).map(|v| (v - 1, v)));
            let q = [2, 3, 9, 10];
            e.extend(q.iter().enumerate().flat_map(|(j, &a)| q[j + 1..].iter().map(move |&b| (a, b))));
            e
        }
        _ => unreachable!("checked range"),
    };
    match i {
        5 => e.push((4, 6)),
        6 => e.extend([(3, 6), (4, 6)]),
        _ => {}
    }
    e
}

/// Builds the graph named by `id`.
pub fn generate(id: &FamilyId) -> Result<Graph> {
    use FamilyId::*;
    id.check()?;
    let n = id.order();
    let edges = match id {
        Path(n) => path_edges(*n),
        Cycle(n) => cycle_edges(*n),
        Star(k) => (1..=*k).map(|v| (0, v)).collect(),
        Complete(n) => (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect(),
        DoubleStar(r, s) => {
            let mut e = vec![(0, 1)];
            e.extend((2..2 + r).map(|v| (0, v)));
            e.extend((2 + r..2 + r + s).map(|v| (1, v)));
            e
        }
        Corona(h, k) => {
            let base = generate(h)?;
            let hn = base.order();
            let mut e = base.edges();
            for v in 0..hn {
                let first = hn + v * k;
                e.push((v, first));
                e.extend((first + 1..first + k).map(|w| (w - 1, w)));
            }
            e
        }
        T(k) => t_edges(*k),
        G(k) => [t_edges(*k), vec![(1, 4)]].concat(),
        F(k) => {
            let mut e: Vec<_> = t_edges(*k).into_iter().filter(|&e| e != (0, 1)).collect();
            e.push((1, 4));
            e
        }
        TStar => vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)],
        H(t) => {
            let mut e = Vec::new();
            for i in 0..*t {
                let c = 7 * i;
                e.extend((c + 2..=c + 6).map(|v| (v - 1, v)));
                e.extend([(c, c + 3), (c, c + 4)]);
                e.extend((0..i).map(|j| (7 * j, c)));
            }
            e
        }
        L(i) => l_edges(*i),
        C10Prime => [cycle_edges(10), vec![(0, 5)]].concat(),
        C10DoublePrime => [cycle_edges(10), vec![(0, 5), (1, 6)]].concat(),
        RelateGadget(k) => {
            let mut e = vec![(0, 1)];
            for j in 0..k + 2 {
                e.extend([(0, 2 + j), (1, 2 + j), (2 + j, k + 4 + j)]);
            }
            e
        }
    };
    Graph::from_edge_list(n, &edges)
}

/// γt^d asserted for the named graph, when known in closed form.
pub fn dtd_reference_value(id: &FamilyId) -> Option<usize> {
    use FamilyId::*;
    match id {
        T(k) | F(k) | G(k) => Some(2 * k),
        TStar => Some(4),
        H(t) => Some(4 * t),
        L(i) if S1_INDICES.contains(i) => Some(4),
        L(13) | L(14) => Some(8),
        Path(n) => crate::domination::dtd_path_formula(*n).ok(),
        Cycle(n) => crate::domination::dtd_cycle_formula(*n).ok(),
        Star(_) | DoubleStar(..) | RelateGadget(_) => Some(2),
        _ => None,
    }
}

fn matches(g: &Graph, id: &FamilyId) -> bool {
    id.check().is_ok() && id.order() == g.order() && generate(id).map(|h| is_isomorphic(g, &h)).unwrap_or(false)
}

/// The parameterized member of `class` that has the order of `g`, if any.
fn candidate(g: &Graph, class: FamilyClass) -> Option<FamilyId> {
    let n = g.order();
    let k = (n % 3 == 1 && n >= 4).then(|| (n - 1) / 3);
    match class {
        FamilyClass::CalT => k.map(FamilyId::T),
        FamilyClass::CalF => k.filter(|&k| k >= 2).map(FamilyId::F),
        FamilyClass::CalG => k.filter(|&k| k >= 2).map(FamilyId::G),
        FamilyClass::CalH => (n.is_multiple_of(7) && n > 0).then_some(FamilyId::H(n / 7)),
        _ => None,
    }
}

/// The member of `class` isomorphic to `g`, if any.
pub fn classify_in(g: &Graph, class: FamilyClass) -> Option<FamilyId> {
    match class.members() {
        Some(list) => list.into_iter().find(|id| matches(g, id)),
        None => candidate(g, class).filter(|id| matches(g, id)),
    }
}

pub fn in_class(g: &Graph, class: FamilyClass) -> bool {
    classify_in(g, class).is_some()
}

/// Names `g` up to isomorphism. Finite lists are tried before the
/// parameterized families, so P_7 is reported as `L(1)` and P_4 as `T(1)`.
pub fn classify(g: &Graph) -> Option<FamilyId> {
    use FamilyId::*;
    let n = g.order();
    let finite = FamilyClass::CalE.members().unwrap().into_iter().chain((1..=14).map(L)).chain([
        C10Prime,
        C10DoublePrime,
        TStar,
    ]);
    let mut ids: Vec<FamilyId> = finite.collect();
    for class in [FamilyClass::CalT, FamilyClass::CalF, FamilyClass::CalG, FamilyClass::CalH] {
        ids.extend(candidate(g, class));
    }
    if n >= 6 && n.is_multiple_of(2) {
        ids.push(RelateGadget((n - 6) / 2));
    }
    ids.extend([Path(n), Cycle(n), Complete(n), Star(n.saturating_sub(1))]);
    if n >= 4 {
        // A double star is fixed by its two center degrees.
        let big: Vec<usize> = g.vertices().map(|v| g.degree(v)).filter(|&d| d > 1).collect();
        if let [a, b] = big[..] {
            ids.push(DoubleStar((a - 1).min(b - 1), (a - 1).max(b - 1)));
        }
    }
    ids.into_iter().find(|id| matches(g, id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_shapes() {
        for k in 1..6 {
            let t = generate(&FamilyId::T(k)).unwrap();
            assert!(t.is_tree() && t.order() == 3 * k + 1);
        }
        for k in 2..6 {
            assert!(generate(&FamilyId::F(k)).unwrap().is_tree());
            let g = generate(&FamilyId::G(k)).unwrap();
            assert_eq!(g.size(), g.order());
        }
        assert_eq!(generate(&FamilyId::H(3)).unwrap().order(), 21);
        assert_eq!(generate(&FamilyId::RelateGadget(2)).unwrap().order(), 10);
        assert_eq!(generate(&"Corona(K(3),2)".parse().unwrap()).unwrap().order(), 9);
        for i in 1..=14 {
            let g = generate(&FamilyId::L(i)).unwrap();
            assert!(g.is_connected() && g.is_claw_free(), "L{i}");
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in
            ["T(4)", "H(3)", "L(13)", "C10'", "C10''", "T*", "Corona(K(3),2)", "DoubleStar(1,2)", "RelateGadget(3)"]
        {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("l13".parse::<FamilyId>().unwrap(), FamilyId::L(13));
        assert_eq!("tstar".parse::<FamilyId>().unwrap(), FamilyId::TStar);
        assert!("L(15)".parse::<FamilyId>().is_err());
        assert!("F(1)".parse::<FamilyId>().is_err());
        assert!("Q(3)".parse::<FamilyId>().is_err());
    }

    #[test]
    fn classification() {
        let p4 = generate(&FamilyId::Path(4)).unwrap();
        assert_eq!(classify(&p4), Some(FamilyId::T(1)));
        assert!(in_class(&p4, FamilyClass::CalT));
        let c7 = generate(&FamilyId::Cycle(7)).unwrap();
        assert!(in_class(&c7, FamilyClass::CalS1));
        let c6 = generate(&FamilyId::Cycle(6)).unwrap();
        assert!(FamilyClass::ALL.iter().all(|&c| !in_class(&c6, c)));
        assert_eq!(classify(&generate(&FamilyId::G(3)).unwrap()), Some(FamilyId::G(3)));
        assert!(in_class(&generate(&FamilyId::G(3)).unwrap(), FamilyClass::CalE));
        assert_eq!(classify(&generate(&FamilyId::Star(3)).unwrap()), Some(FamilyId::Star(3)));
    }
}
