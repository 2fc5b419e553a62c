use proptest::prelude::*;

use dtdom::canon::{canonical_form, is_isomorphic};
use dtdom::constructor::{construct_dtd_clawfree, greedy_dtd};
use dtdom::domination::{exact_number, find_set_of_size, is_dtd, satisfies, DominationKind};
use dtdom::enumerate::{connected_claw_free_graphs, connected_graphs, dedup};
use dtdom::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list};
use dtdom::{Error, Graph, VertexSet};

use DominationKind::{DisjunctiveTotalDomination as Dtd, Domination as Dom, TotalDomination as Tdom};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn no_isolated(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("isolated vertex", |g| g.order() >= 2 && g.isolated_vertex().is_none())
}

/// Line graph of a random connected graph: always claw-free and connected.
fn line_graph(max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_edges).prop_flat_map(|m| {
        proptest::collection::vec((0usize..64, 0usize..64, any::<bool>()), m).prop_map(|picks| {
            // Each pick hangs a new vertex off an existing one or, when
            // flagged and the pair is free, adds a chord.
            let mut edges: Vec<(usize, usize)> = Vec::new();
            let mut n = 1;
            for (a, b, chord) in picks {
                let (u, v) = (a % n, b % n);
                let e = (u.min(v), u.max(v));
                if chord && u != v && !edges.contains(&e) {
                    edges.push(e);
                } else {
                    edges.push((u, n));
                    n += 1;
                }
            }
            let m = edges.len();
            let touch = |i: usize, j: usize| {
                let ((a, b), (c, d)) = (edges[i], edges[j]);
                a == c || a == d || b == c || b == d
            };
            let le: Vec<(usize, usize)> =
                (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).filter(|&(i, j)| touch(i, j)).collect();
            Graph::from_edge_list(m, &le).unwrap()
        })
    })
}

/// A graph paired with one of its non-edges.
fn with_non_edge(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = (Graph, (usize, usize))> {
    g.prop_filter("complete graph", |g| g.order() >= 2 && g.size() < g.order() * (g.order() - 1) / 2).prop_flat_map(
        |g| {
            let n = g.order();
            let free: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
            (Just(g), proptest::sample::select(free))
        },
    )
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Independent DTD test straight from the definition, via Floyd-Warshall.
fn dtd_oracle(g: &Graph, s: &VertexSet) -> bool {
    let n = g.order();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u).iter() {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    (0..n).all(|v| s.iter().any(|u| d[v][u] == 1) || s.iter().filter(|&u| d[v][u] == 2).count() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in permuted(10)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn one_edge_changes_the_class((g, (u, v)) in with_non_edge(graph(8))) {
        prop_assert!(!is_isomorphic(&g, &g.with_edge(u, v).unwrap()));
    }

    #[test]
    fn predicate_matches_definition(g in graph(9), mask in any::<u64>()) {
        let s = VertexSet::from_mask(mask & ((1u64 << g.order()) - 1));
        prop_assert_eq!(is_dtd(&g, &s), dtd_oracle(&g, &s));
    }

    #[test]
    fn exact_witnesses_are_minimum(g in no_isolated(8)) {
        for kind in DominationKind::ALL {
            let r = exact_number(&g, kind).unwrap();
            prop_assert_eq!(r.witness.len(), r.value);
            prop_assert!(satisfies(&g, &r.witness, kind));
            prop_assert!(find_set_of_size(&g, kind, r.value - 1).unwrap().is_none());
        }
    }

    #[test]
    fn parameter_chain(g in no_isolated(10)) {
        let (d, t, x) = (
            exact_number(&g, Dom).unwrap().value,
            exact_number(&g, Tdom).unwrap().value,
            exact_number(&g, Dtd).unwrap().value,
        );
        prop_assert!(d <= t);
        prop_assert!(x <= t);
    }

    #[test]
    fn adding_an_edge_never_raises_dtd((g, (u, v)) in with_non_edge(no_isolated(9))) {
        let h = g.with_edge(u, v).unwrap();
        prop_assert!(exact_number(&h, Dtd).unwrap().value <= exact_number(&g, Dtd).unwrap().value);
    }

    #[test]
    fn greedy_is_valid(g in no_isolated(14)) {
        let s = greedy_dtd(&g).unwrap();
        prop_assert!(is_dtd(&g, &s));
        prop_assert!(s.len() >= exact_number(&g, Dtd).unwrap().value);
    }

    #[test]
    fn construction_meets_bound(g in line_graph(30)) {
        prop_assert!(g.is_connected() && g.is_claw_free());
        match construct_dtd_clawfree(&g) {
            Ok(c) => {
                prop_assert!(is_dtd(&g, &c.set));
                prop_assert!(7 * c.set.len() <= 4 * g.order());
            }
            Err(Error::Exceptional(_)) => prop_assert!(matches!(g.order(), 2 | 3 | 5 | 6 | 10)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn vertex_set_text_round_trip(mask in any::<u64>()) {
        let s = VertexSet::from_mask(mask);
        prop_assert_eq!(s.to_string().parse::<VertexSet>().unwrap(), s);
    }
}

#[test]
fn enumeration_is_label_independent() {
    for n in 3..=6 {
        let graphs = connected_graphs(n);
        let reversed = graphs.iter().map(|g| g.permute(&(0..n).rev().collect::<Vec<_>>()));
        assert_eq!(dedup(reversed), graphs, "order {n}");
    }
    let cf = connected_claw_free_graphs(7);
    assert!(cf.iter().all(|g| g.is_connected() && g.is_claw_free()));
    assert_eq!(dedup(cf.iter().cloned()).len(), cf.len());
}
