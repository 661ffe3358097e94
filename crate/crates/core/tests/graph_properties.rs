mod common;

use gselc::graph::{pairs, Graph};
use gselc::suites::{all_graphs, lc_property_suite, random_graph, seeded_rng};
use gselc::QuadraticForm;
use proptest::prelude::*;
use rand::RngExt;

/// Adjacency as nested bools, transformed without the library.
fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn reference_lc(m: &[Vec<bool>], a: usize) -> Vec<Vec<bool>> {
    let mut out = m.to_vec();
    let nbhd: Vec<usize> = (0..m.len()).filter(|&v| m[a][v]).collect();
    for &u in &nbhd {
        for &v in &nbhd {
            if u != v {
                out[u][v] = !out[u][v];
            }
        }
    }
    out
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = pairs(n).zip(bits).filter(|&(_, on)| on).map(|(e, _)| e);
            Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn arb_graph_with_edge(max_n: usize) -> impl Strategy<Value = (Graph, (usize, usize))> {
    arb_graph(max_n)
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
        .prop_flat_map(|g| {
            let edges = g.edges();
            (Just(g), proptest::sample::select(edges))
        })
}

#[test]
fn lc_matches_reference_on_all_small_graphs() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            for a in 0..n {
                let lc = g.local_complement(a).unwrap();
                assert_eq!(matrix(&lc), reference_lc(&matrix(&g), a), "{g:?} at {a}");
            }
        }
    }
}

#[test]
fn lc_and_elc_identities_exhaustive_up_to_six_vertices() {
    let report = lc_property_suite(6);
    assert!(report.passed, "{report:#?}");
    let checked = report.checks[0].detail["checked"].as_u64().unwrap();
    // Σ_{n≤6} n·2^{n(n-1)/2}
    assert_eq!(checked, 1 + 2 * 2 + 3 * 8 + 4 * 64 + 5 * 1024 + 6 * 32768);
}

proptest! {
    #[test]
    fn lc_matches_reference(g in arb_graph(70), seed in any::<u64>()) {
        let a = (seed as usize) % g.n();
        let lc = g.local_complement(a).unwrap();
        prop_assert_eq!(matrix(&lc), reference_lc(&matrix(&g), a));
    }

    #[test]
    fn lc_keeps_edges_at_a_and_away_from_its_neighborhood(g in arb_graph(30), seed in any::<u64>()) {
        let a = (seed as usize) % g.n();
        let lc = g.local_complement(a).unwrap();
        let closed = |v: usize| v == a || g.has_edge(a, v);
        for (u, v) in pairs(g.n()) {
            if u == a || v == a || !closed(u) || !closed(v) {
                prop_assert_eq!(lc.has_edge(u, v), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn elc_matches_three_reference_lcs((g, (a, b)) in arb_graph_with_edge(70)) {
        let m = reference_lc(&reference_lc(&reference_lc(&matrix(&g), a), b), a);
        let elc = g.edge_local_complement(a, b).unwrap();
        prop_assert_eq!(matrix(&elc), m);
        prop_assert!(elc.has_edge(a, b));
        prop_assert_eq!(elc.edge_local_complement(a, b).unwrap(), g);
    }

    #[test]
    fn elc_trace_ends_at_elc((g, (a, b)) in arb_graph_with_edge(20)) {
        let trace = g.edge_local_complement_trace(a, b).unwrap();
        prop_assert_eq!(trace.len(), 3);
        prop_assert_eq!(&trace[0], &g.local_complement(a).unwrap());
        prop_assert_eq!(&trace[2], &g.edge_local_complement(a, b).unwrap());
    }

    #[test]
    fn json_round_trip_is_byte_identical(g in arb_graph(40)) {
        let text = g.to_json();
        let back = Graph::from_json(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn dot_lists_every_vertex_and_sorted_edges(g in arb_graph(20)) {
        let dot = g.to_dot();
        let edge_lines: Vec<String> = g.edges().iter().map(|(a, b)| format!("  {a} -- {b};")).collect();
        let found: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
        prop_assert_eq!(found, edge_lines.iter().map(String::as_str).collect::<Vec<_>>());
        prop_assert_eq!(dot.lines().filter(|l| !l.contains("--") && l.ends_with(';')).count(), g.n());
    }

    #[test]
    fn form_counts_edges_inside_the_support(g in arb_graph(24), x in any::<u64>()) {
        let x = x & ((1u64 << g.n()) - 1);
        let inside = g.edges().iter().filter(|&&(a, b)| (x >> a) & 1 == 1 && (x >> b) & 1 == 1).count();
        let form = QuadraticForm::from_graph(&g);
        prop_assert_eq!(form.evaluate_index(x), inside % 2 == 1);
        prop_assert_eq!(form.masks().evaluate(x), inside % 2 == 1);
        let (back, linear) = form.to_graph();
        prop_assert_eq!(back, g);
        prop_assert!(linear.none());
    }
}

#[test]
fn json_parser_rejects_bad_graphs() {
    for bad in [
        r#"{"n":3,"edges":[[1,1]]}"#,
        r#"{"n":3,"edges":[[0,1],[1,0]]}"#,
        r#"{"n":3,"edges":[[0,3]]}"#,
        r#"{"n":3,"edges":[[0,1]],"extra":1}"#,
        r#"{"n":3}"#,
        "not json",
    ] {
        assert!(Graph::from_json(bad).is_err(), "{bad}");
    }
    let g = Graph::from_json(r#"{"n":3,"edges":[[2,1],[1,0]]}"#).unwrap();
    assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
}

#[test]
fn closed_form_matches_described_graph_on_random_joins() {
    let mut rng = seeded_rng(2024);
    for _ in 0..200 {
        let n1 = rng.random_range(1..=11);
        let n2 = rng.random_range(1..=12 - n1);
        let g1 = random_graph(&mut rng, n1, 0.5);
        let g2 = random_graph(&mut rng, n2, 0.5);
        let c1 = rng.random_range(0..n1);
        let c2 = rng.random_range(0..n2);
        let expected = common::described_elc(&g1, c1, &g2, c2);

        let form = QuadraticForm::elc_final_form(&g1, c1, &g2, c2).unwrap();
        let (from_form, linear) = form.to_graph();
        assert!(linear.none());
        assert_eq!(from_form.edges(), expected, "G1={g1:?} c1={c1} G2={g2:?} c2={c2}");

        let joined = g1.disjoint_union(&g2).toggle_edge(c1, n1 + c2).unwrap();
        assert_eq!(joined.edge_local_complement(c1, n1 + c2).unwrap().edges(), expected);
    }
}
