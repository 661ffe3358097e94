//! Seeded randomized and exhaustive verification runs.
//!
//! Every randomized suite draws from `ChaCha8Rng::seed_from_u64(seed)`, so a
//! seed fully determines the graphs visited.

use crate::graph::{pairs, Graph};
use crate::oracle::{
    probe_shared_neighborhood, verify_stabilizers, verify_theorem1, verify_vertex_lc, OracleConfig, Result,
};
use crate::report::Report;
use crate::scalar::Scalar;
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub const DEFAULT_SEED: u64 = 0;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

/// `trials` random instances of the H-pair/ELC identity: `G1`, `G2` with
/// `1..=max_part` vertices each, edge probability 1/2, uniform cores.
pub fn theorem1_suite<T: Scalar>(
    trials: usize,
    max_part: usize,
    seed: u64,
    config: &OracleConfig<T>,
) -> Result<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("theorem1");
    for k in 0..trials {
        let n1 = rng.random_range(1..=max_part);
        let n2 = rng.random_range(1..=max_part);
        let g1 = random_graph(&mut rng, n1, 0.5);
        let g2 = random_graph(&mut rng, n2, 0.5);
        let c1 = rng.random_range(0..n1);
        let c2 = rng.random_range(0..n2);
        let mut trial = verify_theorem1(&g1, c1, &g2, c2, config)?;
        trial.notes.clear();
        report.absorb(&format!("trial {k}: "), trial);
    }
    report.note(format!(
        "seed {seed}, {trials} trials, parts of 1..={max_part} vertices"
    ));
    Ok(report)
}

/// Vertex LC unitary on `trials` random graphs with `1..=max_n` vertices.
pub fn vertex_lc_suite<T: Scalar>(trials: usize, max_n: usize, seed: u64, config: &OracleConfig<T>) -> Result<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("vertex-lc");
    for k in 0..trials {
        let n = rng.random_range(1..=max_n);
        let g = random_graph(&mut rng, n, 0.5);
        let a = rng.random_range(0..n);
        report.absorb(&format!("trial {k}: "), verify_vertex_lc(&g, a, config)?);
    }
    report.note(format!("seed {seed}, {trials} trials, up to {max_n} vertices"));
    Ok(report)
}

/// Vertex LC unitary on every labeled graph with `1..=max_n` vertices and
/// every vertex.
pub fn vertex_lc_exhaustive<T: Scalar>(max_n: usize, config: &OracleConfig<T>) -> Result<Report> {
    let mut report = Report::new("vertex-lc-exhaustive");
    let mut checked = 0usize;
    for n in 1..=max_n {
        for g in all_graphs(n) {
            for a in 0..n {
                let r = verify_vertex_lc(&g, a, config)?;
                checked += 1;
                if !r.passed {
                    report.absorb(&format!("{:?} at {a}: ", g.edges()), r);
                }
            }
        }
    }
    report.expect("all instances", report.passed, json!({ "checked": checked }));
    Ok(report)
}

/// Stabilizer check on `graphs` random graphs with `1..=max_n` vertices.
pub fn stabilizer_suite<T: Scalar>(graphs: usize, max_n: usize, seed: u64, config: &OracleConfig<T>) -> Result<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("stabilizers");
    for k in 0..graphs {
        let n = rng.random_range(1..=max_n);
        let g = random_graph(&mut rng, n, 0.5);
        report.absorb(&format!("graph {k}: "), verify_stabilizers(&g, config)?);
    }
    report.note(format!("seed {seed}, {graphs} graphs, up to {max_n} vertices"));
    Ok(report)
}

/// Every labeled graph on `n` vertices, in pair-code order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let n_pairs = n * n.saturating_sub(1) / 2;
    assert!(n_pairs < 64, "too many graphs to enumerate");
    (0..1u64 << n_pairs).map(move |code| Graph::from_pair_code(n, code))
}

#[derive(Default)]
struct Tally {
    checked: usize,
    counterexample: Option<serde_json::Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self, report: &mut Report, label: &str) {
        report.expect(
            label,
            self.counterexample.is_none(),
            json!({ "checked": self.checked, "counterexample": self.counterexample }),
        );
    }
}

/// Graph-level LC/ELC identities over every labeled graph on
/// `1..=max_n` vertices:
///
/// * `LC(a)` is an involution;
/// * `LC(a) LC(b) LC(a) = LC(b) LC(a) LC(b)` on every edge;
/// * the direct ELC rule equals the LC composition;
/// * ELC is an involution;
/// * ELC swaps the neighborhoods of `a` and `b`, excluding each other.
pub fn lc_property_suite(max_n: usize) -> Report {
    let mut involution = Tally::default();
    let mut braid = Tally::default();
    let mut direct = Tally::default();
    let mut elc_involution = Tally::default();
    let mut swap = Tally::default();

    for n in 1..=max_n {
        for g in all_graphs(n) {
            for a in 0..n {
                let lc = g.local_complement(a).expect("in range");
                involution.check(
                    lc.local_complement(a).expect("in range") == g,
                    || json!({ "edges": g.edges(), "vertex": a }),
                );
            }
            for (a, b) in g.edges() {
                let witness = || json!({ "edges": g.edges(), "edge": [a, b] });
                let aba = g.edge_local_complement_by_lc(a, b).expect("edge");
                let bab = g.edge_local_complement_by_lc(b, a).expect("edge");
                braid.check(aba == bab, witness);

                let elc = g.edge_local_complement(a, b).expect("edge");
                direct.check(elc == aba, witness);
                elc_involution.check(elc.edge_local_complement(a, b).expect("edge") == g, witness);

                let without = |set: &crate::VertexSet, v: usize| {
                    let mut s = set.clone();
                    s.set(v, false);
                    s
                };
                let swapped =
                    without(elc.row(a), b) == without(g.row(b), a) && without(elc.row(b), a) == without(g.row(a), b);
                swap.check(swapped, witness);
            }
        }
    }

    let mut report = Report::new("lc-properties");
    involution.finish(&mut report, "LC is an involution");
    braid.finish(&mut report, "LC(a)LC(b)LC(a) = LC(b)LC(a)LC(b)");
    direct.finish(&mut report, "direct ELC rule equals LC composition");
    elc_involution.finish(&mut report, "ELC is an involution");
    swap.finish(&mut report, "ELC swaps neighborhoods of a and b");
    report.note(format!("all labeled graphs on 1..={max_n} vertices"));
    report
}

/// Compares `H_a H_b |G>` with `|ELC(a,b) G>` on random edges of random
/// graphs, where the endpoints may share neighbors. Purely observational.
pub fn shared_neighborhood_survey<T: Scalar>(
    samples: usize,
    max_n: usize,
    seed: u64,
    config: &OracleConfig<T>,
) -> Result<Report> {
    let mut rng = seeded_rng(seed);
    let mut report = Report::new("shared-neighborhood");
    let (mut shared, mut exact, mut up_to_phase, mut disjoint_exact, mut disjoint) = (0, 0, 0, 0, 0);
    let mut drawn = 0;
    while drawn < samples {
        let n = rng.random_range(2..=max_n);
        let g = random_graph(&mut rng, n, 0.5);
        let edges = g.edges();
        if edges.is_empty() {
            continue;
        }
        drawn += 1;
        let (a, b) = edges[rng.random_range(0..edges.len())];
        let probe = probe_shared_neighborhood(&g, a, b, config)?;
        let detail = &probe.checks[0].detail;
        let is_exact = probe.checks[0].passed;
        if detail["shared"].as_array().is_some_and(|s| !s.is_empty()) {
            shared += 1;
            exact += usize::from(is_exact);
            up_to_phase += usize::from(detail["equal_up_to_phase"] == true);
        } else {
            disjoint += 1;
            disjoint_exact += usize::from(is_exact);
        }
    }
    report.observe(
        "H pair equals ELC when neighborhoods overlap",
        exact == shared,
        json!({ "samples": shared, "exact": exact, "up_to_phase": up_to_phase }),
    );
    report.observe(
        "H pair equals ELC when neighborhoods are disjoint",
        disjoint_exact == disjoint,
        json!({ "samples": disjoint, "exact": disjoint_exact }),
    );
    Ok(report)
}
