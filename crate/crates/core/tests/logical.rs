mod common;

use common::{apply_1q, apply_cz, max_diff, H};
use gselc::logical::{
    build_chain_core, build_cluster_direct, build_cluster_elc, build_logical_cluster, encode_logical,
    logical_plus_minus, CircuitLog, EncodingError, LogicalRegister, Stage,
};
use gselc::{Gate, OracleConfig, StateVectorF64};

fn cfg() -> OracleConfig<f64> {
    OracleConfig::default()
}

/// Pentagon on every block plus all 25 cross pairs between neighboring
/// blocks, written out by hand.
fn logical_chain_edges(n_logical: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for j in 0..n_logical {
        let q = |i: usize| 5 * j + i;
        edges.extend([(q(0), q(1)), (q(1), q(2)), (q(2), q(3)), (q(3), q(4)), (q(0), q(4))]);
        if j + 1 < n_logical {
            for u in 0..5 {
                for v in 0..5 {
                    edges.push((q(u), 5 * (j + 1) + v));
                }
            }
        }
    }
    edges
}

#[test]
fn both_constructions_give_the_logical_chain_graph_state() {
    for n_logical in [2, 4] {
        let expected = common::graph_state(5 * n_logical, &logical_chain_edges(n_logical));
        let elc = build_cluster_elc::<f64>(n_logical, &cfg()).unwrap();
        let direct = build_cluster_direct::<f64>(n_logical, &cfg()).unwrap();
        assert!(
            max_diff(elc.state.amplitudes(), &expected) <= 1e-9,
            "elc, n = {n_logical}"
        );
        assert!(
            max_diff(direct.state.amplitudes(), &expected) <= 1e-9,
            "direct, n = {n_logical}"
        );
    }
}

#[test]
fn gate_counts_scale_with_chain_length() {
    for n_logical in [2, 4] {
        let elc = build_cluster_elc::<f64>(n_logical, &cfg()).unwrap();
        let direct = build_cluster_direct::<f64>(n_logical, &cfg()).unwrap();
        assert_eq!(elc.log.cz_count(), 10 * n_logical - 1);
        assert_eq!(elc.log.cz_count_in(Stage::CoreEntangle), n_logical - 1);
        assert_eq!(direct.log.cz_count(), 5 * n_logical + 25 * (n_logical - 1));
        assert_eq!(direct.log.hadamard_count(), 0);
        assert_eq!(
            elc.log.hadamard_count() + elc.log.positional_hadamard_count(),
            2 * n_logical
        );
    }
    // on the 4-chain the first Hadamard pair changes the core graph
    let elc4 = build_cluster_elc::<f64>(4, &cfg()).unwrap();
    assert_eq!(elc4.log.positional_hadamard_count(), 0);
}

#[test]
fn log_replay_reproduces_the_state() {
    let (state, log, report) = build_logical_cluster::<f64>(2, &cfg()).unwrap();
    assert!(report.passed);
    let mut replayed = StateVectorF64::plus_state(10);
    log.replay(&mut replayed).unwrap();
    assert!(replayed.equal_exact(&state, 1e-12).unwrap());
}

#[test]
fn full_encoding_of_plus_is_the_pentagon() {
    // H, four CZs, H, then the cycle, in the naive simulator
    let mut naive = common::plus_state(5);
    naive = apply_1q(&naive, 0, H);
    for anc in 1..5 {
        naive = apply_cz(&naive, 0, anc);
    }
    naive = apply_1q(&naive, 0, H);
    for i in 0..5 {
        naive = apply_cz(&naive, i, (i + 1) % 5);
    }
    let c5 = common::graph_state(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
    assert!(max_diff(&naive, &c5) < 1e-12);

    let mut sv = StateVectorF64::plus_state(5);
    encode_logical(&mut sv, &LogicalRegister::block(0), &mut CircuitLog::new()).unwrap();
    assert!(max_diff(sv.amplitudes(), &c5) < 1e-12);
}

#[test]
fn logical_basis_states() {
    let (plus_l, minus_l) = logical_plus_minus::<f64>().unwrap();
    assert!(plus_l.inner(&minus_l).unwrap().norm() < 1e-12);
    let mut flipped = plus_l.clone();
    for q in 0..5 {
        flipped.apply(&Gate::z(q)).unwrap();
    }
    assert!(flipped.equal_exact(&minus_l, 1e-12).unwrap());
}

#[test]
fn first_hadamard_pair_fixes_two_qubit_cluster() {
    let cs2 = common::graph_state(2, &[(0, 1)]);
    let rotated = apply_1q(&apply_1q(&cs2, 0, H), 1, H);
    assert!(max_diff(&cs2, &rotated) < 1e-12);
}

#[test]
fn bad_chain_lengths() {
    assert_eq!(build_chain_core(5).unwrap_err(), EncodingError::OddLength(5));
    assert_eq!(build_chain_core(0).unwrap_err(), EncodingError::TooShort(0));
    assert!(matches!(
        build_cluster_elc::<f64>(1, &cfg()),
        Err(EncodingError::OddLength(1))
    ));
    assert!(matches!(
        build_cluster_direct::<f64>(6, &cfg()),
        Err(EncodingError::Oracle(_))
    ));
}
