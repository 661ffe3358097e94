//! Five-qubit-code block encodings and logical cluster states.
//!
//! Register `J` occupies qubits `5J..5J+5` with its core first. A block
//! encoding is `E = C_pent · H_core · [Π_i CZ(core, anc_i)] · H_core`:
//! a repetition (GHZ-type) encoding followed by the pentagon CZ cycle.
//!
//! Two constructions of an even-length logical chain are provided:
//!
//! * direct: encode every block, then apply a 25-CZ logical CZ between
//!   neighboring blocks;
//! * ELC: entangle only the core qubits, then encode. The Hadamard pairs
//!   inside the encodings act as edge local complementations, so one
//!   physical CZ per logical link suffices.

mod log;

pub use log::{CircuitLog, LoggedGate, Stage};

use crate::graph::{Graph, GraphError};
use crate::oracle::{minus, plus, Gate, OracleConfig, OracleError, StateVector};
use crate::report::Report;
use crate::scalar::Scalar;
use num_complex::Complex;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

/// Qubits per logical register.
pub const BLOCK_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EncodingError {
    #[error("odd chain length {0}; only even numbers of logical qubits are supported")]
    OddLength(usize),
    #[error("a logical chain needs at least 2 logical qubits, got {0}")]
    TooShort(usize),
    #[error("register qubits must be distinct: {0:?}")]
    DuplicateQubit([usize; BLOCK_SIZE]),
    #[error("registers share qubit {0}")]
    Overlap(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = EncodingError> = std::result::Result<T, E>;

/// One core qubit and four ancillae forming a five-qubit block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LogicalRegister {
    pub core: usize,
    pub ancillae: [usize; 4],
}

impl LogicalRegister {
    pub fn new(core: usize, ancillae: [usize; 4]) -> Result<Self> {
        let reg = Self { core, ancillae };
        let qubits = reg.qubits();
        for (k, q) in qubits.iter().enumerate() {
            if qubits[..k].contains(q) {
                return Err(EncodingError::DuplicateQubit(qubits));
            }
        }
        Ok(reg)
    }

    /// Register `j` of the standard layout: qubits `5j..5j+5`, core first.
    pub fn block(j: usize) -> Self {
        let base = BLOCK_SIZE * j;
        Self {
            core: base,
            ancillae: [base + 1, base + 2, base + 3, base + 4],
        }
    }

    /// Core followed by the ancillae.
    pub fn qubits(&self) -> [usize; BLOCK_SIZE] {
        let [a, b, c, d] = self.ancillae;
        [self.core, a, b, c, d]
    }

    fn check_fits(&self, n_qubits: usize) -> Result<()> {
        match self.qubits().into_iter().find(|&q| q >= n_qubits) {
            Some(qubit) => Err(OracleError::OutOfRange { qubit, n: n_qubits }.into()),
            None => Ok(()),
        }
    }
}

fn run<T: Scalar>(sv: &mut StateVector<T>, log: &mut CircuitLog, gate: Gate, stage: Stage) -> Result<()> {
    sv.apply(&gate)?;
    log.record(gate, stage);
    Ok(())
}

/// `H_core [Π_i CZ(core, anc_i)] H_core`: 4 CZ, 2 H.
///
/// On `|0>|+>^4` this gives `(|+>^5 + |->^5)/sqrt(2)`; on `|1>|+>^4` the
/// relative sign flips.
pub fn ghz_encode<T: Scalar>(sv: &mut StateVector<T>, reg: &LogicalRegister, log: &mut CircuitLog) -> Result<()> {
    reg.check_fits(sv.n_qubits())?;
    run(sv, log, Gate::h(reg.core), Stage::GhzEncode)?;
    for &anc in &reg.ancillae {
        run(sv, log, Gate::cz(reg.core, anc), Stage::GhzEncode)?;
    }
    run(sv, log, Gate::h(reg.core), Stage::GhzEncode)
}

/// CZ around the cycle `q0-q1-q2-q3-q4-q0` of the register.
pub fn pentagon<T: Scalar>(sv: &mut StateVector<T>, reg: &LogicalRegister, log: &mut CircuitLog) -> Result<()> {
    reg.check_fits(sv.n_qubits())?;
    let q = reg.qubits();
    for i in 0..BLOCK_SIZE {
        run(sv, log, Gate::cz(q[i], q[(i + 1) % BLOCK_SIZE]), Stage::Pentagon)?;
    }
    Ok(())
}

/// Full block encoding: [`ghz_encode`] then [`pentagon`]; 9 CZ, 2 H.
pub fn encode_logical<T: Scalar>(sv: &mut StateVector<T>, reg: &LogicalRegister, log: &mut CircuitLog) -> Result<()> {
    ghz_encode(sv, reg, log)?;
    pentagon(sv, reg, log)
}

/// All 25 CZs between the qubits of two disjoint registers.
///
/// After both blocks are encoded this acts as a logical CZ: the parity of
/// one block controls `Z^{⊗5}` on the other, and `Z^{⊗5}` swaps `|+L>` and `|-L>`.
pub fn logical_cz<T: Scalar>(
    sv: &mut StateVector<T>,
    a: &LogicalRegister,
    b: &LogicalRegister,
    log: &mut CircuitLog,
) -> Result<()> {
    a.check_fits(sv.n_qubits())?;
    b.check_fits(sv.n_qubits())?;
    if let Some(q) = a.qubits().into_iter().find(|q| b.qubits().contains(q)) {
        return Err(EncodingError::Overlap(q));
    }
    for qa in a.qubits() {
        for qb in b.qubits() {
            run(sv, log, Gate::cz(qa, qb), Stage::LogicalCz)?;
        }
    }
    Ok(())
}

/// The two encoded basis states `(|+L>, |-L>)` of a single register.
pub fn logical_plus_minus<T: Scalar>() -> Result<(StateVector<T>, StateVector<T>)> {
    let reg = LogicalRegister::block(0);
    let encode = |core: [Complex<T>; 2]| -> Result<StateVector<T>> {
        let mut factors = vec![plus(); BLOCK_SIZE];
        factors[0] = core;
        let mut sv = StateVector::product(&factors);
        encode_logical(&mut sv, &reg, &mut CircuitLog::new())?;
        Ok(sv)
    };
    Ok((encode(plus())?, encode(minus())?))
}

/// Result of one construction: the final state and every gate applied.
#[derive(Debug, Clone)]
pub struct Construction<T: Scalar> {
    pub state: StateVector<T>,
    pub log: CircuitLog,
    /// State right before the pentagons, if it was captured.
    pub pre_pentagon: Option<StateVector<T>>,
}

fn check_chain_length(n_logical: usize) -> Result<()> {
    if n_logical % 2 == 1 {
        return Err(EncodingError::OddLength(n_logical));
    }
    if n_logical < 2 {
        return Err(EncodingError::TooShort(n_logical));
    }
    Ok(())
}

/// `Π_i CZ^L(i, i+1) Π_J E_J |+>^(5n)`.
///
/// Every core starts in `|+>`, where `H_core` maps it to `|0>` and the
/// four encoding CZs act trivially, so each `E_J` reduces to its pentagon
/// and only the pentagons are applied. For `n = 2` this costs
/// `10 + 25 = 35` CZ.
pub fn build_cluster_direct<T: Scalar>(n_logical: usize, config: &OracleConfig<T>) -> Result<Construction<T>> {
    check_chain_length(n_logical)?;
    config.check_size(BLOCK_SIZE * n_logical)?;
    let regs: Vec<_> = (0..n_logical).map(LogicalRegister::block).collect();
    let mut sv = StateVector::plus_state(BLOCK_SIZE * n_logical);
    let mut log = CircuitLog::new();
    for reg in &regs {
        pentagon(&mut sv, reg, &mut log)?;
    }
    for pair in regs.windows(2) {
        logical_cz(&mut sv, &pair[0], &pair[1], &mut log)?;
    }
    Ok(Construction {
        state: sv,
        log,
        pre_pentagon: None,
    })
}

/// `Π_J E_J |CS_n>|+>^(4n)` with the core chain `|CS_n>` built first.
///
/// Gates are applied layer by layer: core CZs, the first Hadamard of every
/// encoding (paired left to right along the chain), the GHZ-type CZs, the
/// second Hadamards, and finally the pentagons. A first-layer Hadamard
/// pair whose edge local complementation leaves the core graph unchanged
/// is logged as positional. Costs `10n - 1` CZ.
pub fn build_cluster_elc<T: Scalar>(n_logical: usize, config: &OracleConfig<T>) -> Result<Construction<T>> {
    elc_pipeline(n_logical, config, false)
}

fn elc_pipeline<T: Scalar>(n_logical: usize, config: &OracleConfig<T>, capture: bool) -> Result<Construction<T>> {
    check_chain_length(n_logical)?;
    config.check_size(BLOCK_SIZE * n_logical)?;
    let regs: Vec<_> = (0..n_logical).map(LogicalRegister::block).collect();
    let mut sv = StateVector::plus_state(BLOCK_SIZE * n_logical);
    let mut log = CircuitLog::new();

    for pair in regs.windows(2) {
        run(
            &mut sv,
            &mut log,
            Gate::cz(pair[0].core, pair[1].core),
            Stage::CoreEntangle,
        )?;
    }

    let mut core_graph = Graph::path(n_logical);
    for k in 0..n_logical / 2 {
        let (a, b) = (2 * k, 2 * k + 1);
        let next = core_graph.edge_local_complement(a, b)?;
        let positional = next == core_graph;
        for core in [regs[a].core, regs[b].core] {
            let gate = Gate::h(core);
            sv.apply(&gate)?;
            if positional {
                log.record_positional(gate, Stage::GhzEncode);
            } else {
                log.record(gate, Stage::GhzEncode);
            }
        }
        core_graph = next;
    }

    for reg in &regs {
        for &anc in &reg.ancillae {
            run(&mut sv, &mut log, Gate::cz(reg.core, anc), Stage::GhzEncode)?;
        }
    }
    for reg in &regs {
        run(&mut sv, &mut log, Gate::h(reg.core), Stage::GhzEncode)?;
    }
    let pre_pentagon = capture.then(|| sv.clone());
    for reg in &regs {
        pentagon(&mut sv, reg, &mut log)?;
    }
    Ok(Construction {
        state: sv,
        log,
        pre_pentagon,
    })
}

/// Two-block logical cluster state by encoding then logical CZ (35 CZ).
pub fn build_cs2_direct<T: Scalar>() -> Result<Construction<T>> {
    build_cluster_direct(2, &OracleConfig::default())
}

/// Two-block logical cluster state from a single core CZ (19 CZ, 2 H).
/// The state before the pentagons is captured.
pub fn build_cs2_elc<T: Scalar>() -> Result<Construction<T>> {
    elc_pipeline(2, &OracleConfig::default(), true)
}

/// `[|+>^5(|+>^5 + |->^5) + |->^5(|+>^5 - |->^5)] / 2`, block A on qubits
/// 0..5 and block B on 5..10: a repetition-encoded two-qubit cluster state.
pub fn encoded_cluster_pair<T: Scalar>() -> StateVector<T> {
    let block = |a: [Complex<T>; 2], b: [Complex<T>; 2]| {
        let mut factors = vec![a; BLOCK_SIZE];
        factors.extend(std::iter::repeat_n(b, BLOCK_SIZE));
        StateVector::product(&factors)
    };
    let half = Complex::new(T::lit(0.5), T::zero());
    StateVector::linear_combination(&[
        (half, &block(plus(), plus())),
        (half, &block(plus(), minus())),
        (half, &block(minus(), plus())),
        (-half, &block(minus(), minus())),
    ])
}

/// Checks that the direct and ELC two-block constructions agree, with
/// gate counts, the intermediate complete-bipartite state, and the
/// identities the ELC construction relies on.
pub fn verify_cs2_equivalence<T: Scalar>(config: &OracleConfig<T>) -> Result<Report> {
    let tol = config.tol.as_f64();
    let direct = build_cluster_direct::<T>(2, config)?;
    let elc = elc_pipeline::<T>(2, config, true)?;
    let mut report = Report::new("cs2");

    report.compare(
        "direct and ELC constructions agree",
        direct.state.max_abs_diff(&elc.state)?.as_f64(),
        tol,
    );
    report.expect(
        "direct CZ count",
        direct.log.cz_count() == 35,
        json!(direct.log.cz_count()),
    );
    report.expect(
        "logical CZ sub-count",
        direct.log.cz_count_in(Stage::LogicalCz) == 25,
        json!(direct.log.cz_count_in(Stage::LogicalCz)),
    );
    report.expect("ELC CZ count", elc.log.cz_count() == 19, json!(elc.log.cz_count()));
    report.expect(
        "ELC effective Hadamards",
        elc.log.hadamard_count() == 2,
        json!({"effective": elc.log.hadamard_count(), "positional": elc.log.positional_hadamard_count()}),
    );
    report.expect(
        "CZ savings",
        direct.log.cz_count() - elc.log.cz_count() == 16,
        json!(direct.log.cz_count() - elc.log.cz_count()),
    );

    let pre = elc.pre_pentagon.as_ref().expect("captured");
    report.compare(
        "pre-pentagon state equals the encoded cluster pair expansion",
        pre.max_abs_diff(&encoded_cluster_pair())?.as_f64(),
        tol,
    );
    let bipartite = Graph::complete_bipartite(BLOCK_SIZE, BLOCK_SIZE);
    report.compare(
        "pre-pentagon state is the K5,5 graph state",
        pre.max_abs_diff(&StateVector::graph_state(&bipartite, config)?)?
            .as_f64(),
        tol,
    );
    let joined_stars = Graph::star(4)
        .disjoint_union(&Graph::star(4))
        .toggle_edge(0, BLOCK_SIZE)?;
    report.expect(
        "ELC of joined stars is K5,5",
        joined_stars.edge_local_complement(0, BLOCK_SIZE)? == bipartite,
        serde_json::Value::Null,
    );

    let cs2 = StateVector::<T>::graph_state(&Graph::path(2), config)?;
    let rotated = cs2.clone().applied(&Gate::h(0))?.applied(&Gate::h(1))?;
    report.compare(
        "first Hadamard pair leaves CZ|++> invariant",
        rotated.max_abs_diff(&cs2)?.as_f64(),
        tol,
    );

    let mut encoded = StateVector::<T>::plus_state(BLOCK_SIZE);
    encode_logical(&mut encoded, &LogicalRegister::block(0), &mut CircuitLog::new())?;
    let mut pentagon_only = StateVector::<T>::plus_state(BLOCK_SIZE);
    pentagon(&mut pentagon_only, &LogicalRegister::block(0), &mut CircuitLog::new())?;
    report.compare(
        "encoding |+> needs only the pentagon",
        encoded.max_abs_diff(&pentagon_only)?.as_f64(),
        tol,
    );
    report.note(format!(
        "CZ counts: direct {}, ELC {}",
        direct.log.cz_count(),
        elc.log.cz_count()
    ));
    Ok(report)
}

/// The path `0 - 1 - .. - n-1` on the core qubits and the CZs building it.
pub fn build_chain_core(n_logical: usize) -> Result<(Graph, CircuitLog)> {
    check_chain_length(n_logical)?;
    let mut log = CircuitLog::new();
    for i in 1..n_logical {
        log.record(Gate::cz(i - 1, i), Stage::CoreEntangle);
    }
    Ok((Graph::path(n_logical), log))
}

/// Core graphs after each Hadamard pair, applied left to right on the
/// edges `{0,1}, {2,3}, ..` of the core chain and read as ELCs.
pub fn chain_elc_graphs(n_logical: usize) -> Result<Vec<Graph>> {
    let (mut g, _) = build_chain_core(n_logical)?;
    let mut steps = Vec::with_capacity(n_logical / 2);
    for k in 0..n_logical / 2 {
        g = g.edge_local_complement(2 * k, 2 * k + 1)?;
        steps.push(g.clone());
    }
    Ok(steps)
}

/// Checks on the core qubits alone that each Hadamard pair of
/// [`chain_elc_graphs`] produces exactly the graph state of the ELC graph.
pub fn verify_chain_elc_steps<T: Scalar>(n_logical: usize, config: &OracleConfig<T>) -> Result<Report> {
    let (core, _) = build_chain_core(n_logical)?;
    config.check_size(n_logical)?;
    let graphs = chain_elc_graphs(n_logical)?;
    let mut report = Report::new(format!("chain:{n_logical}"));
    let mut sv = StateVector::graph_state(&core, config)?;
    let mut current = core;
    for (k, g) in graphs.iter().enumerate() {
        let (a, b) = (2 * k, 2 * k + 1);
        let mut na = current.row(a).clone();
        na.set(b, false);
        let mut nb = current.row(b).clone();
        nb.set(a, false);
        report.expect(
            format!("step {}: neighborhoods of {a},{b} disjoint", k + 1),
            na.is_disjoint(&nb),
            json!(null),
        );
        sv.apply(&Gate::h(a))?;
        sv.apply(&Gate::h(b))?;
        let expected = StateVector::graph_state(g, config)?;
        report.compare(
            format!("step {}: H({a}) H({b}) equals ELC({a},{b})", k + 1),
            sv.max_abs_diff(&expected)?.as_f64(),
            config.tol.as_f64(),
        );
        report.with_detail(json!({ "edges": g.edges() }));
        current = g.clone();
    }
    Ok(report)
}

/// One line of the construction comparison report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructionSummary {
    pub construction: &'static str,
    pub n_logical: usize,
    pub cz_count: usize,
    pub hadamard_count: usize,
    pub equal_to_reference: bool,
    pub max_amp_diff: f64,
}

/// Both constructions of an `n`-block logical chain, compared.
#[derive(Debug, Clone)]
pub struct ClusterComparison<T: Scalar> {
    pub n_logical: usize,
    pub elc: Construction<T>,
    pub direct: Construction<T>,
    pub max_amp_diff: f64,
    pub report: Report,
}

impl<T: Scalar> ClusterComparison<T> {
    pub fn run(n_logical: usize, config: &OracleConfig<T>) -> Result<Self> {
        let elc = build_cluster_elc(n_logical, config)?;
        let direct = build_cluster_direct(n_logical, config)?;
        let tol = config.tol.as_f64();
        let max_amp_diff = elc.state.max_abs_diff(&direct.state)?.as_f64();

        let mut report = Report::new(format!("cluster:{n_logical}"));
        report.compare("ELC pipeline equals direct construction", max_amp_diff, tol);
        let expected_elc = 10 * n_logical - 1;
        let expected_direct = BLOCK_SIZE * n_logical + 25 * (n_logical - 1);
        report.expect(
            "ELC CZ count",
            elc.log.cz_count() == expected_elc,
            json!(elc.log.cz_count()),
        );
        report.expect(
            "direct CZ count",
            direct.log.cz_count() == expected_direct,
            json!(direct.log.cz_count()),
        );

        let mut replayed = StateVector::plus_state(BLOCK_SIZE * n_logical);
        elc.log.replay(&mut replayed)?;
        report.compare(
            "ELC log replays to the same state",
            replayed.max_abs_diff(&elc.state)?.as_f64(),
            tol,
        );
        report.compare(
            "norm preserved",
            (elc.state.norm_sqr().as_f64() - 1.0).abs(),
            crate::oracle::NORM_TOL,
        );
        Ok(Self {
            n_logical,
            elc,
            direct,
            max_amp_diff,
            report,
        })
    }

    /// Summaries for the ELC and direct constructions; each is compared
    /// against the other.
    pub fn summaries(&self) -> [ConstructionSummary; 2] {
        let equal = self.report.checks[0].passed;
        let summary = |construction, log: &CircuitLog| ConstructionSummary {
            construction,
            n_logical: self.n_logical,
            cz_count: log.cz_count(),
            hadamard_count: log.hadamard_count(),
            equal_to_reference: equal,
            max_amp_diff: self.max_amp_diff,
        };
        [summary("direct", &self.direct.log), summary("elc", &self.elc.log)]
    }
}

/// ELC-pipeline state and log for an `n`-block chain, with a report
/// comparing it against the direct construction.
pub fn build_logical_cluster<T: Scalar>(
    n_logical: usize,
    config: &OracleConfig<T>,
) -> Result<(StateVector<T>, CircuitLog, Report)> {
    let cmp = ClusterComparison::run(n_logical, config)?;
    Ok((cmp.elc.state, cmp.elc.log, cmp.report))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Sv = StateVector<f64>;

    fn cfg() -> OracleConfig<f64> {
        OracleConfig::default()
    }

    fn ghz(sign: f64) -> Sv {
        let r = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Sv::linear_combination(&[(r, &Sv::product(&[plus(); 5])), (r * sign, &Sv::product(&[minus(); 5]))])
    }

    fn input(core: [Complex<f64>; 2]) -> Sv {
        let mut f = vec![plus(); 5];
        f[0] = core;
        Sv::product(&f)
    }

    #[test]
    fn ghz_encoding_of_basis_states() {
        let zero = [Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)];
        let one = [Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)];
        let reg = LogicalRegister::block(0);

        let mut sv = input(zero);
        let mut log = CircuitLog::new();
        ghz_encode(&mut sv, &reg, &mut log).unwrap();
        assert!(sv.equal_exact(&ghz(1.0), 1e-12).unwrap());
        assert_eq!((log.cz_count(), log.hadamard_count()), (4, 2));

        let mut sv = input(one);
        ghz_encode(&mut sv, &reg, &mut CircuitLog::new()).unwrap();
        assert!(sv.equal_exact(&ghz(-1.0), 1e-12).unwrap());
    }

    #[test]
    fn pentagon_examples() {
        let reg = LogicalRegister::block(0);
        let mut sv = Sv::plus_state(5);
        let mut log = CircuitLog::new();
        pentagon(&mut sv, &reg, &mut log).unwrap();
        assert_eq!(log.cz_count(), 5);
        let c5 = Sv::graph_state(&Graph::cycle(5).unwrap(), &cfg()).unwrap();
        assert!(sv.equal_exact(&c5, 1e-12).unwrap());

        let mut minus_l = Sv::product(&[minus(); 5]);
        pentagon(&mut minus_l, &reg, &mut log).unwrap();
        let mut z_plus = c5.clone();
        for q in 0..5 {
            z_plus.apply(&Gate::z(q)).unwrap();
        }
        assert!(minus_l.equal_exact(&z_plus, 1e-12).unwrap());

        pentagon(&mut sv, &reg, &mut log).unwrap();
        assert!(sv.equal_exact(&Sv::plus_state(5), 1e-12).unwrap());
    }

    #[test]
    fn encode_logical_examples() {
        let (plus_l, minus_l) = logical_plus_minus::<f64>().unwrap();
        let c5 = Sv::graph_state(&Graph::cycle(5).unwrap(), &cfg()).unwrap();
        assert!(plus_l.equal_exact(&c5, 1e-12).unwrap());
        let mut z_plus = plus_l.clone();
        for q in 0..5 {
            z_plus.apply(&Gate::z(q)).unwrap();
        }
        assert!(minus_l.equal_exact(&z_plus, 1e-12).unwrap());
        assert!(plus_l.inner(&minus_l).unwrap().norm() < 1e-12);

        let mut log = CircuitLog::new();
        encode_logical(&mut Sv::plus_state(5), &LogicalRegister::block(0), &mut log).unwrap();
        assert_eq!((log.cz_count(), log.hadamard_count()), (9, 2));
    }

    #[test]
    fn register_validation() {
        assert!(matches!(
            LogicalRegister::new(0, [1, 2, 3, 0]),
            Err(EncodingError::DuplicateQubit(_))
        ));
        let reg = LogicalRegister::new(9, [1, 2, 3, 4]).unwrap();
        let mut sv = Sv::plus_state(5);
        assert!(matches!(
            ghz_encode(&mut sv, &reg, &mut CircuitLog::new()),
            Err(EncodingError::Oracle(OracleError::OutOfRange { qubit: 9, n: 5 }))
        ));
        let mut sv = Sv::plus_state(10);
        let a = LogicalRegister::block(0);
        let b = LogicalRegister::new(4, [5, 6, 7, 8]).unwrap();
        assert_eq!(
            logical_cz(&mut sv, &a, &b, &mut CircuitLog::new()),
            Err(EncodingError::Overlap(4))
        );
    }

    #[test]
    fn cs2_counts() {
        let direct = build_cs2_direct::<f64>().unwrap();
        assert_eq!(direct.log.cz_count(), 35);
        assert_eq!(direct.log.cz_count_in(Stage::LogicalCz), 25);
        assert_eq!(direct.state.amplitudes().len(), 1024);
        assert!((direct.state.norm_sqr() - 1.0).abs() < 1e-9);

        let elc = build_cs2_elc::<f64>().unwrap();
        assert_eq!(elc.log.cz_count(), 19);
        assert_eq!(elc.log.hadamard_count(), 2);
        assert_eq!(elc.log.positional_hadamard_count(), 2);
        assert!(elc.pre_pentagon.is_some());
    }

    #[test]
    fn cs2_equivalence_report() {
        let r = verify_cs2_equivalence::<f64>(&cfg()).unwrap();
        assert!(r.passed, "{r:#?}");
    }

    #[test]
    fn chain_core() {
        let (g, log) = build_chain_core(2).unwrap();
        assert_eq!((g.edges(), log.cz_count()), (vec![(0, 1)], 1));
        let (g, log) = build_chain_core(4).unwrap();
        assert_eq!((g, log.cz_count()), (Graph::path(4), 3));
        assert_eq!(build_chain_core(3).unwrap_err(), EncodingError::OddLength(3));
        assert_eq!(build_chain_core(0).unwrap_err(), EncodingError::TooShort(0));
    }

    #[test]
    fn chain_steps() {
        let steps = chain_elc_graphs(4).unwrap();
        assert_eq!(steps[0].edges(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(steps[1].edges(), vec![(0, 1), (0, 3), (2, 3)]);
        assert_eq!(chain_elc_graphs(2).unwrap(), vec![Graph::path(2)]);
        assert!(verify_chain_elc_steps::<f64>(4, &cfg()).unwrap().passed);
        assert!(verify_chain_elc_steps::<f64>(6, &cfg()).unwrap().passed);
    }

    #[test]
    fn small_cluster_comparison() {
        let cmp = ClusterComparison::<f64>::run(2, &cfg()).unwrap();
        assert!(cmp.report.passed, "{:#?}", cmp.report);
        let [direct, elc] = cmp.summaries();
        assert_eq!((direct.cz_count, elc.cz_count), (35, 19));
        assert_eq!(elc.hadamard_count, 2);
        assert!(matches!(
            ClusterComparison::<f64>::run(
                4,
                &OracleConfig {
                    max_qubits: 19,
                    tol: 1e-9
                }
            ),
            Err(EncodingError::Oracle(OracleError::TooLarge { qubits: 20, max: 19 }))
        ));
    }
}
