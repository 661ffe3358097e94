use crate::oracle::{Gate, GateKind, StateVector};
use crate::scalar::Scalar;
use serde::Serialize;

/// Which part of a construction a gate belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    /// CZs between core qubits of different registers.
    CoreEntangle,
    /// The `H [Π CZ] H` repetition-encoding part of a block encoding.
    GhzEncode,
    /// The five-CZ cycle on one register.
    Pentagon,
    /// The all-pairs inter-block CZ realizing a logical CZ.
    LogicalCz,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LoggedGate {
    pub gate: Gate,
    pub stage: Stage,
    /// Applied but known to leave the state unchanged at this position.
    pub positional: bool,
}

/// Ordered record of every gate a construction applied.
///
/// Counts only grow. Hadamards flagged positional are excluded from
/// `hadamard_count` and tallied separately.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CircuitLog {
    gates: Vec<LoggedGate>,
    cz_count: usize,
    hadamard_count: usize,
    positional_hadamard_count: usize,
}

impl CircuitLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, gate: Gate, stage: Stage) {
        self.push(gate, stage, false);
    }

    pub fn record_positional(&mut self, gate: Gate, stage: Stage) {
        self.push(gate, stage, true);
    }

    fn push(&mut self, gate: Gate, stage: Stage, positional: bool) {
        match (gate.kind, positional) {
            (GateKind::CZ, _) => self.cz_count += 1,
            (GateKind::H, false) => self.hadamard_count += 1,
            (GateKind::H, true) => self.positional_hadamard_count += 1,
            _ => {}
        }
        self.gates.push(LoggedGate {
            gate,
            stage,
            positional,
        });
    }

    pub fn gates(&self) -> &[LoggedGate] {
        &self.gates
    }

    pub fn cz_count(&self) -> usize {
        self.cz_count
    }

    /// Effective Hadamards only.
    pub fn hadamard_count(&self) -> usize {
        self.hadamard_count
    }

    pub fn positional_hadamard_count(&self) -> usize {
        self.positional_hadamard_count
    }

    pub fn cz_count_in(&self, stage: Stage) -> usize {
        self.gates
            .iter()
            .filter(|g| g.stage == stage && g.gate.kind == GateKind::CZ)
            .count()
    }

    /// Replays every logged gate, positional ones included, onto `state`.
    pub fn replay<T: Scalar>(&self, state: &mut StateVector<T>) -> crate::oracle::Result<()> {
        state.apply_all(self.gates.iter().map(|g| &g.gate))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let mut log = CircuitLog::new();
        log.record(Gate::cz(0, 1), Stage::CoreEntangle);
        log.record_positional(Gate::h(0), Stage::GhzEncode);
        log.record(Gate::h(0), Stage::GhzEncode);
        log.record(Gate::cz(0, 2), Stage::GhzEncode);
        log.record(Gate::z(3), Stage::GhzEncode);
        assert_eq!(log.cz_count(), 2);
        assert_eq!(log.hadamard_count(), 1);
        assert_eq!(log.positional_hadamard_count(), 1);
        assert_eq!(log.cz_count_in(Stage::GhzEncode), 1);
        assert_eq!(log.gates().len(), 5);
    }
}
