//! Graph states, local complementation (LC) and edge local
//! complementation (ELC) over GF(2), with an exact dense state-vector
//! oracle that checks every graph-level identity against the quantum
//! circuit it stands for.
//!
//! * [`graph`]: adjacency bit-matrices and the LC/ELC transformations.
//! * [`form`]: the GF(2) phase polynomial of a graph state.
//! * [`oracle`]: dense amplitudes, generic over the real scalar type.
//! * [`logical`]: five-qubit-code encodings and logical cluster states.
//! * [`suites`]: seeded randomized and exhaustive verification runs.

pub mod bits;
pub mod form;
pub mod graph;
pub mod logical;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod suites;

pub use bits::{BitVec, VertexSet};
pub use form::QuadraticForm;
pub use graph::{Graph, GraphError};
pub use oracle::{Gate, GateKind, OracleConfig, OracleError, StateVector};
pub use report::Report;
pub use scalar::Scalar;

/// Double-precision state vector, the default oracle backend.
pub type StateVectorF64 = StateVector<f64>;
/// Single-precision state vector; too coarse for the default `1e-9` tolerance.
pub type StateVectorF32 = StateVector<f32>;
pub type OracleConfigF64 = OracleConfig<f64>;
