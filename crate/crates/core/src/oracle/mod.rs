//! Exact dense state-vector simulation, used as ground truth for every
//! graph-level claim.
//!
//! Basis index bit `i` is qubit (vertex) `i`: qubit 0 is the least
//! significant bit. Every cross-module index map goes through this one
//! convention.

mod csv;
mod gate;
mod verify;

pub use gate::{Gate, GateKind};
pub use verify::{
    ghz_amplitude_check, probe_shared_neighborhood, verify_stabilizers, verify_theorem1, verify_vertex_lc,
};

use crate::form::{FormError, QuadraticForm};
use crate::graph::{Graph, GraphError};
use crate::scalar::Scalar;
use num_complex::Complex;
use thiserror::Error;

/// Largest register the oracle builds unless configured otherwise
/// (2^20 amplitudes, 16 MiB at double precision).
pub const DEFAULT_MAX_QUBITS: usize = 20;
/// Default tolerance for state equality after long gate sequences.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Tolerance for single-gate algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Allowed drift of `Σ|amp|²` from 1.
pub const NORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{qubits} qubits exceeds the configured maximum of {max}")]
    TooLarge { qubits: usize, max: usize },
    #[error("qubit {qubit} out of range for a {n}-qubit state")]
    OutOfRange { qubit: usize, n: usize },
    #[error("{kind:?} expects {} distinct target(s), got {got}", kind.arity())]
    BadArity { kind: GateKind, got: usize },
    #[error("state sizes differ: {left} vs {right} qubits")]
    SizeMismatch { left: usize, right: usize },
    #[error("amplitude count {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Form(#[from] FormError),
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;

/// Size cap and equality tolerance for oracle runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig<T> {
    pub max_qubits: usize,
    pub tol: T,
}

impl<T: Scalar> Default for OracleConfig<T> {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
            tol: T::lit(DEFAULT_TOL),
        }
    }
}

impl<T: Scalar> OracleConfig<T> {
    pub fn check_size(&self, qubits: usize) -> Result<()> {
        if qubits > self.max_qubits {
            return Err(OracleError::TooLarge {
                qubits,
                max: self.max_qubits,
            });
        }
        Ok(())
    }
}

/// Dense vector of `2^n` complex amplitudes.
#[derive(Clone, PartialEq)]
pub struct StateVector<T> {
    n_qubits: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1 << n_qubits];
        amps[index] = Complex::new(T::one(), T::zero());
        Self { n_qubits, amps }
    }

    pub fn zero_state(n_qubits: usize) -> Self {
        Self::basis(n_qubits, 0)
    }

    /// `|+>^n`.
    pub fn plus_state(n_qubits: usize) -> Self {
        let a = T::one() / T::lit((1u64 << n_qubits) as f64).sqrt();
        Self {
            n_qubits,
            amps: vec![Complex::new(a, T::zero()); 1 << n_qubits],
        }
    }

    /// Product state with `factors[i] = (<0|q_i>, <1|q_i>)` on qubit `i`.
    pub fn product(factors: &[[Complex<T>; 2]]) -> Self {
        let n_qubits = factors.len();
        let amps = (0..1usize << n_qubits)
            .map(|x| {
                factors
                    .iter()
                    .enumerate()
                    .fold(Complex::new(T::one(), T::zero()), |acc, (q, f)| acc * f[(x >> q) & 1])
            })
            .collect();
        Self { n_qubits, amps }
    }

    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Result<Self> {
        if !amps.len().is_power_of_two() {
            return Err(OracleError::NotPowerOfTwo(amps.len()));
        }
        Ok(Self {
            n_qubits: amps.len().trailing_zeros() as usize,
            amps,
        })
    }

    /// `Σ_x (-1)^p(x) |x> / sqrt(2^n)` for the graph's phase polynomial `p`.
    pub fn graph_state(g: &Graph, config: &OracleConfig<T>) -> Result<Self> {
        config.check_size(g.n())?;
        Ok(Self::phase_state(&QuadraticForm::from_graph(g)))
    }

    /// Uniform-magnitude state with signs `(-1)^form(x)`.
    pub fn phase_state(form: &QuadraticForm) -> Self {
        let n_qubits = form.n();
        let masks = form.masks();
        let a = T::one() / T::lit((1u64 << n_qubits) as f64).sqrt();
        let amps = (0..1u64 << n_qubits)
            .map(|x| Complex::new(if masks.evaluate(x) { -a } else { a }, T::zero()))
            .collect();
        Self { n_qubits, amps }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.check_shape()?;
        if let Some(&qubit) = gate.targets.iter().find(|&&t| t >= self.n_qubits) {
            return Err(OracleError::OutOfRange {
                qubit,
                n: self.n_qubits,
            });
        }
        gate::apply_in_place(&mut self.amps, gate);
        Ok(())
    }

    pub fn applied(mut self, gate: &Gate) -> Result<Self> {
        self.apply(gate)?;
        Ok(self)
    }

    pub fn apply_all<'a>(&mut self, gates: impl IntoIterator<Item = &'a Gate>) -> Result<()> {
        for g in gates {
            self.apply(g)?;
        }
        Ok(())
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            n_qubits: self.n_qubits,
            amps: self.amps.iter().map(|&a| a * factor).collect(),
        }
    }

    /// `Σ_k coeff_k |state_k>`. Panics on an empty or mismatched list.
    pub fn linear_combination(terms: &[(Complex<T>, &StateVector<T>)]) -> Self {
        let (_, first) = terms.first().expect("at least one term");
        let mut amps = vec![Complex::new(T::zero(), T::zero()); first.amps.len()];
        for (c, sv) in terms {
            assert_eq!(sv.n_qubits, first.n_qubits, "mixed state sizes");
            for (out, &a) in amps.iter_mut().zip(&sv.amps) {
                *out = *out + *c * a;
            }
        }
        Self {
            n_qubits: first.n_qubits,
            amps,
        }
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        self.check_same_size(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b))
    }

    /// Largest component-wise `|a_i - b_i|`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same_size(other)?;
        Ok(max_diff(&self.amps, &other.amps, Complex::new(T::one(), T::zero())))
    }

    /// Component-wise equality within `tol`; global phase matters.
    pub fn equal_exact(&self, other: &Self, tol: T) -> Result<bool> {
        Ok(self.max_abs_diff(other)? <= tol)
    }

    /// Equality up to a unit phase `λ` with `self ≈ λ·other`.
    ///
    /// `λ` is read off the largest-magnitude component of `other`; if the
    /// states are near-orthogonal that estimate is poor, but then the
    /// residual is large and the answer is `false` regardless.
    pub fn equal_up_to_global_phase(&self, other: &Self, tol: T) -> Result<(bool, Complex<T>)> {
        let (_, phase) = self.global_phase_diff(other)?;
        let residual = max_diff(&self.amps, &other.amps, phase);
        Ok((residual <= tol, phase))
    }

    /// `(max_i |a_i - λ b_i|, λ)` for the phase estimate `λ`.
    pub fn global_phase_diff(&self, other: &Self) -> Result<(T, Complex<T>)> {
        self.check_same_size(other)?;
        let one = Complex::new(T::one(), T::zero());
        let (k, _) =
            other.amps.iter().enumerate().fold(
                (0, T::zero()),
                |(bk, bm), (k, b)| if b.norm() > bm { (k, b.norm()) } else { (bk, bm) },
            );
        let ratio = self.amps[k] / other.amps[k];
        let phase = if ratio.norm() > T::zero() && ratio.norm().is_finite() {
            ratio / ratio.norm()
        } else {
            one
        };
        Ok((max_diff(&self.amps, &other.amps, phase), phase))
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(OracleError::SizeMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(())
    }
}

fn max_diff<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>], phase: Complex<T>) -> T {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - phase * y).norm())
        .fold(T::zero(), T::max)
}

impl<T: Scalar> std::fmt::Debug for StateVector<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let shown: Vec<_> = self.amps.iter().take(16).collect();
        f.debug_struct("StateVector")
            .field("n_qubits", &self.n_qubits)
            .field("amps", &shown)
            .finish_non_exhaustive()
    }
}

/// `(<0|+>, <1|+>)`.
pub fn plus<T: Scalar>() -> [Complex<T>; 2] {
    let r = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
    [r, r]
}

/// `(<0|->, <1|->)`.
pub fn minus<T: Scalar>() -> [Complex<T>; 2] {
    let r = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
    [r, -r]
}
