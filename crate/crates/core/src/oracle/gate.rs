use super::OracleError;
use crate::scalar::Scalar;
use num_complex::Complex;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GateKind {
    H,
    X,
    Z,
    CZ,
    /// `(-I + iX)/sqrt(2)`, which squares to `-iX`.
    SqrtMinusIX,
    /// `(iI + Z)/sqrt(2)`, which squares to `iZ`.
    SqrtIZ,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::CZ => 2,
            _ => 1,
        }
    }

    /// Row-major 2x2 matrix of a single-qubit kind; `None` for `CZ`.
    pub fn matrix<T: Scalar>(self) -> Option<[[Complex<T>; 2]; 2]> {
        let zero = Complex::new(T::zero(), T::zero());
        let one = Complex::new(T::one(), T::zero());
        let r = T::FRAC_1_SQRT_2();
        let m = match self {
            GateKind::H => [
                [Complex::new(r, T::zero()), Complex::new(r, T::zero())],
                [Complex::new(r, T::zero()), Complex::new(-r, T::zero())],
            ],
            GateKind::X => [[zero, one], [one, zero]],
            GateKind::Z => [[one, zero], [zero, -one]],
            GateKind::SqrtMinusIX => [
                [Complex::new(-r, T::zero()), Complex::new(T::zero(), r)],
                [Complex::new(T::zero(), r), Complex::new(-r, T::zero())],
            ],
            GateKind::SqrtIZ => [[Complex::new(r, r), zero], [zero, Complex::new(-r, r)]],
            GateKind::CZ => return None,
        };
        Some(m)
    }
}

/// A gate kind applied to specific qubits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Result<Self, OracleError> {
        let gate = Gate { kind, targets };
        gate.check_shape()?;
        Ok(gate)
    }

    pub fn h(q: usize) -> Self {
        Gate {
            kind: GateKind::H,
            targets: vec![q],
        }
    }

    pub fn x(q: usize) -> Self {
        Gate {
            kind: GateKind::X,
            targets: vec![q],
        }
    }

    pub fn z(q: usize) -> Self {
        Gate {
            kind: GateKind::Z,
            targets: vec![q],
        }
    }

    pub fn sqrt_minus_ix(q: usize) -> Self {
        Gate {
            kind: GateKind::SqrtMinusIX,
            targets: vec![q],
        }
    }

    pub fn sqrt_iz(q: usize) -> Self {
        Gate {
            kind: GateKind::SqrtIZ,
            targets: vec![q],
        }
    }

    /// Panics if `a == b`; use [`Gate::new`] for unchecked input.
    pub fn cz(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "CZ needs two distinct qubits");
        Gate {
            kind: GateKind::CZ,
            targets: vec![a, b],
        }
    }

    pub(crate) fn check_shape(&self) -> Result<(), OracleError> {
        if self.targets.len() != self.kind.arity() {
            return Err(OracleError::BadArity {
                kind: self.kind,
                got: self.targets.len(),
            });
        }
        if self.kind == GateKind::CZ && self.targets[0] == self.targets[1] {
            return Err(OracleError::BadArity {
                kind: self.kind,
                got: 1,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(", self.kind)?;
        for (k, t) in self.targets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// In-place application. Targets must already be validated.
pub(super) fn apply_in_place<T: Scalar>(amps: &mut [Complex<T>], gate: &Gate) {
    match gate.kind {
        GateKind::X => {
            let bit = 1usize << gate.targets[0];
            for i in 0..amps.len() {
                if i & bit == 0 {
                    amps.swap(i, i | bit);
                }
            }
        }
        GateKind::Z => {
            let bit = 1usize << gate.targets[0];
            for (i, a) in amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a = -*a;
                }
            }
        }
        GateKind::CZ => {
            let mask = (1usize << gate.targets[0]) | (1usize << gate.targets[1]);
            for (i, a) in amps.iter_mut().enumerate() {
                if i & mask == mask {
                    *a = -*a;
                }
            }
        }
        kind => {
            let m = kind.matrix::<T>().expect("single-qubit kind");
            apply_single(amps, gate.targets[0], &m);
        }
    }
}

fn apply_single<T: Scalar>(amps: &mut [Complex<T>], q: usize, m: &[[Complex<T>; 2]; 2]) {
    let stride = 1usize << q;
    for block in (0..amps.len()).step_by(2 * stride) {
        for i in block..block + stride {
            let a0 = amps[i];
            let a1 = amps[i + stride];
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}
