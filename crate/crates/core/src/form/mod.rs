//! Boolean phase polynomials over GF(2).
//!
//! A graph state has amplitudes `(-1)^p(x) / sqrt(2^n)` where `p` is a
//! quadratic form with one `x_i x_j` term per edge. Linear terms `x_i`
//! record residual `Z_i` gates. Global phases are not tracked here.

mod derivation;

pub use derivation::{CoreJoin, ElcReplay};

use crate::bits::{BitVec, VertexSet};
use crate::graph::Graph;
use std::fmt;
use std::ops::Add;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("input has length {got}, form has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable {var} out of range for a form in {n} variables")]
    OutOfRange { var: usize, n: usize },
}

/// `p(x) = Σ_{i<j} quad[i][j] x_i x_j + Σ_i lin[i] x_i  (mod 2)`.
///
/// `quad` is strictly upper triangular, so two forms are equal exactly
/// when their bits are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    n: usize,
    quad: Vec<BitVec>,
    lin: BitVec,
}

/// One term of a form: `x_i` or `x_i * x_j` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Monomial {
    Linear(usize),
    Quadratic(usize, usize),
}

impl QuadraticForm {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            quad: vec![BitVec::zeros(n); n],
            lin: BitVec::zeros(n),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut qf = Self::zero(g.n());
        for (a, b) in g.edges() {
            qf.quad[a].set(b, true);
        }
        qf
    }

    /// Splits the form into its graph and the residual linear (Z-gate) part.
    pub fn to_graph(&self) -> (Graph, BitVec) {
        let edges = (0..self.n).flat_map(|i| self.quad[i].ones().map(move |j| (i, j)));
        let g = Graph::from_edges(self.n, edges).expect("upper-triangular terms form a simple graph");
        (g, self.lin.clone())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn linear_part(&self) -> &BitVec {
        &self.lin
    }

    pub fn has_quadratic(&self, i: usize, j: usize) -> bool {
        let (i, j) = ordered(i, j);
        i != j && self.quad[i].get(j)
    }

    pub fn has_linear(&self, i: usize) -> bool {
        self.lin.get(i)
    }

    pub fn quadratic_term_count(&self) -> usize {
        self.quad.iter().map(BitVec::count_ones).sum()
    }

    /// Adds `x_i x_j`. A diagonal term `x_i x_i = x_i` lands in the linear part.
    pub fn toggle_quadratic(&mut self, i: usize, j: usize) {
        let (i, j) = ordered(i, j);
        if i == j {
            self.lin.flip(i);
        } else {
            self.quad[i].flip(j);
        }
    }

    pub fn toggle_linear(&mut self, i: usize) {
        self.lin.flip(i);
    }

    /// Adds `(Σ_{s∈left} x_s)(Σ_{t∈right} x_t)`.
    pub fn add_product(&mut self, left: &VertexSet, right: &VertexSet) {
        for s in left.ones() {
            for t in right.ones() {
                self.toggle_quadratic(s, t);
            }
        }
    }

    /// Adds `Σ_{s<t ∈ set} x_s x_t`, i.e. complements the induced subgraph.
    pub fn add_pairs(&mut self, set: &VertexSet) {
        let members: Vec<usize> = set.ones().collect();
        for (k, &s) in members.iter().enumerate() {
            for &t in &members[k + 1..] {
                self.toggle_quadratic(s, t);
            }
        }
    }

    /// Variables sharing a quadratic term with `a`.
    pub fn neighborhood(&self, a: usize) -> Result<VertexSet, FormError> {
        self.check_var(a)?;
        let mut nbhd = self.quad[a].clone();
        for i in 0..a {
            if self.quad[i].get(a) {
                nbhd.set(i, true);
            }
        }
        Ok(nbhd)
    }

    pub fn evaluate(&self, x: &BitVec) -> Result<bool, FormError> {
        if x.len() != self.n {
            return Err(FormError::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut value = self.lin.dot(x);
        for i in x.ones() {
            value ^= self.quad[i].dot(x);
        }
        Ok(value)
    }

    /// Evaluates at the basis index `x`, bit `i` being `x_i`. Needs `n <= 64`.
    pub fn evaluate_index(&self, x: u64) -> bool {
        self.masks().evaluate(x)
    }

    /// Word-packed copy of the form for repeated evaluation, `n <= 64`.
    pub fn masks(&self) -> FormMasks {
        assert!(self.n <= 64, "mask evaluation supports at most 64 variables");
        FormMasks {
            upper: self.quad.iter().map(BitVec::to_mask).collect(),
            lin: self.lin.to_mask(),
        }
    }

    /// The symbolic effect of `LC(a)`: complements the quadratic terms on
    /// `N(a)` and, when `include_linear` is set, adds the residual `x_b`
    /// (a `Z_b` gate) for every `b ∈ N(a)`.
    pub fn apply_lc_update(&self, a: usize, include_linear: bool) -> Result<Self, FormError> {
        let nbhd = self.neighborhood(a)?;
        let mut out = self.clone();
        out.add_pairs(&nbhd);
        if include_linear {
            out.lin.xor_assign(&nbhd);
        }
        Ok(out)
    }

    /// Closed-form phase polynomial after `ELC(c1, c2)` on two graphs joined
    /// by the single edge `{c1, c2}`.
    ///
    /// `g2` is placed after `g1` (offset `g1.n()`). The result keeps every
    /// edge of either graph not incident to its core, adds `c1 c2`, joins
    /// `c1` to the old `N(c2)`, `c2` to the old `N(c1)`, and all of `N(c1)`
    /// to all of `N(c2)`.
    pub fn elc_final_form(g1: &Graph, c1: usize, g2: &Graph, c2: usize) -> Result<Self, FormError> {
        Ok(CoreJoin::new(g1, c1, g2, c2)?.elc_final_form())
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        let mut terms: Vec<Monomial> = (0..self.n)
            .flat_map(|i| self.quad[i].ones().map(move |j| Monomial::Quadratic(i, j)))
            .chain(self.lin.ones().map(Monomial::Linear))
            .collect();
        terms.sort_by_key(|m| match *m {
            Monomial::Quadratic(i, j) => (i, j, 0),
            Monomial::Linear(i) => (i, i, 1),
        });
        terms
    }

    fn check_var(&self, v: usize) -> Result<(), FormError> {
        if v >= self.n {
            return Err(FormError::OutOfRange { var: v, n: self.n });
        }
        Ok(())
    }
}

#[inline]
fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Add for &QuadraticForm {
    type Output = QuadraticForm;

    /// Sum over GF(2). Panics if the variable counts differ.
    fn add(self, rhs: &QuadraticForm) -> QuadraticForm {
        assert_eq!(self.n, rhs.n, "adding forms in different variable counts");
        let mut out = self.clone();
        for (row, other) in out.quad.iter_mut().zip(&rhs.quad) {
            row.xor_assign(other);
        }
        out.lin.xor_assign(&rhs.lin);
        out
    }
}

/// Packed evaluator built by [`QuadraticForm::masks`].
#[derive(Debug, Clone)]
pub struct FormMasks {
    upper: Vec<u64>,
    lin: u64,
}

impl FormMasks {
    #[inline]
    pub fn evaluate(&self, x: u64) -> bool {
        let mut parity = (self.lin & x).count_ones();
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            parity ^= (self.upper[i] & x).count_ones();
        }
        parity & 1 == 1
    }
}

impl fmt::Display for QuadraticForm {
    /// Sorted monomials, e.g. `x0*x1 + x0*x2 + x3`; the zero form prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.monomials();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, term) in terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match *term {
                Monomial::Linear(i) => write!(f, "x{i}")?,
                Monomial::Quadratic(i, j) => write!(f, "x{i}*x{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm[{}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_gives_zero_form() {
        let qf = QuadraticForm::from_graph(&Graph::new_empty(4));
        assert_eq!(qf, QuadraticForm::zero(4));
        assert_eq!(qf.to_string(), "0");
    }

    #[test]
    fn star_form() {
        let qf = QuadraticForm::from_graph(&Graph::star(4));
        assert_eq!(qf.to_string(), "x0*x1 + x0*x2 + x0*x3 + x0*x4");
    }

    #[test]
    fn cycle_form() {
        let qf = QuadraticForm::from_graph(&Graph::cycle(5).unwrap());
        assert_eq!(qf.quadratic_term_count(), 5);
        assert_eq!(qf.to_string(), "x0*x1 + x0*x4 + x1*x2 + x2*x3 + x3*x4");
        assert!(qf.evaluate(&BitVec::from_mask(5, 0b11111)).unwrap());
    }

    #[test]
    fn to_graph_splits_linear_part() {
        let mut qf = QuadraticForm::zero(5);
        qf.toggle_linear(3);
        let (g, lin) = qf.to_graph();
        assert_eq!(g, Graph::new_empty(5));
        assert_eq!(lin, BitVec::from_indices(5, [3]));
        assert_eq!(qf.to_string(), "x3");

        let g = Graph::cycle(5).unwrap();
        let (back, lin) = QuadraticForm::from_graph(&g).to_graph();
        assert_eq!((back, lin.none()), (g, true));
    }

    #[test]
    fn evaluation() {
        let qf = QuadraticForm::from_graph(&Graph::path(2));
        assert!(!qf.evaluate(&BitVec::zeros(2)).unwrap());
        assert!(qf.evaluate(&BitVec::from_mask(2, 0b11)).unwrap());
        assert!(!qf.evaluate(&BitVec::from_mask(2, 0b01)).unwrap());
        assert_eq!(
            qf.evaluate(&BitVec::zeros(3)),
            Err(FormError::LengthMismatch { expected: 2, got: 3 })
        );
        assert!(qf.evaluate_index(0b11));
    }

    #[test]
    fn lc_update() {
        let star = QuadraticForm::from_graph(&Graph::star(4));
        let lc = star.apply_lc_update(0, false).unwrap();
        assert_eq!(lc, QuadraticForm::from_graph(&Graph::complete(5)));
        let with_z = star.apply_lc_update(0, true).unwrap();
        assert_eq!(with_z.linear_part(), &BitVec::from_indices(5, [1, 2, 3, 4]));

        let isolated = QuadraticForm::from_graph(&Graph::from_edges(3, [(0, 1)]).unwrap());
        assert_eq!(isolated.apply_lc_update(2, true).unwrap(), isolated);

        // path a1-c1-c2-a2 at c1 gains x_{a1} x_{c2}
        let path = QuadraticForm::from_graph(&Graph::path(4));
        let lc = path.apply_lc_update(1, false).unwrap();
        assert_eq!(&lc + &path, {
            let mut d = QuadraticForm::zero(4);
            d.toggle_quadratic(0, 2);
            d
        });
        assert_eq!(
            star.apply_lc_update(5, false),
            Err(FormError::OutOfRange { var: 5, n: 5 })
        );
    }

    #[test]
    fn diagonal_term_is_linear() {
        let mut qf = QuadraticForm::zero(3);
        qf.toggle_quadratic(1, 1);
        assert!(qf.has_linear(1));
        qf.toggle_quadratic(2, 0);
        assert!(qf.has_quadratic(0, 2));
        assert_eq!(qf.to_string(), "x0*x2 + x1");
    }

    #[test]
    fn elc_final_form_small_cases() {
        let one = Graph::new_empty(1);
        let qf = QuadraticForm::elc_final_form(&one, 0, &one, 0).unwrap();
        assert_eq!(qf.to_string(), "x0*x1");

        let qf = QuadraticForm::elc_final_form(&Graph::star(4), 0, &Graph::star(4), 0).unwrap();
        assert_eq!(qf.quadratic_term_count(), 25);
        assert_eq!(qf.to_graph().0, Graph::complete_bipartite(5, 5));

        assert_eq!(
            QuadraticForm::elc_final_form(&one, 1, &one, 0),
            Err(FormError::OutOfRange { var: 1, n: 1 })
        );
    }
}
