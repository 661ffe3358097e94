//! Phase polynomials for two graphs joined by a single core edge.
//!
//! `G1` occupies variables `0..n1` and `G2` occupies `n1..n1+n2`. With
//! `B1 = N(c1)` and `B2 = N(c2)` taken before the join:
//!
//! * `q1`, `q2` are the forms of `G1`, `G2`;
//! * `q3 = (x_c1 + x_c2)(ΣB1 + ΣB2) + ΣB1·ΣB2` is what `H_c1 H_c2` adds
//!   to `q1 + q2 + x_c1 x_c2`;
//! * `r1`, `r2`, `r3` are the edges added, relative to the joined graph,
//!   after each of the three local complementations `LC(c1)`, `LC(c2)`,
//!   `LC(c1)`. They are cumulative: the final form is
//!   `q1 + q2 + x_c1 x_c2 + r3`, which equals the Hadamard form.

use super::{FormError, QuadraticForm};
use crate::bits::VertexSet;
use crate::graph::Graph;

/// Two graphs and their chosen core vertices, laid out side by side.
#[derive(Debug, Clone)]
pub struct CoreJoin {
    n: usize,
    c1: usize,
    c2: usize,
    b1: VertexSet,
    b2: VertexSet,
    q1: QuadraticForm,
    q2: QuadraticForm,
}

/// Forms produced by replaying `LC(c1) LC(c2) LC(c1)` on the joined form.
#[derive(Debug, Clone)]
pub struct ElcReplay {
    /// Form after each local complementation.
    pub steps: Vec<QuadraticForm>,
    /// `steps[k]` minus the joined form: the total additional edges.
    pub additional: Vec<QuadraticForm>,
}

impl CoreJoin {
    pub fn new(g1: &Graph, c1: usize, g2: &Graph, c2: usize) -> Result<Self, FormError> {
        if c1 >= g1.n() {
            return Err(FormError::OutOfRange { var: c1, n: g1.n() });
        }
        if c2 >= g2.n() {
            return Err(FormError::OutOfRange { var: c2, n: g2.n() });
        }
        let (n1, n) = (g1.n(), g1.n() + g2.n());
        let empty1 = Graph::new_empty(n1);
        let empty2 = Graph::new_empty(g2.n());
        Ok(Self {
            n,
            c1,
            c2: n1 + c2,
            b1: g1.row(c1).resized(n),
            b2: g2.row(c2).shifted_into(n, n1),
            q1: QuadraticForm::from_graph(&g1.disjoint_union(&empty2)),
            q2: QuadraticForm::from_graph(&empty1.disjoint_union(g2)),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Core indices in the joined layout.
    pub fn cores(&self) -> (usize, usize) {
        (self.c1, self.c2)
    }

    pub fn neighborhoods(&self) -> (&VertexSet, &VertexSet) {
        (&self.b1, &self.b2)
    }

    /// `G_u`: the disjoint union with the core edge added.
    pub fn joined_graph(&self) -> Graph {
        self.joined_form().to_graph().0
    }

    pub fn q1(&self) -> &QuadraticForm {
        &self.q1
    }

    pub fn q2(&self) -> &QuadraticForm {
        &self.q2
    }

    pub fn core_edge(&self) -> QuadraticForm {
        let mut qf = QuadraticForm::zero(self.n);
        qf.toggle_quadratic(self.c1, self.c2);
        qf
    }

    /// `x_c1 x_c2 + q1 + q2`.
    pub fn joined_form(&self) -> QuadraticForm {
        &(&self.core_edge() + &self.q1) + &self.q2
    }

    pub fn q3(&self) -> QuadraticForm {
        let cores = VertexSet::from_indices(self.n, [self.c1, self.c2]);
        let mut both = self.b1.clone();
        both.xor_assign(&self.b2);
        let mut qf = QuadraticForm::zero(self.n);
        qf.add_product(&cores, &both);
        qf.add_product(&self.b1, &self.b2);
        qf
    }

    /// `Σ_{i<j} x_{b1_i} x_{b1_j} + x_c2 ΣB1`.
    pub fn r1(&self) -> QuadraticForm {
        let mut qf = QuadraticForm::zero(self.n);
        qf.add_pairs(&self.b1);
        qf.add_product(&self.single(self.c2), &self.b1);
        qf
    }

    /// `x_c2 ΣB1 + x_c1 (ΣB1 + ΣB2) + Σ_{i<j} x_{b2_i} x_{b2_j} + ΣB1·ΣB2`.
    pub fn r2(&self) -> QuadraticForm {
        let mut qf = QuadraticForm::zero(self.n);
        qf.add_product(&self.single(self.c2), &self.b1);
        qf.add_product(&self.single(self.c1), &self.b1);
        qf.add_product(&self.single(self.c1), &self.b2);
        qf.add_pairs(&self.b2);
        qf.add_product(&self.b1, &self.b2);
        qf
    }

    /// `(x_c1 + x_c2)(ΣB1 + ΣB2) + ΣB1·ΣB2`.
    pub fn r3(&self) -> QuadraticForm {
        let mut qf = QuadraticForm::zero(self.n);
        for core in [self.c1, self.c2] {
            qf.add_product(&self.single(core), &self.b1);
            qf.add_product(&self.single(core), &self.b2);
        }
        qf.add_product(&self.b1, &self.b2);
        qf
    }

    /// Form of `H_c1 H_c2 CZ_c1c2 |G1>|G2>`.
    pub fn hadamard_form(&self) -> QuadraticForm {
        &self.joined_form() + &self.q3()
    }

    /// Form of `ELC(c1, c2)` on the joined graph, written out term by term.
    pub fn elc_final_form(&self) -> QuadraticForm {
        let mut qf = self.core_edge();
        qf.add_product(&self.single(self.c1), &self.b2);
        qf.add_product(&self.single(self.c2), &self.b1);
        qf.add_product(&self.b1, &self.b2);
        // edges of each graph that avoid its core are untouched
        let mut outer = &self.q1 + &self.q2;
        outer.add_product(&self.single(self.c1), &self.b1);
        outer.add_product(&self.single(self.c2), &self.b2);
        &qf + &outer
    }

    /// Replays `LC(c1) LC(c2) LC(c1)` with [`QuadraticForm::apply_lc_update`].
    pub fn replay(&self) -> ElcReplay {
        let base = self.joined_form();
        let mut current = base.clone();
        let mut steps = Vec::with_capacity(3);
        for v in [self.c1, self.c2, self.c1] {
            current = current.apply_lc_update(v, false).expect("core index is in range");
            steps.push(current.clone());
        }
        let additional = steps.iter().map(|s| s + &base).collect();
        ElcReplay { steps, additional }
    }

    fn single(&self, v: usize) -> VertexSet {
        VertexSet::from_indices(self.n, [v])
    }
}
