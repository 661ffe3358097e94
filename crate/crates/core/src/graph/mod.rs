//! Simple undirected graphs and the combinatorial local complementation
//! operations.
//!
//! A [`Graph`] is an immutable value: every transformation returns a new
//! graph. Vertices are dense indices `0..n`.

mod io;

pub use io::{GraphFile, GraphParseError};

use crate::bits::{BitVec, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex sets do not partition the vertex set")]
    NotAPartition,
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// A simple undirected graph stored as a symmetric GF(2) adjacency matrix.
///
/// Invariants: the diagonal is zero and `adj[i][j] == adj[j][i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<BitVec>,
}

impl Graph {
    pub fn new_empty(n: usize) -> Self {
        Self {
            n,
            rows: vec![BitVec::zeros(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new_empty(n);
        for (a, b) in edges {
            g.check_pair(a, b)?;
            if g.has_edge(a, b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            g.flip(a, b);
        }
        Ok(g)
    }

    /// Bit `k` of `code` selects the `k`-th pair of [`pairs`]`(n)`, so
    /// `0..2^(n(n-1)/2)` enumerates every labelled graph on `n` vertices.
    pub fn from_pair_code(n: usize, code: u64) -> Self {
        let mut g = Self::new_empty(n);
        for (k, (i, j)) in pairs(n).enumerate() {
            if (code >> k) & 1 == 1 {
                g.flip(i, j);
            }
        }
        g
    }

    /// Hub `0` adjacent to leaves `1..=n_leaves`.
    pub fn star(n_leaves: usize) -> Self {
        let mut g = Self::new_empty(n_leaves + 1);
        for leaf in 1..=n_leaves {
            g.flip(0, leaf);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(GraphError::TooSmall {
                what: "cycle",
                min: 3,
                got: n,
            });
        }
        let mut g = Self::new_empty(n);
        for i in 0..n {
            g.flip(i, (i + 1) % n);
        }
        Ok(g)
    }

    /// Path `0 - 1 - .. - n-1`. `path(0)` and `path(1)` have no edges.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new_empty(n);
        for i in 1..n {
            g.flip(i - 1, i);
        }
        g
    }

    /// Complete bipartite graph `K_{m,n}` on parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = Self::new_empty(m + n);
        for a in 0..m {
            for b in m..m + n {
                g.flip(a, b);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new_empty(n);
        for (i, j) in pairs(n) {
            g.flip(i, j);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].get(b)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitVec::count_ones).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    /// Adjacency row of `v`, i.e. `N(v)` as a vertex set.
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn toggle_edge(&self, a: usize, b: usize) -> Result<Self> {
        self.check_pair(a, b)?;
        let mut g = self.clone();
        g.flip(a, b);
        Ok(g)
    }

    /// Complements the subgraph induced on `N(a)`.
    pub fn local_complement(&self, a: usize) -> Result<Self> {
        self.check_vertex(a)?;
        let mut g = self.clone();
        g.local_complement_in_place(a);
        Ok(g)
    }

    /// Edge local complementation on `{a, b}`, computed by the direct rule.
    ///
    /// With `A = N(a)\N[b]`, `B = N(b)\N[a]` and `C = N(a)∩N(b)`, every
    /// pair in `A×B`, `A×C` and `B×C` is toggled, and then the
    /// neighborhoods of `a` and `b` (excluding each other) are exchanged.
    /// Agrees with [`Graph::edge_local_complement_by_lc`].
    pub fn edge_local_complement(&self, a: usize, b: usize) -> Result<Self> {
        self.check_edge(a, b)?;
        let mut only_a = self.rows[a].and_not(&self.rows[b]);
        only_a.set(b, false);
        let mut only_b = self.rows[b].and_not(&self.rows[a]);
        only_b.set(a, false);
        let shared = self.rows[a].and(&self.rows[b]);

        let mut g = self.clone();
        for (left, right) in [(&only_a, &only_b), (&only_a, &shared), (&only_b, &shared)] {
            for u in left.ones() {
                // u is in exactly one of the sets, so rows[u] ^= right never touches u itself
                g.rows[u].xor_assign(right);
                for v in right.ones() {
                    g.rows[v].flip(u);
                }
            }
        }

        let mut new_a = self.rows[b].clone();
        new_a.set(a, false);
        new_a.set(b, true);
        let mut new_b = self.rows[a].clone();
        new_b.set(b, false);
        new_b.set(a, true);
        for v in 0..self.n {
            if v == a || v == b {
                continue;
            }
            g.rows[v].set(a, new_a.get(v));
            g.rows[v].set(b, new_b.get(v));
        }
        g.rows[a] = new_a;
        g.rows[b] = new_b;
        Ok(g)
    }

    /// Reference path: `LC(a) LC(b) LC(a)`.
    pub fn edge_local_complement_by_lc(&self, a: usize, b: usize) -> Result<Self> {
        Ok(self
            .edge_local_complement_trace(a, b)?
            .pop()
            .expect("trace has three steps"))
    }

    /// The three graphs after `LC(a)`, `LC(a)LC(b)` and `LC(a)LC(b)LC(a)`.
    pub fn edge_local_complement_trace(&self, a: usize, b: usize) -> Result<Vec<Self>> {
        self.check_edge(a, b)?;
        let mut steps = Vec::with_capacity(3);
        let mut g = self.clone();
        for v in [a, b, a] {
            g.local_complement_in_place(v);
            steps.push(g.clone());
        }
        Ok(steps)
    }

    /// Places `other` after `self`, shifting its vertices by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        let rows = self
            .rows
            .iter()
            .map(|r| r.resized(n))
            .chain(other.rows.iter().map(|r| r.shifted_into(n, self.n)))
            .collect();
        Self { n, rows }
    }

    /// True iff every edge crosses between `part_a` and `part_b` and every
    /// crossing pair is an edge.
    pub fn is_complete_bipartite(&self, part_a: &VertexSet, part_b: &VertexSet) -> Result<bool> {
        if part_a.len() != self.n || part_b.len() != self.n || !part_a.is_disjoint(part_b) {
            return Err(GraphError::NotAPartition);
        }
        if part_a.count_ones() + part_b.count_ones() != self.n {
            return Err(GraphError::NotAPartition);
        }
        for u in part_a.ones() {
            if self.rows[u] != *part_b {
                return Ok(false);
            }
        }
        for v in part_b.ones() {
            if self.rows[v] != *part_a {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn local_complement_in_place(&mut self, a: usize) {
        let nbhd = self.rows[a].clone();
        for u in nbhd.ones() {
            self.rows[u].xor_assign(&nbhd);
            // undo the self-toggle; u ∈ N(a) but u is not its own neighbor
            self.rows[u].flip(u);
        }
    }

    #[inline]
    fn flip(&mut self, a: usize, b: usize) {
        self.rows[a].flip(b);
        self.rows[b].flip(a);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(())
    }

    fn check_edge(&self, a: usize, b: usize) -> Result<()> {
        self.check_pair(a, b)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::NotAnEdge(a, b));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// All pairs `(i, j)` with `i < j < n`, lexicographic.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}
