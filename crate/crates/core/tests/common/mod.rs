//! A deliberately naive reference simulator, sharing no code with the
//! library oracle: states are plain amplitude vectors, gates are applied
//! by explicit basis-state bookkeeping, and graph states come from the
//! edge-parity formula.
#![allow(dead_code)]

use gselc::Graph;
use num_complex::Complex64 as C;

pub fn c(re: f64) -> C {
    C::new(re, 0.0)
}

/// `(-1)^{#edges inside supp(x)} / sqrt(2^n)` for every basis state `x`.
pub fn graph_state(n: usize, edges: &[(usize, usize)]) -> Vec<C> {
    let scale = (0.5f64).powf(n as f64 / 2.0);
    (0..1usize << n)
        .map(|x| {
            let inside = edges
                .iter()
                .filter(|&&(a, b)| (x >> a) & 1 == 1 && (x >> b) & 1 == 1)
                .count();
            c(if inside % 2 == 0 { scale } else { -scale })
        })
        .collect()
}

pub fn plus_state(n: usize) -> Vec<C> {
    vec![c((0.5f64).powf(n as f64 / 2.0)); 1 << n]
}

pub const H: [[C; 2]; 2] = {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [[C::new(r, 0.0), C::new(r, 0.0)], [C::new(r, 0.0), C::new(-r, 0.0)]]
};
pub const X: [[C; 2]; 2] = [
    [C::new(0.0, 0.0), C::new(1.0, 0.0)],
    [C::new(1.0, 0.0), C::new(0.0, 0.0)],
];
pub const Z: [[C; 2]; 2] = [
    [C::new(1.0, 0.0), C::new(0.0, 0.0)],
    [C::new(0.0, 0.0), C::new(-1.0, 0.0)],
];

/// `out[x] = Σ_b m[x_q][b] in[x with bit q set to b]`.
pub fn apply_1q(state: &[C], q: usize, m: [[C; 2]; 2]) -> Vec<C> {
    (0..state.len())
        .map(|x| {
            let row = (x >> q) & 1;
            let x0 = x & !(1 << q);
            let x1 = x | (1 << q);
            m[row][0] * state[x0] + m[row][1] * state[x1]
        })
        .collect()
}

pub fn apply_cz(state: &[C], a: usize, b: usize) -> Vec<C> {
    state
        .iter()
        .enumerate()
        .map(|(x, &amp)| {
            if (x >> a) & 1 == 1 && (x >> b) & 1 == 1 {
                -amp
            } else {
                amp
            }
        })
        .collect()
}

pub fn max_diff(a: &[C], b: &[C]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `|+>^k` (sign +1) or `|->^k` (sign -1) amplitude on `k` bits of `x`.
pub fn uniform_block(x: usize, k: usize, sign: i32) -> f64 {
    let parity = if (x & ((1 << k) - 1)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let s = if sign > 0 { 1.0 } else { parity };
    s * (0.5f64).powf(k as f64 / 2.0)
}

/// Edges of an independently described graph: union of the given edge
/// lists with duplicates cancelling, sorted with `a < b`.
pub fn xor_edges(lists: &[Vec<(usize, usize)>]) -> Vec<(usize, usize)> {
    let mut set = std::collections::BTreeSet::new();
    for list in lists {
        for &(a, b) in list {
            let e = (a.min(b), a.max(b));
            if !set.remove(&e) {
                set.insert(e);
            }
        }
    }
    set.into_iter().collect()
}

/// The ELC graph of two joined graphs, described edge by edge: outer
/// edges of both parts, the core edge, each core joined to the other
/// core's neighbors, and every cross pair of the two neighborhoods.
pub fn described_elc(g1: &Graph, c1: usize, g2: &Graph, c2: usize) -> Vec<(usize, usize)> {
    let off = g1.n();
    let k2 = off + c2;
    let b1: Vec<usize> = (0..g1.n()).filter(|&v| g1.has_edge(c1, v)).collect();
    let b2: Vec<usize> = (0..g2.n()).filter(|&v| g2.has_edge(c2, v)).map(|v| v + off).collect();
    let mut edges = vec![(c1, k2)];
    edges.extend(g1.edges().into_iter().filter(|&(a, b)| a != c1 && b != c1));
    edges.extend(
        g2.edges()
            .into_iter()
            .filter(|&(a, b)| a != c2 && b != c2)
            .map(|(a, b)| (a + off, b + off)),
    );
    edges.extend(b2.iter().map(|&v| (c1, v)));
    edges.extend(b1.iter().map(|&v| (k2, v)));
    for &u in &b1 {
        edges.extend(b2.iter().map(|&v| (u, v)));
    }
    xor_edges(&[edges])
}
