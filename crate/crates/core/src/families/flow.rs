//! Flow polytopes, Kostant partition functions, and the Lidskii-type
//! Ehrhart expansions; CRY and Tesler polytopes as flow polytopes of
//! complete graphs.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{binom_of_poly, multiset_poly, Poly};
use crate::polytope::HPolytope;
use crate::rational::{rat_int, Rat};

/// Loopless DAG on `{1, ..., n+1}` whose edges `(i, j)` always ascend
/// (`i < j`); multi-edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FlowGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices < 2 {
            return Err(Error::invalid("a flow graph needs at least two vertices"));
        }
        for &(i, j) in &edges {
            if i < 1 || j <= i || j > vertices {
                return Err(Error::invalid(format!(
                    "edge ({}, {}) must ascend within 1..={}",
                    i, j, vertices
                )));
            }
        }
        Ok(FlowGraph { vertices, edges })
    }

    /// Complete graph `K_(n+1)` on `1..=n+1`.
    pub fn complete(vertices: usize) -> Self {
        let edges = (1..vertices)
            .flat_map(|i| (i + 1..=vertices).map(move |j| (i, j)))
            .collect();
        FlowGraph { vertices, edges }
    }

    /// The graph with edges `(i, i+1)` and `(i, d+1)` for `i = 1..d`, whose
    /// flow polytope is unimodularly equivalent to the Pitman-Stanley
    /// polytope. The two families coincide at `i = d`, so `(d, d+1)` is a
    /// doubled edge and `m = 2d`.
    pub fn pitman_stanley_graph(d: usize) -> Self {
        assert!(d >= 1);
        let mut edges = Vec::with_capacity(2 * d);
        for i in 1..=d {
            edges.push((i, i + 1));
            edges.push((i, d + 1));
        }
        edges.sort();
        FlowGraph { vertices: d + 1, edges }
    }

    /// Planar graph on `k+1` vertices whose flow polytope with netflow
    /// `(1, 0, ..., 0)` is unimodularly equivalent to the order polytope of
    /// the one-minimal-element poset: a doubled path `1 -> 2 -> ... -> k+1`
    /// plus the chord `(1, k+1)`.
    pub fn doubled_path_with_chord(k: usize) -> Self {
        assert!(k >= 1);
        let mut edges = Vec::new();
        for i in 1..=k {
            edges.push((i, i + 1));
            edges.push((i, i + 1));
        }
        edges.push((1, k + 1));
        edges.sort();
        FlowGraph { vertices: k + 1, edges }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, _)| i == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, j)| j == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &self.edges {
                for (a, b) in [(i, j), (j, i)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        (1..=self.vertices).all(|v| seen[v])
    }
}

/// Kostant partition function: the number of ways to write `b` as a
/// nonnegative integer combination of the roots `e_i - e_j` over the edges
/// of `G`. Counted by a vertex-by-vertex enumeration: once vertices below
/// `v` carry fixed flows, the outflow of `v` is determined and is split over
/// its outgoing edges.
pub fn kostant(g: &FlowGraph, b: &[i64]) -> Result<BigInt> {
    if b.len() != g.vertices {
        return Err(Error::DimensionMismatch(b.len(), g.vertices));
    }
    if b.iter().sum::<i64>() != 0 {
        return Err(Error::invalid("netflow must sum to zero"));
    }
    let n = g.vertices - 1;
    let mut out_targets: Vec<Vec<usize>> = vec![Vec::new(); g.vertices + 1];
    for &(i, j) in &g.edges {
        out_targets[i].push(j);
    }
    let mut inflow = vec![0i64; g.vertices + 1];
    Ok(count_flows(1, n, b, &out_targets, &mut inflow))
}

fn count_flows(
    v: usize,
    n: usize,
    b: &[i64],
    out_targets: &[Vec<usize>],
    inflow: &mut Vec<i64>,
) -> BigInt {
    if v > n {
        return BigInt::from(1);
    }
    let need = b[v - 1] + inflow[v];
    if need < 0 {
        return BigInt::zero();
    }
    let targets = &out_targets[v];
    if targets.is_empty() {
        return if need == 0 {
            count_flows(v + 1, n, b, out_targets, inflow)
        } else {
            BigInt::zero()
        };
    }
    split_over_edges(v, n, 0, need, b, out_targets, inflow)
}

fn split_over_edges(
    v: usize,
    n: usize,
    edge_idx: usize,
    remaining: i64,
    b: &[i64],
    out_targets: &[Vec<usize>],
    inflow: &mut Vec<i64>,
) -> BigInt {
    let targets = &out_targets[v];
    if edge_idx + 1 == targets.len() {
        let tgt = targets[edge_idx];
        inflow[tgt] += remaining;
        let sub = count_flows(v + 1, n, b, out_targets, inflow);
        inflow[tgt] -= remaining;
        return sub;
    }
    let mut total = BigInt::zero();
    let tgt = targets[edge_idx];
    for f in 0..=remaining {
        inflow[tgt] += f;
        total += split_over_edges(v, n, edge_idx + 1, remaining - f, b, out_targets, inflow);
        inflow[tgt] -= f;
    }
    total
}

/// Flow polytope `F_G(a-bar)` in `R^(E(G))`: nonnegative flows with netflow
/// `a_i` at vertex `i` for `i = 1..n` (the netflow at `n+1` follows). The
/// Lidskii hypotheses — connectivity and an outgoing edge at every
/// non-sink vertex — are enforced here.
pub fn flow_polytope(g: &FlowGraph, a: &[i64]) -> Result<HPolytope> {
    check_lidskii_hypotheses(g, a)?;
    let m = g.edges.len();
    let n = g.vertices - 1;
    let mut ineqs = Vec::with_capacity(m);
    for e in 0..m {
        let mut row = vec![0i64; m];
        row[e] = -1;
        ineqs.push((row, 0));
    }
    let mut eqs = Vec::with_capacity(n);
    for v in 1..=n {
        let mut row = vec![0i64; m];
        for (e, &(i, j)) in g.edges.iter().enumerate() {
            if i == v {
                row[e] += 1;
            }
            if j == v {
                row[e] -= 1;
            }
        }
        eqs.push((row, a[v - 1]));
    }
    HPolytope::new(m, ineqs, eqs)
}

fn check_lidskii_hypotheses(g: &FlowGraph, a: &[i64]) -> Result<()> {
    let n = g.vertices - 1;
    if a.len() != n {
        return Err(Error::DimensionMismatch(a.len(), n));
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::invalid("netflow entries must be nonnegative"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("the flow graph must be connected"));
    }
    for v in 1..=n {
        if g.out_degree(v) == 0 {
            return Err(Error::invalid(format!(
                "vertex {} has no outgoing edge",
                v
            )));
        }
    }
    Ok(())
}

/// Lidskii expansion of the Ehrhart polynomial of `F_G(a-bar)` in the
/// binomial form:
/// `sum_j prod_k C(a_k t + out_k, j_k) KP_G(j - out, 0)`,
/// summing over weak compositions `j` of `m - n` dominating
/// `(out_1, ..., out_n)` (prefix sums, ties included).
pub fn lidskii_ehrhart(g: &FlowGraph, a: &[i64]) -> Result<Poly> {
    lidskii_impl(g, a, false)
}

/// The multiset form of the same expansion,
/// `sum_j prod_k ((a_k t - in_k; j_k)) KP_G(j - out, 0)`.
pub fn lidskii_ehrhart_multiset(g: &FlowGraph, a: &[i64]) -> Result<Poly> {
    lidskii_impl(g, a, true)
}

fn lidskii_impl(g: &FlowGraph, a: &[i64], multiset_form: bool) -> Result<Poly> {
    check_lidskii_hypotheses(g, a)?;
    let n = g.vertices - 1;
    let m = g.edges.len();
    let out: Vec<i64> = (1..=n).map(|v| g.out_degree(v) as i64 - 1).collect();
    let inn: Vec<i64> = (1..=n).map(|v| g.in_degree(v) as i64 - 1).collect();
    let total = (m - n) as i64;

    let mut poly = Poly::zero();
    let mut j = vec![0i64; n];
    enumerate_dominating(&mut j, 0, total, &out, &mut |j: &[i64]| -> Result<()> {
        let mut b: Vec<i64> = j.iter().zip(&out).map(|(ji, oi)| ji - oi).collect();
        b.push(0);
        let kp = kostant(g, &b)?;
        if kp.is_zero() {
            return Ok(());
        }
        let mut term = Poly::constant(Rat::from_integer(kp));
        for k in 0..n {
            let factor = if multiset_form {
                let lin = Poly::from_coeffs(vec![rat_int(-inn[k]), rat_int(a[k])]);
                multiset_poly(&lin, j[k] as usize).expect("linear argument")
            } else {
                let lin = Poly::from_coeffs(vec![rat_int(out[k]), rat_int(a[k])]);
                binom_of_poly(&lin, j[k] as usize)
            };
            term = &term * &factor;
        }
        poly = &poly + &term;
        Ok(())
    })?;
    Ok(poly)
}

/// Weak compositions of `total` into `out.len()` parts whose prefix sums
/// dominate those of `out`.
fn enumerate_dominating(
    j: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    out: &[i64],
    f: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    let n = out.len();
    if pos == n {
        if remaining == 0 {
            f(j)?;
        }
        return Ok(());
    }
    let prefix_j: i64 = j[..pos].iter().sum();
    let prefix_o: i64 = out[..=pos].iter().sum();
    // dominance forces the prefix sum through position pos to reach prefix_o
    let min_here = (prefix_o - prefix_j).max(0);
    for v in min_here..=remaining {
        j[pos] = v;
        enumerate_dominating(j, pos + 1, remaining - v, out, f)?;
        j[pos] = 0;
    }
    Ok(())
}

/// Chan-Robbins-Yuen polytope `CRY_n = F_(K_(n+1))(1, 0, ..., 0, -1)`.
pub fn cry(n: usize) -> Result<HPolytope> {
    if n < 2 {
        return Err(Error::invalid("CRY_n needs n >= 2"));
    }
    let mut a = vec![0i64; n];
    a[0] = 1;
    flow_polytope(&FlowGraph::complete(n + 1), &a)
}

/// Tesler polytope `Tes_n(1, ..., 1) = F_(K_(n+1))(1, ..., 1, -n)`.
pub fn tesler(n: usize) -> Result<HPolytope> {
    if n < 2 {
        return Err(Error::invalid("Tes_n needs n >= 2"));
    }
    flow_polytope(&FlowGraph::complete(n + 1), &vec![1i64; n])
}
