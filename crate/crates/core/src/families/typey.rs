//! Minkowski sums of dilated coordinate simplices indexed by a bipartite
//! graph, and Postnikov's Ehrhart formula over draconian sequences.


use crate::error::{Error, Result};
use crate::poly::{multiset_poly, Poly};
use crate::polytope::VPolytope;
use crate::rational::rat_int;

/// Subgraph of `K_(c, d+1)` without isolated vertices, stored as the
/// neighborhoods `I_j` (0-based subsets of the right side) of the left
/// vertices.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    pub right: usize, // d + 1
    pub neighborhoods: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(right: usize, neighborhoods: Vec<Vec<usize>>) -> Result<Self> {
        if neighborhoods.is_empty() || right == 0 {
            return Err(Error::invalid("bipartite graph must have vertices on both sides"));
        }
        let mut covered = vec![false; right];
        for nb in &neighborhoods {
            if nb.is_empty() {
                return Err(Error::invalid("isolated left vertex"));
            }
            for &i in nb {
                if i >= right {
                    return Err(Error::invalid("right vertex index out of range"));
                }
                covered[i] = true;
            }
        }
        if !covered.iter().all(|&c| c) {
            return Err(Error::invalid("isolated right vertex"));
        }
        let mut g = BipartiteGraph { right, neighborhoods };
        for nb in &mut g.neighborhoods {
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(g)
    }

    pub fn left(&self) -> usize {
        self.neighborhoods.len()
    }

    /// The staircase graph of the Pitman-Stanley specialization: left vertex
    /// `j` adjacent to right vertices `j..=d`.
    pub fn staircase(d: usize) -> Self {
        let right = d + 1;
        let neighborhoods = (0..right).map(|j| (j..right).collect()).collect();
        BipartiteGraph { right, neighborhoods }
    }
}

/// All draconian sequences of `G`: weak compositions `g` of `d` into
/// `c = left` parts such that every nonempty subset `S` of left vertices has
/// `|union of I_j, j in S| >= 1 + sum of g_j, j in S`.
pub fn draconian_sequences(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let c = g.left();
    let d = g.right - 1;
    // union cardinalities for all subsets, as bitmasks over the right side
    let masks: Vec<u64> = g
        .neighborhoods
        .iter()
        .map(|nb| nb.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0usize; c];
    backtrack(&masks, d, 0, 0, &mut current, &mut out);
    out
}

fn backtrack(
    masks: &[u64],
    d: usize,
    pos: usize,
    used: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let c = masks.len();
    if pos == c {
        if used == d && draconian_ok(masks, current) {
            out.push(current.clone());
        }
        return;
    }
    // prefix prune: the filled positions alone must satisfy the union bound
    for v in 0..=(d - used) {
        current[pos] = v;
        if prefix_ok(masks, current, pos) {
            backtrack(masks, d, pos + 1, used + v, current, out);
        }
    }
    current[pos] = 0;
}

fn prefix_ok(masks: &[u64], current: &[usize], filled_to: usize) -> bool {
    // check all subsets of the filled prefix that include the newest index
    for subset in subsets_including(filled_to) {
        let mut union = 0u64;
        let mut total = 0usize;
        for j in 0..=filled_to {
            if subset >> j & 1 == 1 {
                union |= masks[j];
                total += current[j];
            }
        }
        if (union.count_ones() as usize) < total + 1 {
            return false;
        }
    }
    true
}

fn subsets_including(top: usize) -> impl Iterator<Item = u64> {
    let bit = 1u64 << top;
    (0..(1u64 << top)).map(move |rest| rest | bit)
}

fn draconian_ok(masks: &[u64], g: &[usize]) -> bool {
    let c = masks.len();
    for subset in 1..(1u64 << c) {
        let mut union = 0u64;
        let mut total = 0usize;
        for j in 0..c {
            if subset >> j & 1 == 1 {
                union |= masks[j];
                total += g[j];
            }
        }
        if (union.count_ones() as usize) < total + 1 {
            return false;
        }
    }
    true
}

/// Postnikov's formula for the Ehrhart polynomial of
/// `P_G(y) = sum y_j Delta_(I_j)`: requires `I_1 = [d+1]`, and sums
/// `((y_1 t + 1; g_1)) prod_k ((y_k t; g_k))` over draconian sequences.
pub fn typey_ehrhart(g: &BipartiteGraph, y: &[i64]) -> Result<Poly> {
    if g.neighborhoods[0].len() != g.right {
        return Err(Error::invalid("the first left vertex must be joined to the whole right side"));
    }
    if y.len() != g.left() {
        return Err(Error::DimensionMismatch(y.len(), g.left()));
    }
    if y.iter().any(|&v| v < 0) {
        return Err(Error::invalid("dilation factors must be nonnegative"));
    }
    let mut poly = Poly::zero();
    for seq in draconian_sequences(g) {
        let first = Poly::from_coeffs(vec![rat_int(1), rat_int(y[0])]);
        let mut term = multiset_poly(&first, seq[0]).expect("linear argument");
        for k in 1..g.left() {
            let lin = Poly::from_coeffs(vec![rat_int(0), rat_int(y[k])]);
            term = &term * &multiset_poly(&lin, seq[k]).expect("linear argument");
        }
        poly = &poly + &term;
    }
    Ok(poly)
}

/// The Minkowski sum `sum y_j Delta_(I_j)` itself, as a V-polytope in
/// `R^(d+1)`; the interpolation oracle for [`typey_ehrhart`].
pub fn typey_vrep(g: &BipartiteGraph, y: &[i64]) -> Result<VPolytope> {
    if y.len() != g.left() {
        return Err(Error::DimensionMismatch(y.len(), g.left()));
    }
    let dim = g.right;
    let mut acc = VPolytope::from_integer_points(dim, &[vec![0; dim]])?;
    for (nb, &yj) in g.neighborhoods.iter().zip(y) {
        let simplex_pts: Vec<Vec<i64>> = nb
            .iter()
            .map(|&i| {
                let mut p = vec![0i64; dim];
                p[i] = 1;
                p
            })
            .collect();
        let simplex = VPolytope::from_integer_points(dim, &simplex_pts)?;
        acc = acc.minkowski_sum(&simplex.dilate(yj))?;
    }
    Ok(acc)
}
