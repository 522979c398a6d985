//! Zonotopes and their combinatorial Ehrhart coefficients (Stanley's
//! gcd-of-minors formula), the regular permutohedron with its forest
//! interpretation, and the Hopkins-Postnikov generalized-zonotope count.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::count_points;
use crate::error::{Error, Result};
use crate::lattice;
use crate::poly::Poly;
use crate::polytope::{Polytope, VPolytope};
use crate::rational::Rat;

/// Stanley's formula: the coefficient of `t^k` in the Ehrhart polynomial of
/// the zonotope `sum [0, v_i]` is the sum of `h(X)` — the gcd of all
/// `k x k` minors — over linearly independent `k`-subsets `X` of the
/// generators (dependent subsets contribute gcd 0). The coefficients are
/// positive integers.
pub fn zonotope_coeffs(generators: &[Vec<i64>]) -> Poly {
    assert!(!generators.is_empty(), "zonotopes need at least one generator");
    let dim = generators[0].len();
    let n = generators.len();
    let max_k = n.min(dim);
    let mut coeffs = vec![BigInt::zero(); max_k + 1];
    coeffs[0] = BigInt::one();
    for k in 1..=max_k {
        for subset in (0..n).combinations(k) {
            let columns: Vec<Vec<BigInt>> = subset
                .iter()
                .map(|&i| generators[i].iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            coeffs[k] += lattice::gcd_of_maximal_minors(&columns);
        }
    }
    Poly::from_coeffs(coeffs.into_iter().map(Rat::from_integer).collect())
}

/// V-form of the zonotope: all `2^n` subset sums of the generators.
pub fn zonotope_vrep(generators: &[Vec<i64>]) -> VPolytope {
    assert!(!generators.is_empty());
    let dim = generators[0].len();
    let n = generators.len();
    assert!(n <= 20, "subset-sum V-form is desk-scale only");
    let mut points: Vec<Vec<i64>> = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let mut p = vec![0i64; dim];
        for (i, g) in generators.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (c, &v) in p.iter_mut().zip(g) {
                    *c += v;
                }
            }
        }
        points.push(p);
    }
    points.sort();
    points.dedup();
    VPolytope::from_integer_points(dim, &points).expect("points match dimension")
}

/// The root generators `e_j - e_i` (i < j) of `R^(d+1)`; their zonotope is a
/// translate of the regular permutohedron.
pub fn root_generators(d: usize) -> Vec<Vec<i64>> {
    let n = d + 1;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut g = vec![0i64; n];
            g[j] = 1;
            g[i] = -1;
            gens.push(g);
        }
    }
    gens
}

/// Regular permutohedron: convex hull of all permutations of
/// `(1, 2, ..., d+1)`.
pub fn regular_permutohedron(d: usize) -> VPolytope {
    let n = d + 1;
    let points: Vec<Vec<i64>> = (1..=n as i64)
        .permutations(n)
        .collect();
    VPolytope::from_integer_points(n, &points).expect("points match dimension")
}

/// Number of forests on `[n]` with exactly `trees` connected components, by
/// enumeration of acyclic edge subsets of the complete graph. Desk-scale
/// guard: n <= 7.
pub fn forest_count(n: usize, trees: usize) -> Result<u64> {
    if n > 7 {
        return Err(Error::invalid("forest enumeration is capped at n = 7"));
    }
    if trees > n {
        return Ok(0);
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let wanted_edges = n - trees;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    fn go(
        edges: &[(usize, usize)],
        idx: usize,
        used: usize,
        wanted: usize,
        parent: &mut Vec<usize>,
    ) -> u64 {
        if used == wanted {
            // exactly the right number of edges: one subset
            return 1;
        }
        if idx == edges.len() || edges.len() - idx < wanted - used {
            return 0;
        }
        // skip this edge
        let mut total = go(edges, idx + 1, used, wanted, parent);
        // take it when it joins two components
        let (a, b) = edges[idx];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            let saved = parent.clone();
            parent[ra] = rb;
            total += go(edges, idx + 1, used + 1, wanted, parent);
            *parent = saved;
        }
        total
    }
    Ok(go(&edges, 0, 0, wanted_edges, &mut parent))
}

/// Hopkins-Postnikov: the degree-`k` coefficient of
/// `|(P + tZ(v_1..v_n)) intersect Z^D|` (diagonal `t`) is
/// `sum_X |quot_X(P) intersect quot_X(Z^D)| h(X)` over linearly independent
/// `k`-subsets `X`. Quotient coordinates come from completing a basis of the
/// saturated lattice `span(X) intersect Z^D` to a basis of `Z^D`.
pub fn gen_zonotope_ehrhart(p: &VPolytope, generators: &[Vec<i64>]) -> Result<Poly> {
    let dim = p.dim;
    for g in generators {
        if g.len() != dim {
            return Err(Error::BadRowLength { want: dim, got: g.len() });
        }
    }
    let n = generators.len();
    let max_k = n.min(dim);
    let mut coeffs = vec![BigInt::zero(); max_k + 1];
    coeffs[0] = count_points(&Polytope::V(p.clone()), 1)?;
    for k in 1..=max_k {
        for subset in (0..n).combinations(k) {
            let columns: Vec<Vec<BigInt>> = subset
                .iter()
                .map(|&i| generators[i].iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            let h = lattice::gcd_of_maximal_minors(&columns);
            if h.is_zero() {
                continue;
            }
            coeffs[k] += quotient_count(p, &subset.iter().map(|&i| generators[i].clone()).collect::<Vec<_>>())? * h;
        }
    }
    Ok(Poly::from_coeffs(coeffs.into_iter().map(Rat::from_integer).collect()))
}

/// `|quot_X(P) intersect quot_X(Z^D)|`: transform by the inverse of a
/// unimodular matrix whose trailing columns span the saturation of
/// `span(X)`, drop the trailing coordinates, and count lattice points of the
/// projected hull.
fn quotient_count(p: &VPolytope, x: &[Vec<i64>]) -> Result<BigInt> {
    let dim = p.dim;
    let k = x.len();
    let sat = lattice::saturation_with_complement(&lattice::to_bigint_rows(x), dim);
    debug_assert_eq!(sat.basis.len(), k, "independent subsets have full-rank saturation");
    let inv = lattice::inverse_unimodular(&sat.transform);
    let keep = dim - k;
    let mut projected: Vec<Vec<Rat>> = p
        .points
        .iter()
        .map(|pt| {
            (0..keep)
                .map(|row| {
                    let mut acc = Rat::from_integer(BigInt::zero());
                    for (col, coord) in pt.iter().enumerate() {
                        acc += Rat::from_integer(inv[row][col].clone()) * coord;
                    }
                    acc
                })
                .collect()
        })
        .collect();
    projected.sort();
    projected.dedup();
    let quotient = VPolytope::new(keep, projected)?;
    count_points(&Polytope::V(quotient), 1)
}
