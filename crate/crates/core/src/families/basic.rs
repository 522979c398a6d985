//! Unit cubes, standard simplices, cross-polytopes, Reeve tetrahedra, the
//! all-negative sign-pattern products, and Birkhoff polytopes.

use num_bigint::BigInt;

use crate::engine::HStarVector;
use crate::error::{Error, Result};
use crate::poly::{binom_poly, Poly};
use crate::polytope::{HPolytope, VPolytope};
use crate::rational::{binomial, rat, rat_int, Rat};

/// `[0,1]^d` with `i(t) = (t+1)^d`.
pub fn unit_cube(d: usize) -> (HPolytope, Poly) {
    assert!(d >= 1);
    let mut ineqs = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut row = vec![0i64; d];
        row[i] = 1;
        ineqs.push((row.clone(), 1));
        row[i] = -1;
        ineqs.push((row, 0));
    }
    let h = HPolytope::new(d, ineqs, vec![]).expect("rows match dimension");
    let lin = Poly::from_i64_coeffs(&[1, 1]);
    let mut poly = Poly::one();
    for _ in 0..d {
        poly = &poly * &lin;
    }
    (h, poly)
}

/// Standard `d`-simplex `conv{e_1, ..., e_(d+1)}` in `R^(d+1)`, with
/// `i(t) = C(t+d, d)`.
pub fn standard_simplex(d: usize) -> (HPolytope, Poly) {
    assert!(d >= 1);
    let n = d + 1;
    let mut ineqs = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![0i64; n];
        row[i] = -1;
        ineqs.push((row, 0));
    }
    let h = HPolytope::new(n, ineqs, vec![(vec![1; n], 1)]).expect("rows match dimension");
    (h, binom_poly(d as i64, d))
}

/// V-form of the standard simplex (the unit basis vectors).
pub fn standard_simplex_vrep(d: usize) -> VPolytope {
    let n = d + 1;
    let pts: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut p = vec![0i64; n];
            p[i] = 1;
            p
        })
        .collect();
    VPolytope::from_integer_points(n, &pts).expect("points match dimension")
}

/// Cross-polytope `conv{+-e_i}`: all `2^d` sign patterns
/// `+-x_1 +- ... +- x_d <= 1`, `i(t) = sum_k 2^k C(d,k) C(t,k)`, and
/// h*-polynomial `(1+z)^d`.
pub fn cross_polytope(d: usize) -> (HPolytope, Poly, HStarVector) {
    assert!(d >= 1);
    let mut ineqs = Vec::with_capacity(1 << d);
    for mask in 0..(1u32 << d) {
        let row: Vec<i64> = (0..d)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        ineqs.push((row, 1));
    }
    let h = HPolytope::new(d, ineqs, vec![]).expect("rows match dimension");
    let mut poly = Poly::zero();
    let big_d = BigInt::from(d as i64);
    for k in 0..=d {
        let weight = Rat::from_integer(binomial(&big_d, k) * BigInt::from(2i64).pow(k as u32));
        poly = &poly + &binom_poly(0, k).scale(&weight);
    }
    let hstar =
        HStarVector::new((0..=d).map(|k| binomial(&big_d, k)).collect()).expect("binomial row");
    (h, poly, hstar)
}

/// Reeve tetrahedron `T_m = conv{0, e_1, e_2, (1,1,m)}` with
/// `i(t) = (m/6) t^3 + t^2 + ((12-m)/6) t + 1`; the linear coefficient is 0
/// at m = 12 and negative for m >= 13.
pub fn reeve(m: i64) -> (VPolytope, Poly) {
    assert!(m >= 1);
    let v = VPolytope::from_integer_points(
        3,
        &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, m]],
    )
    .expect("points match dimension");
    (v, reeve_poly(m))
}

fn reeve_poly(m: i64) -> Poly {
    Poly::from_coeffs(vec![rat_int(1), rat(12 - m, 6), rat_int(1), rat(m, 6)])
}

/// Facet-irredundant inequality description of the Reeve tetrahedron,
/// for interior-point counting.
pub fn reeve_hform(m: i64) -> HPolytope {
    assert!(m >= 1);
    HPolytope::new(
        3,
        vec![
            (vec![0, 0, -1], 0),
            (vec![0, -m, 1], 0),
            (vec![-m, 0, 1], 0),
            (vec![m, m, -1], m),
        ],
        vec![],
    )
    .expect("rows match dimension")
}

/// The product of `d-3` copies of the segment `[0, d-3]` with the Reeve
/// tetrahedron `T_m`: for suitable `m` all middle coefficients of its
/// Ehrhart polynomial `((d-3)t+1)^(d-3) i(T_m, t)` are negative.
pub fn sign_pattern_product(m: i64, d: usize) -> Result<(HPolytope, Poly)> {
    if d < 3 {
        return Err(Error::invalid("the product construction needs d >= 3"));
    }
    let n = d - 3;
    let mut h = reeve_hform(m);
    let mut poly = reeve_poly(m);
    if n > 0 {
        let seg = HPolytope::new(1, vec![(vec![1], n as i64), (vec![-1], 0)], vec![])
            .expect("segment rows");
        let seg_poly = Poly::from_i64_coeffs(&[1, n as i64]);
        for _ in 0..n {
            h = seg.product(&h);
            poly = &poly * &seg_poly;
        }
    }
    Ok((h, poly))
}

/// Birkhoff polytope of `n x n` doubly-stochastic matrices: variables
/// `x_(i,j)` in row-major order, nonnegativity, and all row / column sums
/// equal to one.
pub fn birkhoff(n: usize) -> HPolytope {
    assert!(n >= 1);
    let dim = n * n;
    let mut ineqs = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut row = vec![0i64; dim];
        row[k] = -1;
        ineqs.push((row, 0));
    }
    let mut eqs = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut row = vec![0i64; dim];
        for j in 0..n {
            row[i * n + j] = 1;
        }
        eqs.push((row, 1));
    }
    for j in 0..n {
        let mut col = vec![0i64; dim];
        for i in 0..n {
            col[i * n + j] = 1;
        }
        eqs.push((col, 1));
    }
    HPolytope::new(dim, ineqs, eqs).expect("rows match dimension")
}
