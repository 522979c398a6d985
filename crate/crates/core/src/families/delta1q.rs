//! The simplices `Delta_(1,q) = conv{e_1, ..., e_d, -sum q_i e_i}` with the
//! number-theoretic h* formula of Braun-Davis-Solus, Conrads' reflexivity
//! criterion, and the Payne / base-r parameter builders.

use num_bigint::BigInt;

use crate::engine::HStarVector;
use crate::error::{Error, Result};
use crate::polytope::VPolytope;

/// Build `Delta_(1,q)` for `q` in `P^d`: the V-form, its h*-vector from
/// `h*_j = #{ b in [0, sum q] : omega(b) = j }` with
/// `omega(b) = b - sum_i floor(q_i b / (1 + sum q))`, and Conrads'
/// reflexivity flag `q_i | 1 + sum q` for all `i`.
pub fn delta_1q(q: &[i64]) -> Result<(VPolytope, HStarVector, bool)> {
    let d = q.len();
    if d == 0 || q.iter().any(|&qi| qi < 1) {
        return Err(Error::invalid("q must be a nonempty vector of positive integers"));
    }
    let total: i64 = q.iter().sum();
    let modulus = 1 + total;

    let mut points: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            let mut p = vec![0i64; d];
            p[i] = 1;
            p
        })
        .collect();
    points.push(q.iter().map(|&qi| -qi).collect());
    let v = VPolytope::from_integer_points(d, &points)?;

    let mut entries = vec![BigInt::from(0); d + 1];
    for b in 0..=total {
        let omega = b - q.iter().map(|&qi| qi * b / modulus).sum::<i64>();
        entries[omega as usize] += 1;
    }
    let hstar = HStarVector::new(entries)?;

    let reflexive = q.iter().all(|&qi| modulus % qi == 0);
    Ok((v, hstar, reflexive))
}

/// Payne's reflexive simplices with non-unimodal h*: for `r >= 0`, `s >= 3`,
/// `k >= r + 2`, the vector `q` has `sk - 1` ones followed by `r + 1` copies
/// of `s` (so `d = r + sk`), and
/// `h*(z) = (1 + z^k + ... + z^((s-1)k))(1 + z + ... + z^(k+r))`.
pub fn payne(r: i64, s: i64, k: i64) -> Result<Vec<i64>> {
    if r < 0 || s < 3 || k < r + 2 {
        return Err(Error::invalid("Payne parameters need r >= 0, s >= 3, k >= r + 2"));
    }
    let ones = (s * k - 1) as usize;
    let mut q = vec![1i64; ones];
    q.extend(std::iter::repeat_n(s, (r + 1) as usize));
    debug_assert_eq!(q.len() as i64, r + s * k);
    Ok(q)
}

/// Base-r simplex parameters `q_r = (r-1, (r-1)r, ..., (r-1)r^(d-1))`.
/// `r = 1` would give `q = 0`, which `Delta_(1,q)` forbids; that case is the
/// standard simplex up to unimodular equivalence and is returned as a
/// separate variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRSimplex {
    /// `r = 1`: unimodularly equivalent to the standard `d`-simplex.
    StandardSimplex,
    Q(Vec<i64>),
}

pub fn base_r_simplex(r: i64, d: usize) -> Result<BaseRSimplex> {
    if r < 1 || d == 0 {
        return Err(Error::invalid("base-r simplices need r >= 1 and d >= 1"));
    }
    if r == 1 {
        return Ok(BaseRSimplex::StandardSimplex);
    }
    let mut q = Vec::with_capacity(d);
    let mut power = 1i64;
    for _ in 0..d {
        q.push(
            (r - 1)
                .checked_mul(power)
                .ok_or(Error::MagnitudeLimit)?,
        );
        power = power.checked_mul(r).ok_or(Error::MagnitudeLimit)?;
    }
    Ok(BaseRSimplex::Q(q))
}
