//! Pitman-Stanley polytopes `PS_d(a)` and their Ehrhart formula.

use crate::poly::{multiset_poly, Poly};
use crate::polytope::HPolytope;
use crate::rational::rat_int;

/// The ballot-type index set: weak compositions `i` of `d` into `d` parts
/// whose partial sums satisfy `i_1 + ... + i_k >= k` for `k < d`.
pub fn ballot_index_set(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    fn go(d: usize, pos: usize, sum: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == d {
            if sum == d {
                out.push(current.clone());
            }
            return;
        }
        for next in 0..=(d - sum) {
            // prefix condition for all but the last position
            if pos + 1 < d && sum + next < pos + 1 {
                continue;
            }
            if pos + 1 == d && sum + next != d {
                continue;
            }
            current.push(next);
            go(d, pos + 1, sum + next, current, out);
            current.pop();
        }
    }
    go(d, 0, 0, &mut current, &mut out);
    out
}

/// `PS_d(a) = { x >= 0 : x_1 + ... + x_i <= a_1 + ... + a_i }` together with
/// the Pitman-Stanley Ehrhart formula
/// `i(t) = sum_i ((a_1 t + 1; i_1)) prod_k ((a_k t; i_k))`
/// over the ballot index set.
pub fn pitman_stanley(a: &[i64]) -> (HPolytope, Poly) {
    let d = a.len();
    assert!(d >= 1, "PS_d needs d >= 1");
    assert!(a.iter().all(|&x| x >= 0), "netflow entries must be nonnegative");

    let mut ineqs = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut row = vec![0i64; d];
        row[i] = -1;
        ineqs.push((row, 0));
    }
    let mut partial = 0i64;
    for i in 0..d {
        partial += a[i];
        let mut row = vec![0i64; d];
        for j in 0..=i {
            row[j] = 1;
        }
        ineqs.push((row, partial));
    }
    let h = HPolytope::new(d, ineqs, vec![]).expect("rows match dimension");

    let mut poly = Poly::zero();
    for idx in ballot_index_set(d) {
        let first = Poly::from_coeffs(vec![rat_int(1), rat_int(a[0])]);
        let mut term = multiset_poly(&first, idx[0]).expect("linear argument");
        for k in 1..d {
            let lin = Poly::from_coeffs(vec![rat_int(0), rat_int(a[k])]);
            term = &term * &multiset_poly(&lin, idx[k]).expect("linear argument");
        }
        poly = &poly + &term;
    }
    (h, poly)
}
