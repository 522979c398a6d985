//! Stored non-Ehrhart-positive fixtures: the Reeve tetrahedron at m = 13,
//! Stanley's order-polytope example at k = 20, the 9-dimensional smooth
//! reflexive polytope, and the two Minkowski-sum counterexamples, each with
//! its reference polynomial.

use crate::poly::{power_sum_poly, Poly};
use crate::polytope::{HPolytope, Polytope, VPolytope};
use crate::rational::{rat, rat_int};

use super::basic::reeve;
use super::order::{fan_poset, order_polytope};

/// One catalogued counterexample: a polytope whose Ehrhart polynomial has a
/// negative coefficient, with the reference polynomial stored verbatim.
#[derive(Clone, Debug)]
pub struct StoredCounterexample {
    pub name: &'static str,
    pub polytope: Polytope,
    pub ehrhart: Poly,
    pub dim: usize,
}

/// The 9-dimensional smooth reflexive polytope with a negative linear
/// Ehrhart coefficient: twelve inequality rows against an all-ones
/// right-hand side.
pub fn smooth_reflexive_9() -> (HPolytope, Poly) {
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::with_capacity(12);
    for i in 0..9 {
        let mut row = vec![0i64; 9];
        row[i] = 1;
        rows.push((row, 1));
    }
    rows.push((vec![0, 0, 0, 0, 0, 0, 0, 0, -1], 1));
    rows.push((vec![-1, -1, -1, -1, 0, 0, 0, 0, 4], 1));
    rows.push((vec![0, 0, 0, 0, -1, -1, -1, -1, -4], 1));
    let h = HPolytope::new(9, rows, vec![]).expect("rows match dimension");
    let poly = Poly::from_coeffs(vec![
        rat_int(1),
        rat(-6673, 630),
        rat(11915, 1008),
        rat(3838711, 9072),
        rat(117857, 64),
        rat(19058687, 4320),
        rat(630095, 96),
        rat(9074291, 1512),
        rat(12477727, 4032),
        rat(12477727, 18144),
    ]);
    (h, poly)
}

/// First Minkowski counterexample: a unimodular 3-simplex plus a segment in
/// `R^4`. Returns `(P, Q, i(P+Q, t))`.
pub fn mink1() -> (VPolytope, VPolytope, Poly) {
    let p = VPolytope::from_integer_points(
        4,
        &[
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ],
    )
    .expect("points match dimension");
    let q = VPolytope::from_integer_points(4, &[vec![0, 0, 0, 0], vec![1, 19, 19, 20]])
        .expect("points match dimension");
    let sum_poly = Poly::from_coeffs(vec![
        rat_int(1),
        rat(17, 6),
        rat(-1, 3),
        rat(7, 6),
        rat(10, 3),
    ]);
    (p, q, sum_poly)
}

/// Second Minkowski counterexample: two Ehrhart-positive 5-simplices whose
/// sum has a negative cubic coefficient. Returns `(P, Q, i(Q, t), i(P+Q, t))`.
pub fn mink2() -> (VPolytope, VPolytope, Poly, Poly) {
    let p = VPolytope::from_integer_points(
        5,
        &[
            vec![0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 5, 15, 16],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
        ],
    )
    .expect("points match dimension");
    let q = VPolytope::from_integer_points(
        5,
        &[
            vec![0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 1, 15, 15, 16],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1],
        ],
    )
    .expect("points match dimension");
    let q_poly = Poly::from_coeffs(vec![
        rat_int(1),
        rat(13, 6),
        rat(19, 12),
        rat(17, 24),
        rat(5, 12),
        rat(1, 8),
    ]);
    let sum_poly = Poly::from_coeffs(vec![
        rat_int(1),
        rat(89, 20),
        rat(193, 24),
        rat(-255, 24),
        rat(359, 24),
        rat(3007, 40),
    ]);
    (p, q, q_poly, sum_poly)
}

/// The named catalog used by the counterexample report.
pub fn stored_counterexamples() -> Vec<StoredCounterexample> {
    let (reeve_v, reeve_poly) = reeve(13);
    let (sr9, sr9_poly) = smooth_reflexive_9();
    let (m1p, m1q, m1_poly) = mink1();
    let (m2p, m2q, _, m2_poly) = mink2();
    let mink1_sum = m1p.minkowski_sum(&m1q).expect("same ambient dimension");
    let mink2_sum = m2p.minkowski_sum(&m2q).expect("same ambient dimension");
    vec![
        StoredCounterexample {
            name: "reeve-13",
            polytope: Polytope::V(reeve_v),
            ehrhart: reeve_poly,
            dim: 3,
        },
        StoredCounterexample {
            name: "stanley-order-20",
            polytope: Polytope::H(order_polytope(&fan_poset(20))),
            ehrhart: power_sum_poly(20),
            dim: 21,
        },
        StoredCounterexample {
            name: "smooth-reflexive-9",
            polytope: Polytope::H(sr9),
            ehrhart: sr9_poly,
            dim: 9,
        },
        StoredCounterexample {
            name: "mink-1",
            polytope: Polytope::V(mink1_sum),
            ehrhart: m1_poly,
            dim: 4,
        },
        StoredCounterexample {
            name: "mink-2",
            polytope: Polytope::V(mink2_sum),
            ehrhart: m2_poly,
            dim: 5,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    use crate::engine::count_points;
    use crate::rational::rat_int;

    #[test]
    fn stored_polynomials_have_negative_coefficients() {
        for ce in stored_counterexamples() {
            assert_eq!(ce.ehrhart.degree(), Some(ce.dim), "{}", ce.name);
            assert_eq!(ce.ehrhart.coeff(0), rat_int(1), "{}", ce.name);
            assert!(
                (1..ce.dim).any(|i| ce.ehrhart.coeff(i).is_negative()),
                "{} should have a negative middle coefficient",
                ce.name
            );
        }
    }

    #[test]
    fn smooth_reflexive_coefficients() {
        let (_, poly) = smooth_reflexive_9();
        assert_eq!(poly.coeff(1), rat(-6673, 630));
        assert_eq!(poly.coeff(9), rat(12477727, 18144));
    }

    #[test]
    fn mink1_count_at_one() {
        // 10/3 + 7/6 - 1/3 + 17/6 + 1 = 8, cross-checked by enumeration
        let (p, q, sum_poly) = mink1();
        assert_eq!(sum_poly.eval_int(1), rat_int(8));
        let sum = p.minkowski_sum(&q).unwrap();
        assert_eq!(
            count_points(&Polytope::V(sum), 1).unwrap(),
            num_bigint::BigInt::from(8)
        );
    }

    #[test]
    fn mink2_quadratic_data() {
        let (_, _, q_poly, sum_poly) = mink2();
        assert!(q_poly.all_coeffs_positive());
        assert_eq!(sum_poly.coeff(3), rat(-255, 24));
        assert_eq!(sum_poly.coeff(5), rat(3007, 40));
    }
}
