//! Exact polytope representations and constructive operations.
//!
//! An [`HPolytope`] is an integer inequality system `A x <= b` with optional
//! equalities; a [`VPolytope`] is a list of rational generating points whose
//! convex hull is the represented set (redundant generators are legal, which
//! keeps Minkowski sums and projections free of hull reduction). Membership
//! and coordinate-range queries on V-forms are decided by the exact rational
//! LP in [`crate::lp`] — no tolerances anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice;
use crate::lp::{self, Constraint, Outcome, Rel, VarKind};
use crate::rational::{rat_int, Rat};

/// Inequality system `a . x <= b` (rows `inequalities`) together with exact
/// equalities `a . x = b`. Dilation by `t` scales every right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub dim: usize,
    pub inequalities: Vec<(Vec<i64>, i64)>,
    pub equalities: Vec<(Vec<i64>, i64)>,
}

/// Convex hull of a nonempty list of rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub dim: usize,
    pub points: Vec<Vec<Rat>>,
}

/// Either representation, for operations that accept both.
#[derive(Clone, Debug)]
pub enum Polytope {
    H(HPolytope),
    V(VPolytope),
}

impl From<HPolytope> for Polytope {
    fn from(h: HPolytope) -> Self {
        Polytope::H(h)
    }
}

impl From<VPolytope> for Polytope {
    fn from(v: VPolytope) -> Self {
        Polytope::V(v)
    }
}

impl HPolytope {
    pub fn new(
        dim: usize,
        inequalities: Vec<(Vec<i64>, i64)>,
        equalities: Vec<(Vec<i64>, i64)>,
    ) -> Result<Self> {
        for (a, _) in inequalities.iter().chain(equalities.iter()) {
            if a.len() != dim {
                return Err(Error::BadRowLength { want: dim, got: a.len() });
            }
        }
        Ok(HPolytope { dim, inequalities, equalities })
    }

    /// The dilate `tP`: every right-hand side scaled by `t`.
    pub fn dilate(&self, t: i64) -> HPolytope {
        assert!(t >= 0, "dilation factor must be nonnegative");
        HPolytope {
            dim: self.dim,
            inequalities: self
                .inequalities
                .iter()
                .map(|(a, b)| (a.clone(), b * t))
                .collect(),
            equalities: self
                .equalities
                .iter()
                .map(|(a, b)| (a.clone(), b * t))
                .collect(),
        }
    }

    /// Exact membership of an integer point.
    pub fn contains(&self, x: &[i64]) -> bool {
        self.satisfies(x, false)
    }

    /// Relative-interior membership: equalities exact, inequalities strict.
    /// Correct for facet-irredundant systems with implicit equalities
    /// declared as equalities.
    pub fn contains_relint(&self, x: &[i64]) -> bool {
        self.satisfies(x, true)
    }

    fn satisfies(&self, x: &[i64], strict: bool) -> bool {
        assert_eq!(x.len(), self.dim);
        let dot = |a: &[i64]| -> i128 {
            a.iter()
                .zip(x)
                .map(|(&c, &v)| c as i128 * v as i128)
                .sum()
        };
        self.equalities.iter().all(|(a, b)| dot(a) == *b as i128)
            && self.inequalities.iter().all(|(a, b)| {
                let lhs = dot(a);
                if strict {
                    lhs < *b as i128
                } else {
                    lhs <= *b as i128
                }
            })
    }

    /// Exact min and max of coordinate `j` over the slice of the polytope
    /// with coordinates `0..prefix.len()` pinned to `prefix`. `None` means
    /// the slice is infeasible.
    pub fn coord_range(&self, prefix: &[i64], j: usize) -> Result<Option<(Rat, Rat)>> {
        assert!(j < self.dim && prefix.len() <= j);
        let cons = self.lp_constraints(prefix);
        let vars = vec![VarKind::Free; self.dim];
        let mut obj = vec![rat_int(0); self.dim];
        obj[j] = rat_int(1);
        let lo = match lp::minimize(&obj, &vars, &cons) {
            Outcome::Infeasible => return Ok(None),
            Outcome::Unbounded => return Err(Error::Unbounded(j)),
            Outcome::Optimal(v) => v,
        };
        let hi = match lp::maximize(&obj, &vars, &cons) {
            Outcome::Infeasible => return Ok(None),
            Outcome::Unbounded => return Err(Error::Unbounded(j)),
            Outcome::Optimal(v) => v,
        };
        Ok(Some((lo, hi)))
    }

    pub(crate) fn lp_constraints(&self, prefix: &[i64]) -> Vec<Constraint> {
        let mut cons = Vec::new();
        for (a, b) in &self.inequalities {
            cons.push(Constraint::new(
                a.iter().map(|&c| rat_int(c)).collect(),
                Rel::Le,
                rat_int(*b),
            ));
        }
        for (a, b) in &self.equalities {
            cons.push(Constraint::new(
                a.iter().map(|&c| rat_int(c)).collect(),
                Rel::Eq,
                rat_int(*b),
            ));
        }
        for (k, &v) in prefix.iter().enumerate() {
            let mut row = vec![rat_int(0); self.dim];
            row[k] = rat_int(1);
            cons.push(Constraint::new(row, Rel::Eq, rat_int(v)));
        }
        cons
    }

    /// Dimension of the affine hull: ambient dimension minus the rank of the
    /// declared equalities together with the implicit ones (inequalities that
    /// hold with equality on all of `P`, detected by exact LP).
    pub fn affine_dim(&self) -> Result<usize> {
        let vars = vec![VarKind::Free; self.dim];
        let cons = self.lp_constraints(&[]);
        if !lp::feasible(&vars, &cons) {
            return Err(Error::Infeasible);
        }
        let mut eq_rows: Vec<Vec<BigInt>> = self
            .equalities
            .iter()
            .map(|(a, _)| a.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        for (a, b) in &self.inequalities {
            let obj: Vec<Rat> = a.iter().map(|&c| rat_int(c)).collect();
            match lp::minimize(&obj, &vars, &cons) {
                Outcome::Optimal(v) if v == rat_int(*b) => {
                    eq_rows.push(a.iter().map(|&c| BigInt::from(c)).collect());
                }
                Outcome::Infeasible => return Err(Error::Infeasible),
                _ => {}
            }
        }
        Ok(self.dim - lattice::rank(&eq_rows))
    }

    /// Block-diagonal product with another H-polytope; the Ehrhart polynomial
    /// of the product is the product of the factors' polynomials.
    pub fn product(&self, other: &HPolytope) -> HPolytope {
        let dim = self.dim + other.dim;
        let pad_left = |a: &[i64]| {
            let mut row = a.to_vec();
            row.extend(std::iter::repeat_n(0, other.dim));
            row
        };
        let pad_right = |a: &[i64]| {
            let mut row = vec![0; self.dim];
            row.extend_from_slice(a);
            row
        };
        HPolytope {
            dim,
            inequalities: self
                .inequalities
                .iter()
                .map(|(a, b)| (pad_left(a), *b))
                .chain(other.inequalities.iter().map(|(a, b)| (pad_right(a), *b)))
                .collect(),
            equalities: self
                .equalities
                .iter()
                .map(|(a, b)| (pad_left(a), *b))
                .chain(other.equalities.iter().map(|(a, b)| (pad_right(a), *b)))
                .collect(),
        }
    }
}

impl VPolytope {
    pub fn new(dim: usize, points: Vec<Vec<Rat>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("a V-polytope needs at least one point"));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::BadRowLength { want: dim, got: p.len() });
            }
        }
        Ok(VPolytope { dim, points })
    }

    pub fn from_integer_points(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        VPolytope::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    pub fn dilate(&self, t: i64) -> VPolytope {
        assert!(t >= 0, "dilation factor must be nonnegative");
        let tt = rat_int(t);
        VPolytope {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|v| v * &tt).collect())
                .collect(),
        }
    }

    /// Generator index of a lattice point that fails to be integral, if any.
    pub fn non_integral_point(&self) -> Option<usize> {
        self.points
            .iter()
            .position(|p| p.iter().any(|c| !c.denom().is_one()))
    }

    /// Exact hull membership: is `x` a convex combination of the points?
    pub fn contains_hull(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.dim);
        let cons = self.lp_constraints(x);
        lp::feasible(&vec![VarKind::NonNeg; self.points.len()], &cons)
    }

    fn lp_constraints(&self, fixed: &[Rat]) -> Vec<Constraint> {
        let n = self.points.len();
        let mut cons = vec![Constraint::new(vec![rat_int(1); n], Rel::Eq, rat_int(1))];
        for (k, v) in fixed.iter().enumerate() {
            cons.push(Constraint::new(
                self.points.iter().map(|p| p[k].clone()).collect(),
                Rel::Eq,
                v.clone(),
            ));
        }
        cons
    }

    /// Exact min and max of coordinate `j` over the slice of the hull with
    /// the first coordinates pinned to `prefix`; two exact LPs.
    pub fn coord_range(&self, prefix: &[Rat], j: usize) -> Result<Option<(Rat, Rat)>> {
        assert!(j < self.dim && prefix.len() <= j);
        let cons = self.lp_constraints(prefix);
        let vars = vec![VarKind::NonNeg; self.points.len()];
        let obj: Vec<Rat> = self.points.iter().map(|p| p[j].clone()).collect();
        let lo = match lp::minimize(&obj, &vars, &cons) {
            Outcome::Infeasible => return Ok(None),
            Outcome::Unbounded => unreachable!("hulls of finitely many points are bounded"),
            Outcome::Optimal(v) => v,
        };
        let hi = match lp::maximize(&obj, &vars, &cons) {
            Outcome::Infeasible => return Ok(None),
            Outcome::Unbounded => unreachable!("hulls of finitely many points are bounded"),
            Outcome::Optimal(v) => v,
        };
        Ok(Some((lo, hi)))
    }

    /// Minkowski sum: all pairwise sums of generators (deduplicated, still
    /// possibly redundant).
    pub fn minkowski_sum(&self, other: &VPolytope) -> Result<VPolytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut sums: Vec<Vec<Rat>> = Vec::with_capacity(self.points.len() * other.points.len());
        for p in &self.points {
            for q in &other.points {
                sums.push(p.iter().zip(q).map(|(a, b)| a + b).collect());
            }
        }
        sums.sort();
        sums.dedup();
        VPolytope::new(self.dim, sums)
    }

    /// Projection that keeps the first `k` coordinates and ignores the rest.
    pub fn project_keep_first(&self, k: usize) -> Result<VPolytope> {
        if k > self.dim {
            return Err(Error::invalid(format!(
                "cannot keep {} coordinates of a {}-dimensional ambient space",
                k, self.dim
            )));
        }
        let mut pts: Vec<Vec<Rat>> = self.points.iter().map(|p| p[..k].to_vec()).collect();
        pts.sort();
        pts.dedup();
        Ok(VPolytope { dim: k, points: pts })
    }

    /// Rank of the difference set of the generators.
    pub fn affine_dim(&self) -> usize {
        let base = &self.points[0];
        // scale differences to integer rows for the exact rank computation
        let rows: Vec<Vec<BigInt>> = self.points[1..]
            .iter()
            .map(|p| {
                let diffs: Vec<Rat> = p.iter().zip(base).map(|(a, b)| a - b).collect();
                let lcm = diffs
                    .iter()
                    .fold(BigInt::one(), |acc, d| num_integer::lcm(acc, d.denom().clone()));
                diffs
                    .iter()
                    .map(|d| d.numer() * (&lcm / d.denom()))
                    .collect()
            })
            .collect();
        lattice::rank(&rows)
    }
}

impl Polytope {
    pub fn dim(&self) -> usize {
        match self {
            Polytope::H(h) => h.dim,
            Polytope::V(v) => v.dim,
        }
    }

    pub fn dilate(&self, t: i64) -> Polytope {
        match self {
            Polytope::H(h) => Polytope::H(h.dilate(t)),
            Polytope::V(v) => Polytope::V(v.dilate(t)),
        }
    }

    pub fn affine_dim(&self) -> Result<usize> {
        match self {
            Polytope::H(h) => h.affine_dim(),
            Polytope::V(v) => Ok(v.affine_dim()),
        }
    }

    pub fn as_h(&self) -> Option<&HPolytope> {
        match self {
            Polytope::H(h) => Some(h),
            Polytope::V(_) => None,
        }
    }

    pub fn as_v(&self) -> Option<&VPolytope> {
        match self {
            Polytope::V(v) => Some(v),
            Polytope::H(_) => None,
        }
    }
}

/// An affine subspace `base + span(generators)` of `R^d`, spanned by lattice
/// points. Lattice-ness is enforced by the integer field types.
#[derive(Clone, Debug)]
pub struct AffineSpan {
    pub base: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
}

/// Outcome of the integrality test for an affine span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineIntegrality {
    /// Whether the projection of `W intersect Z^d` onto the first
    /// `dim W` coordinates is all of `Z^(dim W)`.
    pub integral: bool,
    /// Index of that projection image inside `Z^(dim W)`; `None` when the
    /// projection drops rank (the span is not in general position).
    pub image_index: Option<BigInt>,
}

impl AffineSpan {
    pub fn new(base: Vec<i64>, generators: Vec<Vec<i64>>) -> Result<Self> {
        let d = base.len();
        for g in &generators {
            if g.len() != d {
                return Err(Error::BadRowLength { want: d, got: g.len() });
            }
        }
        Ok(AffineSpan { base, generators })
    }

    /// Span through a set of lattice points (first one is the base).
    pub fn through_points(points: &[Vec<i64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("affine span needs at least one point"));
        }
        let base = points[0].clone();
        let gens = points[1..]
            .iter()
            .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        AffineSpan::new(base, gens)
    }

    pub fn dim(&self) -> usize {
        lattice::rank(&lattice::to_bigint_rows(&self.generators))
    }

    /// Decide integrality of the span: the lattice `W intersect Z^d` is the
    /// base point plus the saturation of the generator lattice, and the test
    /// reduces to whether its projection onto the first `dim W` coordinates
    /// has determinant `+-1`.
    pub fn affine_integral(&self) -> AffineIntegrality {
        let d = self.base.len();
        let sat = lattice::saturation(&lattice::to_bigint_rows(&self.generators), d);
        let l = sat.len();
        if l == 0 {
            // a single lattice point projects onto Z^0
            return AffineIntegrality { integral: true, image_index: Some(BigInt::one()) };
        }
        // basis of the projected lattice: first l rows of the basis columns
        let top: Vec<Vec<BigInt>> = (0..l)
            .map(|i| sat.iter().map(|col| col[i].clone()).collect())
            .collect();
        let det = lattice::det(&top).abs();
        if det.is_zero() {
            AffineIntegrality { integral: false, image_index: None }
        } else {
            AffineIntegrality { integral: det.is_one(), image_index: Some(det) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub fn unit_square() -> HPolytope {
        HPolytope::new(
            2,
            vec![
                (vec![1, 0], 1),
                (vec![-1, 0], 0),
                (vec![0, 1], 1),
                (vec![0, -1], 0),
            ],
            vec![],
        )
        .unwrap()
    }

    fn triangle_v() -> VPolytope {
        VPolytope::from_integer_points(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap()
    }

    #[test]
    fn membership_and_relint() {
        let sq = unit_square();
        assert!(sq.contains(&[0, 1]));
        assert!(!sq.contains_relint(&[0, 1]));
        assert!(!sq.contains(&[2, 0]));

        // the standard 2-simplex: (1,1,0) violates the sum equality
        let simplex = HPolytope::new(
            3,
            vec![(vec![-1, 0, 0], 0), (vec![0, -1, 0], 0), (vec![0, 0, -1], 0)],
            vec![(vec![1, 1, 1], 1)],
        )
        .unwrap();
        assert!(!simplex.contains(&[1, 1, 0]));
        assert!(simplex.contains(&[1, 0, 0]));
    }

    #[test]
    fn hull_membership() {
        let tri = triangle_v();
        for p in &tri.points {
            assert!(tri.contains_hull(p));
        }
        // midpoint of two generators
        let mid = vec![rat(1, 2), rat(1, 2), rat_int(0)];
        assert!(tri.contains_hull(&mid));
        assert!(!tri.contains_hull(&[rat_int(1), rat_int(1), rat_int(0)]));
    }

    #[test]
    fn coord_ranges() {
        let sq = unit_square();
        assert_eq!(
            sq.coord_range(&[], 0).unwrap(),
            Some((rat_int(0), rat_int(1)))
        );
        // simplex slice: x0 = 1 forces the rest to zero
        let tri = triangle_v();
        let r = tri.coord_range(&[rat_int(1)], 1).unwrap().unwrap();
        assert_eq!(r, (rat_int(0), rat_int(0)));
        // infeasible prefix
        assert_eq!(tri.coord_range(&[rat_int(2)], 1).unwrap(), None);
    }

    #[test]
    fn unbounded_direction_is_reported() {
        let half = HPolytope::new(1, vec![(vec![-1], 0)], vec![]).unwrap();
        assert!(matches!(half.coord_range(&[], 0), Err(Error::Unbounded(0))));
    }

    #[test]
    fn dilation() {
        let sq = unit_square();
        let sq3 = sq.dilate(3);
        assert!(sq3.contains(&[3, 2]));
        assert!(!sq3.contains(&[4, 0]));
        assert_eq!(sq.dilate(1), sq);
        // dilation by zero collapses to the origin
        let z = sq.dilate(0);
        assert!(z.contains(&[0, 0]));
        assert!(!z.contains(&[1, 0]));
    }

    #[test]
    fn minkowski_and_product() {
        let seg_x = VPolytope::from_integer_points(2, &[vec![0, 0], vec![1, 0]]).unwrap();
        let seg_y = VPolytope::from_integer_points(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        let sq = seg_x.minkowski_sum(&seg_y).unwrap();
        assert_eq!(sq.points.len(), 4);
        for p in &seg_x.points {
            for q in &seg_y.points {
                let s: Vec<Rat> = p.iter().zip(q).map(|(a, b)| a + b).collect();
                assert!(sq.contains_hull(&s));
            }
        }
        // P + {0} = P
        let origin = VPolytope::from_integer_points(2, &[vec![0, 0]]).unwrap();
        let same = seg_x.minkowski_sum(&origin).unwrap();
        assert_eq!(same.points, seg_x.points);

        let seg1 = HPolytope::new(1, vec![(vec![1], 1), (vec![-1], 0)], vec![]).unwrap();
        let prod = seg1.product(&seg1);
        assert_eq!(prod, unit_square());

        // [0,2] x [0,2] has (2t+1)^2 lattice points; 9 at t = 1
        let seg2 = HPolytope::new(1, vec![(vec![1], 2), (vec![-1], 0)], vec![]).unwrap();
        let sq2 = seg2.product(&seg2);
        let count = (0..=2)
            .flat_map(|x| (0..=2).map(move |y| (x, y)))
            .filter(|&(x, y)| sq2.contains(&[x, y]))
            .count();
        assert_eq!(count, 9);
    }

    #[test]
    fn projections() {
        let tri = triangle_v();
        let p2 = tri.project_keep_first(2).unwrap();
        assert_eq!(p2.dim, 2);
        let p0 = tri.project_keep_first(0).unwrap();
        assert_eq!(p0.points, vec![Vec::<Rat>::new()]);
        let all = tri.project_keep_first(3).unwrap();
        assert_eq!(all.affine_dim(), tri.affine_dim());
    }

    #[test]
    fn affine_dims() {
        assert_eq!(triangle_v().affine_dim(), 2);
        assert_eq!(unit_square().affine_dim().unwrap(), 2);
        // hidden equality: x <= 0 and -x <= 0 pin a segment's coordinate
        let squeezed = HPolytope::new(
            2,
            vec![(vec![1, 0], 0), (vec![-1, 0], 0), (vec![0, 1], 1), (vec![0, -1], 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(squeezed.affine_dim().unwrap(), 1);
        let empty = HPolytope::new(1, vec![(vec![1], -1), (vec![-1], 0)], vec![]).unwrap();
        assert!(matches!(empty.affine_dim(), Err(Error::Infeasible)));
    }

    #[test]
    fn affine_integrality() {
        // slanted line through (0,0) and (4,1): lattice points only every
        // fourth x, so the projection has index 4
        let line = AffineSpan::new(vec![0, 0], vec![vec![4, 1]]).unwrap();
        let res = line.affine_integral();
        assert!(!res.integral);
        assert_eq!(res.image_index, Some(BigInt::from(4)));

        // a coordinate axis is integral
        let axis = AffineSpan::new(vec![0, 0], vec![vec![1, 0]]).unwrap();
        assert!(axis.affine_integral().integral);

        // vertical line: projection drops rank
        let vert = AffineSpan::new(vec![0, 0], vec![vec![0, 1]]).unwrap();
        let res = vert.affine_integral();
        assert!(!res.integral);
        assert_eq!(res.image_index, None);

        // invariant under integer translation
        let moved = AffineSpan::new(vec![7, -3], vec![vec![4, 1]]).unwrap();
        assert_eq!(moved.affine_integral(), line.affine_integral());
    }
}
