//! Cyclic polytopes on the moment curve, higher integrality checks for
//! simplices, and the coefficient assembly for k-integral polytopes: the
//! low coefficients are volumes of coordinate projections, the high ones
//! come from Ehrhart polynomials of lattice slices.

use itertools::Itertools;
use num_traits::Signed;

use crate::engine::{count_v_with_prefix, ehrhart_poly, enumerate_lattice_points};
use crate::error::{Error, Result};
use crate::poly::{interpolate, Poly};
use crate::polytope::{AffineSpan, Polytope, VPolytope};
use crate::rational::{rat_int, Rat};

/// Cyclic polytope `C_d(u_1, ..., u_n)`: convex hull of the moment-curve
/// points `(u, u^2, ..., u^d)`.
pub fn cyclic_polytope(d: usize, u: &[i64]) -> Result<VPolytope> {
    if u.len() <= d {
        return Err(Error::invalid("cyclic polytopes need more than d points"));
    }
    if !u.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::invalid("moment-curve parameters must strictly increase"));
    }
    let points: Vec<Vec<i64>> = u
        .iter()
        .map(|&x| {
            (1..=d)
                .map(|p| {
                    (0..p).try_fold(1i64, |acc, _| acc.checked_mul(x))
                })
                .collect::<Option<Vec<i64>>>()
                .ok_or(Error::MagnitudeLimit)
        })
        .collect::<Result<_>>()?;
    VPolytope::from_integer_points(d, &points)
}

/// k-integrality check for a simplex given by its vertices: every face of
/// dimension at most `k` must have an integral affine hull. Faces of a
/// simplex are exactly the vertex subsets, so the test runs
/// [`AffineSpan::affine_integral`] over all subsets of size `<= k + 1`.
pub fn is_k_integral_simplex(p: &VPolytope, k: usize) -> Result<bool> {
    if let Some(i) = p.non_integral_point() {
        return Err(Error::NonIntegralVertex(i));
    }
    let verts: Vec<Vec<i64>> = p
        .points
        .iter()
        .map(|pt| {
            pt.iter()
                .map(|c| i64::try_from(c.numer()).map_err(|_| Error::MagnitudeLimit))
                .collect()
        })
        .collect::<Result<_>>()?;
    for size in 1..=(k + 1).min(verts.len()) {
        for subset in verts.iter().combinations(size) {
            let pts: Vec<Vec<i64>> = subset.into_iter().cloned().collect();
            let span = AffineSpan::through_points(&pts)?;
            if span.dim() + 1 != size {
                // degenerate subset: not a face of a simplex
                return Err(Error::invalid("vertices are affinely dependent; not a simplex"));
            }
            if span.dim() <= k && !span.affine_integral().integral {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Assemble the Ehrhart polynomial of a `k`-integral polytope `P` (full
/// dimensional in `R^d`):
///
/// * coefficient of `t^l` for `l <= k` is the volume of the projection onto
///   the first `l` coordinates — read off as the leading coefficient of the
///   projection's Ehrhart polynomial;
/// * coefficients above `k` come from `S(t) = sum_y i(slice of P over y, t)`
///   over lattice points `y` of the `k`-dimensional projection, where the
///   slice counts are taken inside `tP` over the prefix `t y`. `S` is a
///   polynomial of degree `d - k`; it is interpolated exactly and validated
///   at one extra node.
///
/// The caller asserts k-integrality (see [`is_k_integral_simplex`]).
pub fn higher_assemble(p: &VPolytope, k: usize) -> Result<Poly> {
    let d = p.dim;
    if p.affine_dim() != d {
        return Err(Error::invalid("assembly expects a full-dimensional polytope"));
    }
    if k > d {
        return Err(Error::invalid("k cannot exceed the dimension"));
    }
    let mut coeffs = vec![Rat::from_integer(0.into()); d + 1];
    for l in 0..=k {
        let proj = Polytope::V(p.project_keep_first(l)?);
        let poly = ehrhart_poly(&proj)?;
        coeffs[l] = poly.coeff(l);
        if poly.degree() != Some(l) && l > 0 {
            return Err(Error::NotEhrhart(format!(
                "projection to {} coordinates is degenerate",
                l
            )));
        }
    }
    if k < d {
        let base_points = enumerate_lattice_points(&p.project_keep_first(k)?)?;
        let slice_dim = d - k;
        let mut nodes = Vec::new();
        for t in 0..=(slice_dim as i64 + 1) {
            let mut total = Rat::from_integer(0.into());
            for y in &base_points {
                let prefix: Vec<i64> = y.iter().map(|&c| c * t).collect();
                total += Rat::from_integer(count_v_with_prefix(p, t, &prefix)?);
            }
            nodes.push((t, total));
        }
        // one spare node validates the polynomiality assumption
        let fit = interpolate(&nodes[..=slice_dim])?;
        let (holdout_t, holdout_v) = &nodes[slice_dim + 1];
        if fit.eval_int(*holdout_t) != *holdout_v {
            return Err(Error::IntegrityCheck(
                "slice sum is not a polynomial of the expected degree; input is not k-integral"
                    .into(),
            ));
        }
        for l in (k + 1)..=d {
            coeffs[l] = fit.coeff(l - k);
        }
    }
    let assembled = Poly::from_coeffs(coeffs);
    if assembled.coeff(0) != rat_int(1) || assembled.leading().is_none_or(|c| !c.is_positive()) {
        return Err(Error::NotEhrhart("assembled polynomial fails sanity checks".into()));
    }
    Ok(assembled)
}
