//! The ground-truth counting oracle: exact lattice-point counts of dilates,
//! Ehrhart polynomials by interpolation, and the h*-transform in both
//! directions.
//!
//! Counting is a depth-first enumeration over coordinates in lexicographic
//! order. H-forms are pruned by iterated integer interval propagation through
//! the inequality system (exact LP tightening near the root, where it pays);
//! V-forms are pruned by exact rational LPs on hull slices. At the last
//! coordinate the feasible set is an exact interval, so whole runs are added
//! at once. Subtree counts combine by addition only, so the result is
//! deterministic and independent of the number of workers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{binom_poly, interpolate, Poly};
use crate::polytope::{HPolytope, Polytope, VPolytope};
use crate::rational::{binomial, ceil_int, floor_int, rat_int, Rat};

/// Coefficient vector `(h*_0, ..., h*_d)` of the h*-polynomial of a
/// `d`-dimensional integral polytope. Entries are nonnegative integers with
/// `h*_0 = 1` (Stanley nonnegativity); trailing entries may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStarVector {
    entries: Vec<BigInt>,
    dim: usize,
}

impl HStarVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("h*-vector cannot be empty"));
        }
        if !entries[0].is_one() {
            return Err(Error::invalid("h*_0 must be 1"));
        }
        if let Some(i) = entries.iter().position(|e| e.is_negative()) {
            return Err(Error::InvalidHStar(i));
        }
        let dim = entries.len() - 1;
        Ok(HStarVector { entries, dim })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        HStarVector::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Dimension `d` of the underlying polytope.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest index with a nonzero entry.
    pub fn degree(&self) -> usize {
        self.entries
            .iter()
            .rposition(|e| !e.is_zero())
            .unwrap_or(0)
    }

    /// `d + 1 - degree`, the smallest dilation with an interior lattice point.
    pub fn codegree(&self) -> usize {
        self.dim + 1 - self.degree()
    }

    /// The h*-polynomial `sum h*_i z^i` as an exact polynomial in `z`.
    pub fn z_poly(&self) -> Poly {
        Poly::from_coeffs(
            self.entries
                .iter()
                .map(|e| Rat::from_integer(e.clone()))
                .collect(),
        )
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

/// `i(P, t) = |tP intersect Z^D|`, exactly.
pub fn count_points(p: &Polytope, t: i64) -> Result<BigInt> {
    if t < 0 {
        return Err(Error::invalid("dilation factor must be nonnegative"));
    }
    match p {
        Polytope::H(h) => count_h(h, t),
        Polytope::V(v) => count_v(v, t),
    }
}

/// Lattice points in the relative interior of the H-polytope: equalities
/// exact, inequalities strict. Over the integers a strict integer row
/// `a.x < b` is exactly `a.x <= b - 1`, so interior counting reuses the
/// ordinary engine on the shifted system. Requires a facet-irredundant
/// system with implicit equalities declared as equalities.
pub fn count_interior(p: &HPolytope) -> Result<BigInt> {
    let strictened = HPolytope {
        dim: p.dim,
        inequalities: p
            .inequalities
            .iter()
            .map(|(a, b)| (a.clone(), b - 1))
            .collect(),
        equalities: p.equalities.clone(),
    };
    count_h(&strictened, 1)
}

/// Ehrhart polynomial of an integral polytope, by exact interpolation of
/// counts at `t = 0 .. affine_dim(P)`. The count at dilation zero is
/// computed, not assumed; a mismatch or a failed degree / constant-term /
/// leading-coefficient check signals non-integral input.
pub fn ehrhart_poly(p: &Polytope) -> Result<Poly> {
    if let Polytope::V(v) = p {
        if let Some(i) = v.non_integral_point() {
            return Err(Error::NonIntegralVertex(i));
        }
    }
    let d = p.affine_dim()?;
    let c0 = count_points(p, 0)?;
    if !c0.is_one() {
        return Err(Error::DilationZeroMismatch(c0));
    }
    let mut nodes = vec![(0i64, rat_int(1))];
    for t in 1..=(d as i64) {
        nodes.push((t, Rat::from_integer(count_points(p, t)?)));
    }
    let poly = interpolate(&nodes)?;
    if poly.degree() != Some(d) && d > 0 {
        return Err(Error::NotEhrhart(format!(
            "degree {:?} does not match affine dimension {}",
            poly.degree(),
            d
        )));
    }
    if poly.coeff(0) != rat_int(1) {
        return Err(Error::NotEhrhart("constant term is not 1".into()));
    }
    if !poly.leading().is_some_and(|l| l.is_positive()) {
        return Err(Error::NotEhrhart("leading coefficient is not positive".into()));
    }
    Ok(poly)
}

/// Unique coefficients of `p` in the basis `C(t + d - j, d)`, `j = 0..d`:
/// `h*_j = sum_{i=0}^{j} (-1)^i C(d+1, i) p(j - i)`. Errors when an entry
/// comes out negative or non-integral, which signals invalid input.
pub fn hstar_from_ehrhart(p: &Poly, d: usize) -> Result<HStarVector> {
    if p.degree() != Some(d) && !(d == 0 && p.degree().is_none()) {
        return Err(Error::invalid(format!(
            "polynomial degree {:?} does not match dimension {}",
            p.degree(),
            d
        )));
    }
    let dd = BigInt::from(d as i64 + 1);
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut h = rat_int(0);
        for i in 0..=j {
            let c = Rat::from_integer(binomial(&dd, i));
            let term = c * p.eval_int((j - i) as i64);
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        if !h.denom().is_one() || h.numer().is_negative() {
            return Err(Error::InvalidHStar(j));
        }
        entries.push(h.numer().clone());
    }
    HStarVector::new(entries)
}

/// Inverse transform: `i(P, t) = sum_j h*_j C(t + d - j, d)`.
pub fn ehrhart_from_hstar(h: &HStarVector) -> Poly {
    let d = h.dim();
    let mut p = Poly::zero();
    for (j, e) in h.entries().iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        p = &p + &binom_poly(d as i64 - j as i64, d).scale(&Rat::from_integer(e.clone()));
    }
    p
}

/// Verify that the power series of `h*(z) / (1-z)^(d+1)` reproduces the
/// counting function for `t = 0..order`.
pub fn ehrhart_series_check(p: &Polytope, order: i64) -> Result<bool> {
    let d = p.affine_dim()?;
    if order < d as i64 + 2 {
        return Err(Error::invalid("series check needs order >= d + 2"));
    }
    let poly = ehrhart_poly(p)?;
    let h = hstar_from_ehrhart(&poly, d)?;
    for t in 0..=order {
        let mut series_coeff = BigInt::zero();
        for (j, e) in h.entries().iter().enumerate() {
            series_coeff += e * binomial(&BigInt::from(t + d as i64 - j as i64), d);
        }
        if series_coeff != count_points(p, t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Count lattice points of `tP` whose leading coordinates equal `prefix`
/// (the slice of the dilate over a fixed prefix). V-form only; used by the
/// higher-integrality assembly.
pub fn count_v_with_prefix(p: &VPolytope, t: i64, prefix: &[i64]) -> Result<BigInt> {
    let dilated = p.dilate(t);
    if prefix.len() > p.dim {
        return Err(Error::invalid("prefix longer than ambient dimension"));
    }
    if prefix.len() == p.dim {
        let pt: Vec<Rat> = prefix.iter().map(|&v| rat_int(v)).collect();
        return Ok(BigInt::from(dilated.contains_hull(&pt) as i64));
    }
    let total = dfs_v(&dilated, prefix.iter().map(|&v| rat_int(v)).collect())?;
    Ok(BigInt::from(total))
}

/// All lattice points of the hull, in lexicographic order. Intended for
/// small slices and projections.
pub fn enumerate_lattice_points(p: &VPolytope) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_v(p, &mut prefix, &mut out)?;
    Ok(out)
}

fn collect_v(p: &VPolytope, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) -> Result<()> {
    let depth = prefix.len();
    if depth == p.dim {
        out.push(prefix.clone());
        return Ok(());
    }
    let rat_prefix: Vec<Rat> = prefix.iter().map(|&v| rat_int(v)).collect();
    let Some((lo, hi)) = p.coord_range(&rat_prefix, depth)? else {
        return Ok(());
    };
    let (lo, hi) = (int_range_from(&lo)?, int_range_to(&hi)?);
    for v in lo..=hi {
        prefix.push(v);
        if depth == p.dim - 1 {
            // slices over full prefixes are intervals: no membership re-test
            out.push(prefix.clone());
        } else {
            collect_v(p, prefix, out)?;
        }
        prefix.pop();
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// H-form counting: integer interval propagation with LP tightening
// ---------------------------------------------------------------------------

/// Guards for the i128 fast path: with |coeff| < 2^31, |rhs| < 2^51 and
/// propagated bounds clamped to 2^80, every row sum stays far below i128
/// overflow for ambient dimensions up to 64.
const COEFF_LIMIT: i64 = 1 << 31;
const RHS_LIMIT: i128 = 1 << 51;
const BOUND_LIMIT: i128 = 1 << 80;

/// Depth (exclusive) up to which coordinate ranges are additionally
/// tightened by exact LP; node counts near the root are small and the
/// tightening prunes whole subtrees.
const LP_TIGHTEN_DEPTH: usize = 2;

#[derive(Clone)]
struct IntRow {
    coeffs: Vec<i128>,
    rhs: i128,
}

struct HCounter {
    dim: usize,
    rows: Vec<IntRow>,
    dilated: HPolytope,
}

#[derive(Clone)]
struct Bounds {
    lo: Vec<Option<i128>>,
    hi: Vec<Option<i128>>,
}

enum Prop {
    Feasible,
    Empty,
}

fn count_h(p: &HPolytope, t: i64) -> Result<BigInt> {
    for (a, b) in p.inequalities.iter().chain(p.equalities.iter()) {
        if a.iter().any(|&c| c.abs() >= COEFF_LIMIT) {
            return Err(Error::MagnitudeLimit);
        }
        let rb = *b as i128 * t as i128;
        if rb.abs() >= RHS_LIMIT {
            return Err(Error::MagnitudeLimit);
        }
    }
    let dilated = p.dilate(t);
    if p.dim == 0 {
        let feasible = dilated.inequalities.iter().all(|(_, b)| *b >= 0)
            && dilated.equalities.iter().all(|(_, b)| *b == 0);
        return Ok(BigInt::from(feasible as i64));
    }
    let mut rows = Vec::new();
    for (a, b) in &dilated.inequalities {
        rows.push(IntRow {
            coeffs: a.iter().map(|&c| c as i128).collect(),
            rhs: *b as i128,
        });
    }
    for (a, b) in &dilated.equalities {
        rows.push(IntRow {
            coeffs: a.iter().map(|&c| c as i128).collect(),
            rhs: *b as i128,
        });
        rows.push(IntRow {
            coeffs: a.iter().map(|&c| -(c as i128)).collect(),
            rhs: -(*b as i128),
        });
    }
    let counter = HCounter { dim: p.dim, rows, dilated };

    let mut bounds = Bounds {
        lo: vec![None; p.dim],
        hi: vec![None; p.dim],
    };
    if let Prop::Empty = propagate(&counter.rows, &mut bounds) {
        return Ok(BigInt::zero());
    }
    // root bounds: exact LP per coordinate, intersected with propagation
    for j in 0..p.dim {
        match counter.dilated.coord_range(&[], j)? {
            None => return Ok(BigInt::zero()),
            Some((lo, hi)) => {
                tighten_from_rat(&mut bounds, j, &lo, &hi)?;
            }
        }
    }
    let (lo0, hi0) = (bounds.lo[0].unwrap(), bounds.hi[0].unwrap());
    if lo0 > hi0 {
        return Ok(BigInt::zero());
    }
    let total: u128 = (lo0..=hi0)
        .into_par_iter()
        .map(|v| {
            let mut child = bounds.clone();
            child.lo[0] = Some(v);
            child.hi[0] = Some(v);
            match propagate(&counter.rows, &mut child) {
                Prop::Empty => Ok(0u128),
                Prop::Feasible => counter.dfs(1, child),
            }
        })
        .try_reduce(|| 0u128, |a, b| Ok(a + b))?;
    Ok(BigInt::from(total))
}

fn tighten_from_rat(bounds: &mut Bounds, j: usize, lo: &Rat, hi: &Rat) -> Result<()> {
    let li = int_from_big(ceil_int(lo))?;
    let hi_ = int_from_big(floor_int(hi))?;
    bounds.lo[j] = Some(bounds.lo[j].map_or(li, |cur| cur.max(li)));
    bounds.hi[j] = Some(bounds.hi[j].map_or(hi_, |cur| cur.min(hi_)));
    Ok(())
}

fn int_from_big(b: BigInt) -> Result<i128> {
    i128::try_from(&b)
        .ok()
        .filter(|v| v.abs() < BOUND_LIMIT)
        .ok_or(Error::MagnitudeLimit)
}

impl HCounter {
    fn dfs(&self, depth: usize, bounds: Bounds) -> Result<u128> {
        debug_assert!(depth >= 1);
        if depth == self.dim {
            return Ok(1);
        }
        let mut bounds = bounds;
        if depth < LP_TIGHTEN_DEPTH {
            let prefix: Vec<i64> = (0..depth)
                .map(|k| i64::try_from(bounds.lo[k].unwrap()).map_err(|_| Error::MagnitudeLimit))
                .collect::<Result<_>>()?;
            match self.dilated.coord_range(&prefix, depth)? {
                None => return Ok(0),
                Some((lo, hi)) => tighten_from_rat(&mut bounds, depth, &lo, &hi)?,
            }
        }
        let (Some(lo), Some(hi)) = (bounds.lo[depth], bounds.hi[depth]) else {
            return Err(Error::Unbounded(depth));
        };
        if lo > hi {
            return Ok(0);
        }
        // at the last coordinate the propagated interval is exact: every row
        // has no other free variable left
        if depth == self.dim - 1 {
            return Ok((hi - lo + 1) as u128);
        }
        let mut total = 0u128;
        for v in lo..=hi {
            let mut child = bounds.clone();
            child.lo[depth] = Some(v);
            child.hi[depth] = Some(v);
            if let Prop::Feasible = propagate(&self.rows, &mut child) {
                total += self.dfs(depth + 1, child)?;
            }
        }
        Ok(total)
    }
}

/// Iterated interval propagation to a fixpoint (with a sweep cap; capping is
/// sound, it can only leave the interval looser). Never excludes a feasible
/// point: every derived bound is implied by one row plus current bounds.
fn propagate(rows: &[IntRow], bounds: &mut Bounds) -> Prop {
    const MAX_SWEEPS: usize = 24;
    for _ in 0..MAX_SWEEPS {
        let mut changed = false;
        for row in rows {
            // minimal achievable value of the row's lhs, tracking variables
            // whose contribution is unbounded below
            let mut min_sum: i128 = 0;
            let mut unbounded: usize = 0;
            let mut unbounded_var = usize::MAX;
            for (k, &c) in row.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let contrib = if c > 0 {
                    bounds.lo[k].map(|l| c * l)
                } else {
                    bounds.hi[k].map(|h| c * h)
                };
                match contrib {
                    Some(v) => min_sum += v,
                    None => {
                        unbounded += 1;
                        unbounded_var = k;
                    }
                }
            }
            match unbounded {
                0 => {
                    if min_sum > row.rhs {
                        return Prop::Empty;
                    }
                    for (k, &c) in row.coeffs.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let own = if c > 0 {
                            c * bounds.lo[k].unwrap()
                        } else {
                            c * bounds.hi[k].unwrap()
                        };
                        let slack = row.rhs - (min_sum - own);
                        changed |= apply_bound(bounds, k, c, slack);
                    }
                }
                1 => {
                    let k = unbounded_var;
                    let slack = row.rhs - min_sum;
                    changed |= apply_bound(bounds, k, row.coeffs[k], slack);
                }
                _ => {}
            }
        }
        if infeasible(bounds) {
            return Prop::Empty;
        }
        if !changed {
            break;
        }
    }
    if infeasible(bounds) {
        Prop::Empty
    } else {
        Prop::Feasible
    }
}

fn infeasible(bounds: &Bounds) -> bool {
    bounds
        .lo
        .iter()
        .zip(&bounds.hi)
        .any(|(l, h)| matches!((l, h), (Some(l), Some(h)) if l > h))
}

/// Tighten `c * x_k <= slack` into the bound store; returns whether a bound
/// strictly improved. Bounds beyond the clamp are treated as unknown.
fn apply_bound(bounds: &mut Bounds, k: usize, c: i128, slack: i128) -> bool {
    if c > 0 {
        let limit = slack.div_euclid(c);
        if limit.abs() >= BOUND_LIMIT {
            return false;
        }
        if bounds.hi[k].is_none_or(|h| limit < h) {
            bounds.hi[k] = Some(limit);
            return true;
        }
    } else {
        let c = -c;
        let limit = (-slack).div_euclid(c) + i128::from((-slack).rem_euclid(c) != 0);
        if limit.abs() >= BOUND_LIMIT {
            return false;
        }
        if bounds.lo[k].is_none_or(|l| limit > l) {
            bounds.lo[k] = Some(limit);
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// V-form counting: LP-pruned enumeration over hull slices
// ---------------------------------------------------------------------------

fn count_v(p: &VPolytope, t: i64) -> Result<BigInt> {
    let dilated = p.dilate(t);
    if p.dim == 0 {
        return Ok(BigInt::one());
    }
    let Some((lo, hi)) = dilated.coord_range(&[], 0)? else {
        return Ok(BigInt::zero());
    };
    let (lo, hi) = (int_range_from(&lo)?, int_range_to(&hi)?);
    if lo > hi {
        return Ok(BigInt::zero());
    }
    let total: u128 = (lo..=hi)
        .into_par_iter()
        .map(|v| dfs_v(&dilated, vec![rat_int(v)]))
        .try_reduce(|| 0u128, |a, b| Ok(a + b))?;
    Ok(BigInt::from(total))
}

fn dfs_v(p: &VPolytope, prefix: Vec<Rat>) -> Result<u128> {
    let depth = prefix.len();
    if depth == p.dim {
        return Ok(1);
    }
    let Some((lo, hi)) = p.coord_range(&prefix, depth)? else {
        return Ok(0);
    };
    let (lo, hi) = (int_range_from(&lo)?, int_range_to(&hi)?);
    if lo > hi {
        return Ok(0);
    }
    // the slice over a full prefix is an interval, so the final coordinate
    // contributes a whole run of lattice points
    if depth == p.dim - 1 {
        return Ok((hi - lo + 1) as u128);
    }
    let mut total = 0u128;
    for v in lo..=hi {
        let mut next = prefix.clone();
        next.push(rat_int(v));
        total += dfs_v(p, next)?;
    }
    Ok(total)
}

fn int_range_from(lo: &Rat) -> Result<i64> {
    i64::try_from(&ceil_int(lo)).map_err(|_| Error::MagnitudeLimit)
}

fn int_range_to(hi: &Rat) -> Result<i64> {
    i64::try_from(&floor_int(hi)).map_err(|_| Error::MagnitudeLimit)
}
