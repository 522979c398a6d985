//! Analysis of a computed Ehrhart polynomial and its h*-vector: sign
//! patterns of the middle coefficients, exact reflexivity and Gorenstein
//! tests via the sum of roots, palindromicity and unimodality of h*, and
//! the advisory numeric root checks (negative real parts, unit circle).
//!
//! Exact verdicts are always computed two independent ways — the Vieta-style
//! root-sum test against h*-palindromicity — and a disagreement is a hard
//! error rather than a tie-break.

use num_traits::Signed;

use crate::engine::HStarVector;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{rat, rat_int, to_integer, Rat};
use crate::roots::complex_roots;

pub const DEFAULT_ROOT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_positive() {
            Sign::Plus
        } else if r.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }
}

/// Everything the analysis pipeline reports about one polynomial / h* pair.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    /// Signs of the middle coefficients `t^1 .. t^(d-2)` (empty for d <= 2).
    pub sign_pattern: Vec<Sign>,
    /// All `d+1` coefficients strictly positive.
    pub ehrhart_positive: bool,
    pub sum_of_roots: Rat,
    /// Reflexive up to unimodular equivalence (Gorenstein with s = 1).
    pub reflexive: bool,
    /// Codegree `s` when the polytope is Gorenstein up to unimodular
    /// equivalence, `None` otherwise.
    pub gorenstein_s: Option<u64>,
    pub hstar_palindromic: bool,
    pub hstar_unimodal: bool,
    /// Negative-real-part-rooted, at tolerance [`DEFAULT_ROOT_TOL`]; `None`
    /// when the numeric root finder did not converge.
    pub nrpr: Option<bool>,
}

/// Exact sum of the roots of `p` by Vieta: `-c_(d-1) / c_d`.
pub fn sum_of_roots(p: &Poly) -> Result<Rat> {
    match p.degree() {
        None | Some(0) => Err(Error::ZeroPolynomial),
        Some(d) => Ok(-(p.coeff(d - 1) / p.coeff(d))),
    }
}

/// Gorenstein test up to unimodular equivalence: the `d` roots of the
/// Ehrhart polynomial sum to `-s d / 2` for a positive integer `s`, and
/// that `s` is the codegree.
pub fn gorenstein_test(p: &Poly, d: usize) -> Result<(bool, Option<u64>)> {
    if d == 0 {
        return Ok((true, Some(1)));
    }
    let s = sum_of_roots(p)? * rat(-2, d as i64);
    match to_integer(&s) {
        Some(n) if n.is_positive() => {
            let s = u64::try_from(&n).map_err(|_| Error::MagnitudeLimit)?;
            Ok((true, Some(s)))
        }
        _ => Ok((false, None)),
    }
}

/// Palindromicity of the nonzero prefix `h*_0 .. h*_deg` (Stanley's
/// characterization of Gorenstein polytopes).
pub fn hstar_palindromic(h: &HStarVector) -> bool {
    let deg = h.degree();
    let e = h.entries();
    (0..=deg).all(|i| e[i] == e[deg - i])
}

/// `codeg(P) = dim(P) + 1 - deg h*`.
pub fn codegree(h: &HStarVector) -> usize {
    h.codegree()
}

pub fn hstar_unimodal(h: &HStarVector) -> bool {
    let e = h.entries();
    let peak = (0..e.len()).fold(0, |best, i| if e[i] >= e[best] { i } else { best });
    e.windows(2).enumerate().all(|(i, w)| {
        if i < peak {
            w[0] <= w[1]
        } else {
            w[0] >= w[1]
        }
    })
}

/// Do all complex roots of the h*-polynomial lie on the unit circle, within
/// `tol`? Numeric and advisory; convergence failure is an error.
pub fn hstar_unit_circle_rooted(h: &HStarVector, tol: f64) -> Result<bool> {
    let roots = complex_roots(&h.z_poly())?;
    Ok(roots.iter().all(|z| (z.norm() - 1.0).abs() < tol))
}

/// Negative-real-part-rooted check: every root of `p` has real part
/// `< -tol`. Such polynomials have positive coefficients, so a non-positive
/// coefficient settles the answer exactly without numeric roots (after
/// normalizing the sign of the leading coefficient).
pub fn nrpr_check(p: &Poly, tol: f64) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let monic_signs = if p.leading().unwrap().is_negative() {
        -p
    } else {
        p.clone()
    };
    let d = monic_signs.degree().unwrap();
    if (0..=d).any(|i| !monic_signs.coeff(i).is_positive()) {
        return Ok(false);
    }
    let roots = complex_roots(p)?;
    Ok(roots.iter().all(|z| z.re < -tol))
}

/// Full analysis of an Ehrhart polynomial and its h*-vector. The exact
/// Gorenstein verdicts from the root-sum test and from h*-palindromicity
/// must agree (including the codegree); disagreement is an integrity error.
pub fn analyze(p: &Poly, h: &HStarVector) -> Result<AnalysisReport> {
    let d = h.dim();
    if p.degree() != Some(d) {
        return Err(Error::invalid(format!(
            "polynomial degree {:?} does not match h* dimension {}",
            p.degree(),
            d
        )));
    }
    let sign_pattern: Vec<Sign> = (1..d.saturating_sub(1))
        .map(|i| Sign::of(&p.coeff(i)))
        .collect();
    let ehrhart_positive = (0..=d).all(|i| p.coeff(i).is_positive());
    if ehrhart_positive {
        debug_assert!(sign_pattern.iter().all(|s| *s == Sign::Plus));
    }
    let sum = if d == 0 { rat_int(0) } else { sum_of_roots(p)? };

    let (vieta_gorenstein, s) = gorenstein_test(p, d)?;
    let palindromic = hstar_palindromic(h);
    if vieta_gorenstein != palindromic {
        return Err(Error::IntegrityCheck(format!(
            "root-sum Gorenstein test ({}) vs h* palindromicity ({})",
            vieta_gorenstein, palindromic
        )));
    }
    if let Some(s) = s {
        if s as usize != h.codegree() {
            return Err(Error::IntegrityCheck(format!(
                "root-sum codegree {} vs h* codegree {}",
                s,
                h.codegree()
            )));
        }
    }
    let reflexive = s == Some(1);

    let nrpr = if d == 0 {
        Some(true) // vacuous: no roots
    } else {
        match nrpr_check(p, DEFAULT_ROOT_TOL) {
            Ok(v) => Some(v),
            Err(Error::RootFindingStalled) => None,
            Err(e) => return Err(e),
        }
    };
    if nrpr == Some(true) && !ehrhart_positive {
        return Err(Error::IntegrityCheck(
            "NRPR holds but a coefficient is not positive".into(),
        ));
    }

    Ok(AnalysisReport {
        sign_pattern,
        ehrhart_positive,
        sum_of_roots: sum,
        reflexive,
        gorenstein_s: s,
        hstar_palindromic: palindromic,
        hstar_unimodal: hstar_unimodal(h),
        nrpr,
    })
}

/// Convenience: analysis from the polynomial alone, deriving h* first.
pub fn analyze_poly(p: &Poly) -> Result<AnalysisReport> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let h = crate::engine::hstar_from_ehrhart(p, d)?;
    analyze(p, &h)
}
