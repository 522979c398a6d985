//! Numeric location of polynomial roots, used only for the advisory
//! negative-real-part and unit-circle checks. Exact claims never depend on
//! these values.
//!
//! The input is first reduced to its square-free part with exact rational
//! gcds, so the Durand-Kerner iteration only ever sees simple roots and
//! converges quadratically. Convergence is certified by a backward-error
//! residual on the monic polynomial; a stalled iteration is reported as an
//! error, never as a verdict.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{square_free_part, Poly};

const MAX_ITERATIONS: usize = 2000;
const RESIDUAL_BOUND: f64 = 1e-12;

/// All distinct complex roots of `p` (multiplicities collapsed).
pub fn complex_roots(p: &Poly) -> Result<Vec<Complex64>> {
    let reduced = square_free_part(p);
    let deg = reduced.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let coeffs: Vec<f64> = reduced
        .coeffs()
        .iter()
        .map(|c| c.to_f64().ok_or(Error::RootFindingStalled))
        .collect::<Result<_>>()?;
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::RootFindingStalled);
    }

    // monic normalization
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };

    // standard staggered initial guesses on a spiral
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                // collision of iterates; nudge and continue
                roots[i] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + roots[i].norm()));
        }
        if max_step < 1e-14 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootFindingStalled);
    }

    // backward-error certificate: |p(z)| relative to the coefficient scale
    // at z must be tiny for every root
    for z in &roots {
        let scale: f64 = monic
            .iter()
            .enumerate()
            .map(|(k, c)| c.abs() * z.norm().powi(k as i32))
            .sum::<f64>()
            .max(1.0);
        if eval(*z).norm() > RESIDUAL_BOUND * scale {
            return Err(Error::RootFindingStalled);
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_products_of_linear_factors() {
        // (t+1)(t+2)(t+3)
        let p = Poly::from_i64_coeffs(&[6, 11, 6, 1]);
        let mut roots = complex_roots(&p).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_eq!(roots.len(), 3);
        for (r, expect) in roots.iter().zip([-3.0, -2.0, -1.0]) {
            assert!((r.re - expect).abs() < 1e-9 && r.im.abs() < 1e-9);
        }
    }

    #[test]
    fn multiple_roots_are_collapsed_exactly() {
        // (t+1)^4: the square-free reduction leaves a single simple root
        let lin = Poly::from_i64_coeffs(&[1, 1]);
        let p = &(&lin * &lin) * &(&lin * &lin);
        let roots = complex_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re + 1.0).abs() < 1e-12);
        assert!(roots[0].im.abs() < 1e-12);
    }

    #[test]
    fn unit_circle_roots() {
        // 1 + z + z^2: primitive cube roots of unity
        let p = Poly::from_i64_coeffs(&[1, 1, 1]);
        let roots = complex_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r.norm() - 1.0).abs() < 1e-12);
            assert!((r.re + 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(complex_roots(&Poly::one()).unwrap().is_empty());
    }
}
