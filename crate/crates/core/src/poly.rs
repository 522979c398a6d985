//! Dense univariate polynomials in `t` with exact rational coefficients.
//!
//! Coefficients are stored in the monomial basis indexed by power of `t`,
//! with trailing zeros trimmed; the empty vector is the zero polynomial.
//! Basis changes (binomial <-> monomial) are explicit operations so that
//! sign-pattern analysis can read monomial coefficients directly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, rat_int, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    /// Build from coefficients indexed by power of `t`; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&rat_int(x))
    }

    /// Compose with the integer dilation `t -> k t`, i.e. return `p(k t)`.
    pub fn dilate_arg(&self, k: i64) -> Poly {
        let kk = rat_int(k);
        let mut pow = rat_int(1);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &pow;
                pow = &pow * &kk;
                out
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// First derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Monic polynomial with the same roots (unit scaling), zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(rat_int(1) / l)),
        }
    }

    /// All coefficients strictly positive (degree read off the stored length).
    pub fn all_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| c.is_positive())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{} ", a)?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The binomial coefficient `C(t + shift, k)` as an exact polynomial in `t`,
/// i.e. `(t+shift)(t+shift-1)...(t+shift-k+1)/k!`. `k = 0` gives `1`.
pub fn binom_poly(shift: i64, k: usize) -> Poly {
    binom_of_poly(&(&Poly::t() + &Poly::constant(rat_int(shift))), k)
}

/// `C(p, k)` for a polynomial argument `p`.
pub fn binom_of_poly(p: &Poly, k: usize) -> Poly {
    let mut prod = Poly::one();
    for j in 0..k {
        prod = &prod * &(p - &Poly::constant(rat_int(j as i64)));
    }
    prod.scale(&Rat::new(BigInt::one(), factorial(k)))
}

/// The multiset coefficient `((linear; k)) = C(linear + k - 1, k)` for a
/// linear argument; rejects degree >= 2 input.
pub fn multiset_poly(linear: &Poly, k: usize) -> Result<Poly> {
    if let Some(d) = linear.degree() {
        if d > 1 {
            return Err(Error::DegreeTooHigh { expected: 1, got: d });
        }
    }
    Ok(binom_of_poly(
        &(linear + &Poly::constant(rat_int(k as i64 - 1))),
        k,
    ))
}

/// Unique polynomial of degree `< points.len()` through the given
/// `(node, value)` pairs, by exact Newton divided differences.
pub fn interpolate(points: &[(i64, Rat)]) -> Result<Poly> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    for (i, (n, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(m, _)| m == n) {
            return Err(Error::DuplicateNode(*n));
        }
    }
    // divided-difference table
    let mut dd: Vec<Rat> = points.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            let dx = rat_int(points[i].0) - rat_int(points[i - level].0);
            dd[i] = (&dd[i] - &dd[i - 1]) / dx;
        }
    }
    // expand Newton form
    let mut result = Poly::zero();
    let mut basis = Poly::one();
    for (i, c) in dd.iter().enumerate() {
        result = &result + &basis.scale(c);
        if i + 1 < points.len() {
            basis = &basis * &(&Poly::t() - &Poly::constant(rat_int(points[i].0)));
        }
    }
    Ok(result)
}

/// The unique polynomial of degree `k+1` equal to `sum_{i=1}^{t+1} i^k` at
/// every integer `t >= 0`, built by interpolating exact partial sums.
pub fn power_sum_poly(k: usize) -> Poly {
    let mut nodes = Vec::with_capacity(k + 2);
    let mut sum = BigInt::zero();
    for t in 0..=(k as i64 + 1) {
        sum += BigInt::from(t + 1).pow(k as u32);
        nodes.push((t, Rat::from_integer(sum.clone())));
    }
    interpolate(&nodes).expect("distinct nodes")
}

/// Exact gcd of two polynomials over the rationals, returned monic.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.monic()
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let factor = r.leading().unwrap() / &lb;
        let shift = dr - db;
        let mut sub = vec![rat_int(0); shift];
        sub.extend(b.coeffs().iter().map(|c| c * &factor));
        r = &r - &Poly::from_coeffs(sub);
    }
    r
}

/// Square-free part `p / gcd(p, p')`, monic. Used before numeric root
/// finding so that multiple roots do not degrade convergence.
pub fn square_free_part(p: &Poly) -> Poly {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.monic();
    }
    poly_div_exact(p, &g).monic()
}

fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut q = vec![rat_int(0); a.coeffs().len().saturating_sub(db)];
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let factor = r.leading().unwrap() / &lb;
        let shift = dr - db;
        q[shift] = factor.clone();
        let mut sub = vec![rat_int(0); shift];
        sub.extend(b.coeffs().iter().map(|c| c * &factor));
        r = &r - &Poly::from_coeffs(sub);
    }
    debug_assert!(r.is_zero(), "non-exact polynomial division");
    Poly::from_coeffs(q)
}
