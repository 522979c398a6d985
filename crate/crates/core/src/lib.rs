//! Exact lattice-point enumeration for integral polytopes.
//!
//! Everything here is computed in exact rational arithmetic: Ehrhart
//! polynomials are recovered by interpolating exact lattice-point counts of
//! dilates, h*-vectors are obtained by exact basis change, and every
//! closed-form family formula (cubes, simplices, cross-polytopes,
//! Pitman-Stanley and flow polytopes, zonotopes, order polytopes, ...) can be
//! cross-checked against the brute-force counting engine. Floating point
//! appears only in the advisory root-location checks of [`positivity`].
//!
//! The crate is organised as:
//!
//! * [`rational`], [`poly`] — arbitrary-precision rationals and dense exact
//!   univariate polynomials (binomial-basis builders, Lagrange interpolation).
//! * [`lp`] — a small exact-rational two-phase simplex used for hull
//!   membership and coordinate-range queries.
//! * [`lattice`] — integer-matrix utilities (Hermite forms, kernels,
//!   saturations, gcd-of-minors).
//! * [`polytope`] — H- and V-representations, membership, dilation, products,
//!   Minkowski sums, projections, affine integrality.
//! * [`engine`] — the counting oracle and the Ehrhart/h* transforms.
//! * [`families`] — constructors and closed forms for the catalogued polytope
//!   families, including the known non-Ehrhart-positive examples.
//! * [`hives`] — Littlewood-Richardson coefficients via hive counting and
//!   stretched-coefficient polynomial fits.
//! * [`positivity`] — sign patterns, reflexivity/Gorenstein tests, root-based
//!   checks on computed polynomials.

#![allow(clippy::needless_range_loop)]

pub mod engine;
pub mod error;
pub mod families;
pub mod hives;
pub mod lattice;
pub mod lp;
pub mod poly;
pub mod polytope;
pub mod positivity;
pub mod rational;
pub mod roots;

pub use engine::{count_interior, count_points, ehrhart_poly, HStarVector};
pub use error::{Error, Result};
pub use poly::Poly;
pub use polytope::{HPolytope, Polytope, VPolytope};
pub use rational::Rat;
