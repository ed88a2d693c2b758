//! Exact-arithmetic toolkit for tropical polynomials with rational exponents.
//!
//! Everything here works over the min-plus semiring: `⊕` is `min`, `⊗` is
//! classical addition, and a tropical monomial `a ⊗ x^{⊗I}` is the affine
//! function `a + I·x`. All scalars are exact rationals; there is no floating
//! point anywhere in a computation path, so ties ("the minimum is attained at
//! least twice") are decided by exact equality.
//!
//! Module map:
//! - [`rat`]: the rational scalar and its text form.
//! - [`poly`]: tropical monomials and polynomials, polynomials in a
//!   distinguished indeterminate `y`, affine functions.
//! - [`lp`]: exact simplex over the rationals and strict-feasibility queries.
//! - [`geom`]: polyhedra, sign partitions, tropical prevarieties, functional
//!   reduction and equality, 1-skeleton extraction.
//! - [`resolve`]: resolutions of tropical hypersurfaces (verification, minimal
//!   formulas, candidate enumeration, a brute-force oracle).
//! - [`divide`]: divisibility of tropical Laurent polynomials.
//! - [`curve`]: univariate piecewise-linear functions, curve models, the
//!   resolution graph, and rational-function resolution of curves.
//! - [`sat`]: the 3-SAT reduction to resolubility of tropical systems.

pub mod curve;
pub mod divide;
pub mod geom;
mod linalg;
pub mod lp;
pub mod poly;
pub mod rat;
pub mod resolve;
pub mod sat;

pub use poly::{AffineFunc, Monomial, NpPoly, PolyInY};
pub use rat::Rat;
