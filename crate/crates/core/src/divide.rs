//! Divisibility of tropical (Laurent) polynomials: decide whether
//! `f_1 ⊗ y = f_0` for some Laurent polynomial `y` and produce the unique
//! reduced quotient.
//!
//! Both inputs are reduced first. Candidate exponents of the quotient are
//! differences `exps(B) - exps(C)` over monomial pairs of the reduced inputs
//! (complete by the coincidence equations with degrees 0 and 1). For each
//! candidate exponent the minimal admissible coefficient is the largest
//! `a_I` keeping every shifted monomial of `f_1` above the graph of `f_0`,
//! an LP maximum of a concave piecewise-linear function minus an affine one.

use crate::geom::{reduce_poly, GeomError, LinConstraint};
use crate::lp::{lp_solve, LpStatus, Sense};
use crate::poly::{AffineFunc, Monomial, NpPoly, PolyError};
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivideError {
    /// Division is defined for integer (Laurent) exponents.
    NonIntegerExponent,
    Poly(PolyError),
    Geom(GeomError),
}

impl fmt::Display for DivideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivideError::NonIntegerExponent => {
                write!(f, "division requires integer exponents")
            }
            DivideError::Poly(e) => write!(f, "{e}"),
            DivideError::Geom(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DivideError {}

impl From<PolyError> for DivideError {
    fn from(e: PolyError) -> Self {
        DivideError::Poly(e)
    }
}

impl From<GeomError> for DivideError {
    fn from(e: GeomError) -> Self {
        DivideError::Geom(e)
    }
}

/// `max_x [f0(x) - shift(x)]`: `None` when unbounded above.
fn max_above(f0: &NpPoly, shift: &AffineFunc) -> Result<Option<Rat>, DivideError> {
    let n = f0.arity();
    // variables (x, t), maximize t subject to t <= piece(x) - shift(x)
    let mut constraints = Vec::with_capacity(f0.monomials().len());
    for b in f0.monomials() {
        let diff = b.as_affine().sub(shift);
        let mut gradient = diff.gradient.clone();
        gradient.push(-Rat::one());
        constraints.push(LinConstraint::ge(AffineFunc::new(diff.constant, gradient)));
    }
    let mut obj_gradient = vec![Rat::zero(); n + 1];
    obj_gradient[n] = Rat::one();
    let objective = AffineFunc::new(Rat::zero(), obj_gradient);
    Ok(match lp_solve(&constraints, &objective, Sense::Maximize)? {
        LpStatus::Optimal { value, .. } => Some(value),
        LpStatus::Unbounded => None,
        LpStatus::Infeasible => unreachable!("t can always decrease"),
    })
}

/// Tests divisibility `f1 ⊗ y = f0` over Laurent polynomials and returns the
/// unique reduced quotient when it exists.
pub fn divide(f0: &NpPoly, f1: &NpPoly) -> Result<Option<NpPoly>, DivideError> {
    if f0.arity() != f1.arity() {
        return Err(PolyError::ArityMismatch { expected: f0.arity(), found: f1.arity() }.into());
    }
    if !f0.has_integer_exponents() || !f1.has_integer_exponents() {
        return Err(DivideError::NonIntegerExponent);
    }
    let f0 = reduce_poly(f0);
    let f1 = reduce_poly(f1);

    // candidate quotient exponents, deduplicated in encounter order
    let mut exps_candidates: Vec<Vec<Rat>> = Vec::new();
    for b in f0.monomials() {
        for c in f1.monomials() {
            let i: Vec<Rat> = b.exps.iter().zip(&c.exps).map(|(u, v)| u - v).collect();
            if !exps_candidates.contains(&i) {
                exps_candidates.push(i);
            }
        }
    }

    // minimal a_I: every shifted monomial of f1 stays above the graph of f0
    let mut quotient_monomials: Vec<Monomial> = Vec::new();
    'candidates: for i in &exps_candidates {
        let mut a_i: Option<Rat> = None;
        for c in f1.monomials() {
            let shift = AffineFunc::new(
                c.coeff.clone(),
                c.exps.iter().zip(i).map(|(u, v)| u + v).collect(),
            );
            match max_above(&f0, &shift)? {
                None => continue 'candidates,
                Some(v) => {
                    if a_i.as_ref().is_none_or(|cur| v > *cur) {
                        a_i = Some(v);
                    }
                }
            }
        }
        quotient_monomials.push(Monomial::new(a_i.expect("f1 is nonempty"), i.clone()));
    }
    if quotient_monomials.is_empty() {
        return Ok(None);
    }
    let y = NpPoly::new(f0.arity(), quotient_monomials)?;

    // accept iff every monomial of the reduced f0 is realized by a composite
    for b in f0.monomials() {
        let realized = y.monomials().iter().any(|q| {
            f1.monomials().iter().any(|c| {
                &q.coeff + &c.coeff == b.coeff
                    && q.exps.iter().zip(&c.exps).zip(&b.exps).all(|((u, v), w)| u + v == *w)
            })
        });
        if !realized {
            return Ok(None);
        }
    }
    Ok(Some(reduce_poly(&y)))
}

pub fn is_divisible(f0: &NpPoly, f1: &NpPoly) -> Result<bool, DivideError> {
    Ok(divide(f0, f1)?.is_some())
}
