//! Tropical monomials and polynomials with rational exponents.
//!
//! An [`NpPoly`] is a finite `min` of affine functions `coeff + exps·x`. The
//! monomial list is kept canonical: sorted lexicographically by exponent
//! vector, no two monomials sharing an exponent vector (duplicates merge by
//! keeping the smaller coefficient, which is the min-plus sum), and nonempty.
//! Absence of a monomial stands for `+∞`; there is no infinite coefficient.

use crate::rat::{format_rat, lcm_big, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// A point or polynomial does not match the expected arity.
    ArityMismatch { expected: usize, found: usize },
    /// An `NpPoly` must carry at least one monomial.
    EmptyPolynomial,
    /// `trop_pow` requires a strictly positive exponent.
    NonPositivePower,
    /// A polynomial in `y` needs degree at least 1 and a present top term.
    InvalidDegree,
    /// A polynomial in `y` needs at least two present coefficients.
    TooFewTerms,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            PolyError::EmptyPolynomial => write!(f, "tropical polynomial needs a monomial"),
            PolyError::NonPositivePower => write!(f, "tropical power requires a positive exponent"),
            PolyError::InvalidDegree => {
                write!(f, "polynomial in y needs degree >= 1 with a present leading term")
            }
            PolyError::TooFewTerms => {
                write!(f, "polynomial in y needs at least two present coefficients")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// A tropical monomial `coeff ⊗ x^{⊗exps}`, classically `coeff + exps·x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub coeff: Rat,
    pub exps: Vec<Rat>,
}

impl Monomial {
    pub fn new(coeff: Rat, exps: Vec<Rat>) -> Self {
        Monomial { coeff, exps }
    }

    pub fn value_at(&self, point: &[Rat]) -> Rat {
        let mut v = self.coeff.clone();
        for (e, x) in self.exps.iter().zip(point) {
            v += e * x;
        }
        v
    }

    /// The classical reading of the monomial as an affine function.
    pub fn as_affine(&self) -> AffineFunc {
        AffineFunc { constant: self.coeff.clone(), gradient: self.exps.clone() }
    }

    pub fn has_integer_exps(&self) -> bool {
        self.exps.iter().all(|e| e.denom().is_one())
    }
}

/// A tropical polynomial: a nonempty min of monomials, all of one arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NpPoly {
    arity: usize,
    monomials: Vec<Monomial>,
}

impl NpPoly {
    /// Builds a polynomial, merging duplicate exponent vectors (keeping the
    /// smaller coefficient) and sorting monomials lexicographically by
    /// exponents.
    pub fn new(arity: usize, monomials: Vec<Monomial>) -> Result<Self, PolyError> {
        if monomials.is_empty() {
            return Err(PolyError::EmptyPolynomial);
        }
        for m in &monomials {
            if m.exps.len() != arity {
                return Err(PolyError::ArityMismatch { expected: arity, found: m.exps.len() });
            }
        }
        let mut monomials = monomials;
        monomials.sort_by(|a, b| a.exps.cmp(&b.exps).then_with(|| a.coeff.cmp(&b.coeff)));
        monomials.dedup_by(|b, a| {
            if a.exps == b.exps {
                if b.coeff < a.coeff {
                    a.coeff = b.coeff.clone();
                }
                true
            } else {
                false
            }
        });
        Ok(NpPoly { arity, monomials })
    }

    /// The constant polynomial `c` (a single exponent-free monomial).
    pub fn constant(arity: usize, c: Rat) -> Self {
        NpPoly { arity, monomials: vec![Monomial::new(c, vec![Rat::zero(); arity])] }
    }

    /// The variable `x_idx` as a polynomial.
    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity, "variable index out of range");
        let mut exps = vec![Rat::zero(); arity];
        exps[idx] = Rat::one();
        NpPoly { arity, monomials: vec![Monomial::new(Rat::zero(), exps)] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_single_monomial(&self) -> bool {
        self.monomials.len() == 1
    }

    /// True when the polynomial is the tropical unit: the single constant 0.
    pub fn is_tropical_one(&self) -> bool {
        self.monomials.len() == 1
            && self.monomials[0].coeff.is_zero()
            && self.monomials[0].exps.iter().all(|e| e.is_zero())
    }

    fn check_point(&self, point: &[Rat]) -> Result<(), PolyError> {
        if point.len() != self.arity {
            return Err(PolyError::ArityMismatch { expected: self.arity, found: point.len() });
        }
        Ok(())
    }

    /// Evaluates the polynomial: the min over monomial values at `point`.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        self.check_point(point)?;
        Ok(self.monomials.iter().map(|m| m.value_at(point)).min().expect("nonempty"))
    }

    /// Indices of all monomials attaining the minimum at `point`.
    pub fn argmin_monomials(&self, point: &[Rat]) -> Result<Vec<usize>, PolyError> {
        self.check_point(point)?;
        let values: Vec<Rat> = self.monomials.iter().map(|m| m.value_at(point)).collect();
        let min = values.iter().min().expect("nonempty").clone();
        Ok(values.iter().enumerate().filter(|(_, v)| **v == min).map(|(i, _)| i).collect())
    }

    /// `point` is a tropical root when the minimum is attained at least twice.
    pub fn is_tropical_root(&self, point: &[Rat]) -> Result<bool, PolyError> {
        Ok(self.argmin_monomials(point)?.len() >= 2)
    }

    fn check_arity(&self, other: &NpPoly) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    /// Tropical sum: the union of monomials, i.e. the pointwise min.
    pub fn trop_add(&self, other: &NpPoly) -> Result<NpPoly, PolyError> {
        self.check_arity(other)?;
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        NpPoly::new(self.arity, monomials)
    }

    /// Tropical product: pairwise sums of coefficients and exponents, i.e.
    /// the pointwise classical sum.
    pub fn trop_mul(&self, other: &NpPoly) -> Result<NpPoly, PolyError> {
        self.check_arity(other)?;
        let mut monomials = Vec::with_capacity(self.monomials.len() * other.monomials.len());
        for a in &self.monomials {
            for b in &other.monomials {
                let exps = a.exps.iter().zip(&b.exps).map(|(u, v)| u + v).collect();
                monomials.push(Monomial::new(&a.coeff + &b.coeff, exps));
            }
        }
        NpPoly::new(self.arity, monomials)
    }

    /// Tropical power with a positive rational exponent: every monomial's
    /// coefficient and exponents scale by `r`, so each affine piece `a + I·x`
    /// becomes `r·a + r·I·x` and the value scales by `r` pointwise.
    pub fn trop_pow(&self, r: &Rat) -> Result<NpPoly, PolyError> {
        if !r.is_positive() {
            return Err(PolyError::NonPositivePower);
        }
        let monomials = self
            .monomials
            .iter()
            .map(|m| Monomial::new(r * &m.coeff, m.exps.iter().map(|e| r * e).collect()))
            .collect();
        NpPoly::new(self.arity, monomials)
    }

    /// Clears exponent denominators: returns `(N, p^{⊗N})` where `N` is the
    /// lcm of all exponent denominators, so the result has integer exponents
    /// and evaluates to `N` times the original everywhere.
    pub fn clear_denominators(&self) -> (BigInt, NpPoly) {
        let mut n = BigInt::one();
        for m in &self.monomials {
            for e in &m.exps {
                n = lcm_big(&n, e.denom());
            }
        }
        let q = self.trop_pow(&Rat::from_integer(n.clone())).expect("positive power");
        (n, q)
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.monomials.iter().all(Monomial::has_integer_exps)
    }
}

impl fmt::Display for NpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = if self.arity == 1 {
            vec!["x".to_string()]
        } else {
            (1..=self.arity).map(|i| format!("x{i}")).collect()
        };
        if self.monomials.len() == 1 {
            return write!(f, "{}", format_monomial(&self.monomials[0], &names));
        }
        let parts: Vec<String> =
            self.monomials.iter().map(|m| format_monomial(m, &names)).collect();
        write!(f, "min({})", parts.join(", "))
    }
}

/// Formats a monomial as an affine expression, e.g. `1/2 + x1 - 2*x2`.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut out = String::new();
    if !m.coeff.is_zero() {
        out.push_str(&format_rat(&m.coeff));
    }
    for (e, name) in m.exps.iter().zip(names) {
        if e.is_zero() {
            continue;
        }
        if out.is_empty() {
            if *e == Rat::one() {
                out.push_str(name);
            } else if *e == -Rat::one() {
                out.push_str(&format!("-{name}"));
            } else {
                out.push_str(&format!("{}*{name}", format_rat(e)));
            }
        } else if e.is_positive() {
            if *e == Rat::one() {
                out.push_str(&format!(" + {name}"));
            } else {
                out.push_str(&format!(" + {}*{name}", format_rat(e)));
            }
        } else {
            let a = -e;
            if a == Rat::one() {
                out.push_str(&format!(" - {name}"));
            } else {
                out.push_str(&format!(" - {}*{name}", format_rat(&a)));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A polynomial `⊕_i f_i ⊗ y^{⊗i}` in a distinguished indeterminate `y`,
/// with tropical-polynomial coefficients in the `x` variables. Entry `i` of
/// `coeffs` is `f_i`; `None` means the term is missing (coefficient `+∞`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyInY {
    arity: usize,
    coeffs: Vec<Option<NpPoly>>,
}

impl PolyInY {
    /// Builds a polynomial in `y`. Trailing absent terms are trimmed; the
    /// result must have degree at least 1 and at least two present terms.
    pub fn new(arity: usize, mut coeffs: Vec<Option<NpPoly>>) -> Result<Self, PolyError> {
        while coeffs.last().is_some_and(Option::is_none) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(PolyError::InvalidDegree);
        }
        for c in coeffs.iter().flatten() {
            if c.arity() != arity {
                return Err(PolyError::ArityMismatch { expected: arity, found: c.arity() });
            }
        }
        if coeffs.iter().filter(|c| c.is_some()).count() < 2 {
            return Err(PolyError::TooFewTerms);
        }
        Ok(PolyInY { arity, coeffs })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The degree `d`: the top present index.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Option<&NpPoly> {
        self.coeffs.get(i).and_then(Option::as_ref)
    }

    pub fn coeffs(&self) -> &[Option<NpPoly>] {
        &self.coeffs
    }

    pub fn present_degrees(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| c.is_some()).map(|(i, _)| i).collect()
    }

    /// Monic means the leading coefficient is the tropical unit (constant 0).
    pub fn is_monic(&self) -> bool {
        self.coeff(self.degree()).is_some_and(NpPoly::is_tropical_one)
    }

    /// Substitutes a polynomial for `y`: entry `i` is `f_i ⊗ y^{⊗i}` as a
    /// polynomial in the `x` variables (the i-fold tropical product).
    pub fn substitute_y(&self, y: &NpPoly) -> Result<Vec<Option<NpPoly>>, PolyError> {
        if y.arity() != self.arity {
            return Err(PolyError::ArityMismatch { expected: self.arity, found: y.arity() });
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut y_pow = NpPoly::constant(self.arity, Rat::zero());
        for c in &self.coeffs {
            out.push(match c {
                Some(f) => Some(f.trop_mul(&y_pow)?),
                None => None,
            });
            y_pow = y_pow.trop_mul(y)?;
        }
        Ok(out)
    }

    /// Reads `f` as a tropical polynomial in `n + 1` variables, with the `y`
    /// exponent appended as the last coordinate.
    pub fn to_joint_poly(&self) -> NpPoly {
        let mut monomials = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if let Some(f) = c {
                for m in f.monomials() {
                    let mut exps = m.exps.clone();
                    exps.push(Rat::from_integer(BigInt::from(i)));
                    monomials.push(Monomial::new(m.coeff.clone(), exps));
                }
            }
        }
        NpPoly::new(self.arity + 1, monomials).expect("present terms exist")
    }
}

/// A classical affine function `constant + gradient·x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineFunc {
    pub constant: Rat,
    pub gradient: Vec<Rat>,
}

impl AffineFunc {
    pub fn new(constant: Rat, gradient: Vec<Rat>) -> Self {
        AffineFunc { constant, gradient }
    }

    pub fn zero(dim: usize) -> Self {
        AffineFunc { constant: Rat::zero(), gradient: vec![Rat::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.gradient.len()
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut v = self.constant.clone();
        for (g, x) in self.gradient.iter().zip(point) {
            v += g * x;
        }
        v
    }

    pub fn neg(&self) -> AffineFunc {
        AffineFunc {
            constant: -self.constant.clone(),
            gradient: self.gradient.iter().map(|g| -g).collect(),
        }
    }

    pub fn sub(&self, other: &AffineFunc) -> AffineFunc {
        debug_assert_eq!(self.dim(), other.dim());
        AffineFunc {
            constant: &self.constant - &other.constant,
            gradient: self.gradient.iter().zip(&other.gradient).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.gradient.iter().all(Rat::is_zero)
    }

    pub fn is_zero_func(&self) -> bool {
        self.constant.is_zero() && self.is_constant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn pt(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    /// `x ⊕ 0` in one variable.
    fn x_plus_zero() -> NpPoly {
        NpPoly::var(1, 0).trop_add(&NpPoly::constant(1, rat_int(0))).unwrap()
    }

    /// `y ⊕ x ⊕ 0` over variables (x, y).
    fn tropical_line() -> NpPoly {
        NpPoly::var(2, 1)
            .trop_add(&NpPoly::var(2, 0))
            .unwrap()
            .trop_add(&NpPoly::constant(2, rat_int(0)))
            .unwrap()
    }

    #[test]
    fn eval_examples() {
        let p = x_plus_zero();
        assert_eq!(p.eval(&pt(&[2])).unwrap(), rat_int(0));
        assert_eq!(p.eval(&pt(&[-1])).unwrap(), rat_int(-1));
        // 3 ⊗ x^{⊗1/2} at 4 -> 3 + (1/2)*4 = 5
        let q = NpPoly::new(1, vec![Monomial::new(rat_int(3), vec![rat(1, 2)])]).unwrap();
        assert_eq!(q.eval(&pt(&[4])).unwrap(), rat_int(5));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let p = x_plus_zero();
        assert_eq!(
            p.eval(&pt(&[1, 2])).unwrap_err(),
            PolyError::ArityMismatch { expected: 1, found: 2 }
        );
    }

    #[test]
    fn argmin_examples() {
        let line = tropical_line();
        assert_eq!(line.argmin_monomials(&pt(&[0, 0])).unwrap().len(), 3);
        let p = x_plus_zero();
        // monomials sorted by exps: [0, x]
        assert_eq!(p.argmin_monomials(&pt(&[2])).unwrap(), vec![0]);
        assert_eq!(p.argmin_monomials(&pt(&[0])).unwrap(), vec![0, 1]);
    }

    #[test]
    fn tropical_root_examples() {
        let line = tropical_line();
        assert!(line.is_tropical_root(&pt(&[0, 0])).unwrap());
        assert!(!line.is_tropical_root(&pt(&[1, 2])).unwrap());
        assert!(line.is_tropical_root(&pt(&[-3, -3])).unwrap());
    }

    #[test]
    fn mul_and_add_examples() {
        let p = x_plus_zero();
        let sq = p.trop_mul(&p).unwrap();
        // x^{⊗2} ⊕ x ⊕ 0 (x appears twice, merged with coeff 0)
        assert_eq!(sq.monomials().len(), 3);
        for x in [-3i64, -1, 0, 1, 2] {
            let v = sq.eval(&pt(&[x])).unwrap();
            assert_eq!(v, rat_int((2 * x).min(x).min(0)));
        }
        let shifted = NpPoly::constant(1, rat_int(5)).trop_mul(&p).unwrap();
        assert_eq!(shifted.eval(&pt(&[1])).unwrap(), rat_int(5));
    }

    #[test]
    fn duplicate_monomials_merge_keeping_min() {
        let p = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(3), vec![rat_int(1)]),
                Monomial::new(rat_int(1), vec![rat_int(1)]),
                Monomial::new(rat_int(2), vec![rat_int(1)]),
            ],
        )
        .unwrap();
        assert_eq!(p.monomials().len(), 1);
        assert_eq!(p.monomials()[0].coeff, rat_int(1));
    }

    #[test]
    fn pow_examples() {
        let zero = NpPoly::constant(1, rat_int(0));
        assert_eq!(zero.trop_pow(&rat(1, 2)).unwrap(), zero);

        // (c ⊗ x^{⊗J})^{⊗1/i} = (c/i) ⊗ x^{⊗J/i}
        let m = NpPoly::new(1, vec![Monomial::new(rat_int(4), vec![rat_int(6)])]).unwrap();
        let r = m.trop_pow(&rat(1, 2)).unwrap();
        assert_eq!(r.monomials()[0].coeff, rat_int(2));
        assert_eq!(r.monomials()[0].exps[0], rat_int(3));

        // (2 ⊗ x ⊕ 0)^{⊗1/2} = 1 ⊗ x^{⊗1/2} ⊕ 0
        let p = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(2), vec![rat_int(1)]),
                Monomial::new(rat_int(0), vec![rat_int(0)]),
            ],
        )
        .unwrap();
        let half = p.trop_pow(&rat(1, 2)).unwrap();
        let expected = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(1), vec![rat(1, 2)]),
                Monomial::new(rat_int(0), vec![rat_int(0)]),
            ],
        )
        .unwrap();
        assert_eq!(half, expected);

        assert_eq!(p.trop_pow(&rat_int(0)).unwrap_err(), PolyError::NonPositivePower);
        assert_eq!(p.trop_pow(&rat_int(-1)).unwrap_err(), PolyError::NonPositivePower);
    }

    #[test]
    fn pow_round_trip_keeps_monomial_set() {
        let p = NpPoly::new(
            2,
            vec![
                Monomial::new(rat(1, 3), vec![rat(2, 3), rat_int(-1)]),
                Monomial::new(rat_int(2), vec![rat(1, 2), rat_int(0)]),
            ],
        )
        .unwrap();
        let r = rat(3, 7);
        let back = p.trop_pow(&r).unwrap().trop_pow(&(Rat::one() / r)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn clear_denominators_examples() {
        // x^{⊗1/2} ⊕ 0 -> N = 2, q = x ⊕ 0
        let p = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(0), vec![rat(1, 2)]),
                Monomial::new(rat_int(0), vec![rat_int(0)]),
            ],
        )
        .unwrap();
        let (n, q) = p.clear_denominators();
        assert_eq!(n, BigInt::from(2));
        assert_eq!(q, x_plus_zero());

        let (n1, q1) = x_plus_zero().clear_denominators();
        assert_eq!(n1, BigInt::from(1));
        assert_eq!(q1, x_plus_zero());

        // (1/3) ⊗ x^{⊗2/3} -> N = 3, q = 1 ⊗ x^{⊗2}
        let m = NpPoly::new(1, vec![Monomial::new(rat(1, 3), vec![rat(2, 3)])]).unwrap();
        let (n2, q2) = m.clear_denominators();
        assert_eq!(n2, BigInt::from(3));
        assert_eq!(q2.monomials()[0].coeff, rat_int(1));
        assert_eq!(q2.monomials()[0].exps[0], rat_int(2));
        assert!(q2.has_integer_exponents());
    }

    #[test]
    fn clear_denominators_scales_eval() {
        let p = NpPoly::new(
            1,
            vec![
                Monomial::new(rat(1, 2), vec![rat(5, 6)]),
                Monomial::new(rat_int(-1), vec![rat(-1, 4)]),
            ],
        )
        .unwrap();
        let (n, q) = p.clear_denominators();
        let n_rat = Rat::from_integer(n);
        for x in [-7i64, -1, 0, 2, 9] {
            let point = pt(&[x]);
            assert_eq!(q.eval(&point).unwrap(), &n_rat * p.eval(&point).unwrap());
        }
    }

    #[test]
    fn semiring_homomorphism_at_points() {
        let p = tropical_line();
        let q = NpPoly::new(
            2,
            vec![
                Monomial::new(rat(1, 2), vec![rat_int(2), rat_int(0)]),
                Monomial::new(rat_int(-1), vec![rat_int(0), rat(1, 3)]),
            ],
        )
        .unwrap();
        for (a, b) in [(0i64, 0i64), (1, -2), (-3, 5), (7, 7), (-1, -1)] {
            let point = pt(&[a, b]);
            let pv = p.eval(&point).unwrap();
            let qv = q.eval(&point).unwrap();
            assert_eq!(p.trop_add(&q).unwrap().eval(&point).unwrap(), pv.clone().min(qv.clone()));
            assert_eq!(p.trop_mul(&q).unwrap().eval(&point).unwrap(), pv + qv);
        }
    }

    #[test]
    fn poly_in_y_construction() {
        // f = y ⊕ x ⊕ 0: f_0 = x ⊕ 0, f_1 = 0
        let f = PolyInY::new(
            1,
            vec![Some(x_plus_zero()), Some(NpPoly::constant(1, rat_int(0)))],
        )
        .unwrap();
        assert_eq!(f.degree(), 1);
        assert!(f.is_monic());
        assert_eq!(f.present_degrees(), vec![0, 1]);

        // a lone y^{⊗d} is rejected
        let lone = PolyInY::new(1, vec![None, Some(NpPoly::constant(1, rat_int(0)))]);
        assert_eq!(lone.unwrap_err(), PolyError::TooFewTerms);

        // trailing absent terms trim away
        let trimmed = PolyInY::new(
            1,
            vec![Some(x_plus_zero()), Some(NpPoly::constant(1, rat_int(0))), None, None],
        )
        .unwrap();
        assert_eq!(trimmed.degree(), 1);

        let degenerate = PolyInY::new(1, vec![Some(x_plus_zero())]);
        assert_eq!(degenerate.unwrap_err(), PolyError::InvalidDegree);
    }

    #[test]
    fn substitute_y_examples() {
        let f = PolyInY::new(
            1,
            vec![Some(x_plus_zero()), Some(NpPoly::constant(1, rat_int(0)))],
        )
        .unwrap();
        let y = x_plus_zero();
        let entries = f.substitute_y(&y).unwrap();
        assert_eq!(entries[0].as_ref().unwrap(), &x_plus_zero());
        assert_eq!(entries[1].as_ref().unwrap(), &x_plus_zero());

        // monic degree 2 with y = 0 has 0 in the top entry
        let f2 = PolyInY::new(
            1,
            vec![
                Some(NpPoly::constant(1, rat_int(0))),
                None,
                Some(NpPoly::constant(1, rat_int(0))),
            ],
        )
        .unwrap();
        let entries2 = f2.substitute_y(&NpPoly::constant(1, rat_int(0))).unwrap();
        assert!(entries2[1].is_none());
        assert!(entries2[2].as_ref().unwrap().is_tropical_one());
    }

    #[test]
    fn joint_poly_reading() {
        let f = PolyInY::new(
            1,
            vec![Some(x_plus_zero()), Some(NpPoly::constant(1, rat_int(0)))],
        )
        .unwrap();
        let joint = f.to_joint_poly();
        assert_eq!(joint.arity(), 2);
        assert_eq!(joint.monomials().len(), 3);
        // (x, y) = (-5, -5) is a root: x-monomial ties y-monomial
        assert!(joint.is_tropical_root(&pt(&[-5, -5])).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(x_plus_zero().to_string(), "min(0, x)");
        assert_eq!(NpPoly::constant(2, rat(1, 2)).to_string(), "1/2");
        assert_eq!(tropical_line().to_string(), "min(0, x2, x1)");
    }
}
