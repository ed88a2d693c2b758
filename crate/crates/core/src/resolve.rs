//! Resolutions of tropical hypersurfaces.
//!
//! `y` resolves `f = ⊕_i f_i ⊗ y^{⊗i}` when at every point of `R^n` the
//! minimum over the present degrees `i` of `(f_i ⊗ y^{⊗i})(x)` is attained
//! for at least two distinct `i`. Verification is exact: the degree classes
//! are piecewise-linear minima of affine composites, and a violation exists
//! exactly when some composite is strictly below every composite of the other
//! classes on a relatively open region, which is one strict-feasibility LP
//! per composite over the sign conditions of the pairwise differences.

use crate::geom::{
    polyhedron_dim, reduce_poly, sign_partition_within, GeomError, LinConstraint, Polyhedron, Sign,
};
use crate::linalg::rank;
use crate::lp::relative_interior_feasible;
use crate::poly::{AffineFunc, Monomial, NpPoly, PolyError, PolyInY};
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolveError {
    Poly(PolyError),
    Geom(GeomError),
    /// `minimal_resolution_monic` needs a tropical-unit leading coefficient.
    NotMonic,
    /// `minimal_resolution_rational` needs a present leading coefficient.
    MissingLeadingTerm,
    /// `combine_min` takes verified resolutions only.
    InputNotResolution,
}

impl fmt::Display for ResolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolveError::Poly(e) => write!(f, "{e}"),
            ResolveError::Geom(e) => write!(f, "{e}"),
            ResolveError::NotMonic => write!(f, "polynomial is not monic"),
            ResolveError::MissingLeadingTerm => write!(f, "leading coefficient is absent"),
            ResolveError::InputNotResolution => {
                write!(f, "input does not verify as a resolution")
            }
        }
    }
}

impl std::error::Error for ResolveError {}

impl From<PolyError> for ResolveError {
    fn from(e: PolyError) -> Self {
        ResolveError::Poly(e)
    }
}

impl From<GeomError> for ResolveError {
    fn from(e: GeomError) -> Self {
        ResolveError::Geom(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    /// A point where the minimum is attained by a single degree, when not ok.
    pub witness: Option<Vec<Rat>>,
}

/// The degree classes of `f` after substituting `y`: for each present `i`,
/// the function `f_i ⊗ y^{⊗i}` represented through the pure powers of `y`'s
/// monomials. The minimum over an i-th power is attained on pure powers, so
/// the function is unchanged and the representation stays small.
fn class_polys(f: &PolyInY, y: &NpPoly) -> Result<Vec<(usize, NpPoly)>, ResolveError> {
    if y.arity() != f.arity() {
        return Err(PolyError::ArityMismatch { expected: f.arity(), found: y.arity() }.into());
    }
    let mut classes = Vec::new();
    for i in f.present_degrees() {
        let fi = f.coeff(i).expect("present");
        let class = if i == 0 {
            fi.clone()
        } else {
            let y_pow = y.trop_pow(&Rat::from_integer(BigInt::from(i)))?;
            fi.trop_mul(&y_pow)?
        };
        // reduction keeps the class function identical and the LPs small
        let class = if class.monomials().len() > 10 { reduce_poly(&class) } else { class };
        classes.push((i, class));
    }
    Ok(classes)
}

fn find_violation(classes: &[(usize, NpPoly)], arity: usize) -> Option<Vec<Rat>> {
    for (ci, (_, class)) in classes.iter().enumerate() {
        for t in class.monomials() {
            let t_aff = t.as_affine();
            let mut constraints = Vec::new();
            for (cj, (_, other)) in classes.iter().enumerate() {
                if cj == ci {
                    continue;
                }
                for s in other.monomials() {
                    constraints.push(LinConstraint::gt(s.as_affine().sub(&t_aff)));
                }
            }
            let feas = relative_interior_feasible(arity, &constraints)
                .expect("dimensions are consistent by construction");
            if let Some(witness) = feas.witness {
                return Some(witness);
            }
        }
    }
    None
}

/// Exact verification of the resolution condition: at every `x` the minimum
/// over present degrees is attained at least twice. On failure the witness is
/// an interior point of a violating cell of the sign partition of the
/// composite differences.
pub fn verify_resolution(f: &PolyInY, y: &NpPoly) -> Result<VerifyOutcome, ResolveError> {
    let classes = class_polys(f, y)?;
    Ok(match find_violation(&classes, f.arity()) {
        Some(witness) => VerifyOutcome { ok: false, witness: Some(witness) },
        None => VerifyOutcome { ok: true, witness: None },
    })
}

/// Checks that `(x, y(x))` lies on the hypersurface `T(f)` for each sample,
/// reading `f` as a polynomial in `n + 1` variables.
pub fn graph_in_hypersurface(
    f: &PolyInY,
    y: &NpPoly,
    samples: &[Vec<Rat>],
) -> Result<bool, ResolveError> {
    let joint = f.to_joint_poly();
    for x in samples {
        let mut point = x.clone();
        point.push(y.eval(x)?);
        if !joint.is_tropical_root(&point)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomial-wise min of two verified resolutions, itself a resolution.
pub fn combine_min(f: &PolyInY, y1: &NpPoly, y2: &NpPoly) -> Result<NpPoly, ResolveError> {
    if !verify_resolution(f, y1)?.ok || !verify_resolution(f, y2)?.ok {
        return Err(ResolveError::InputNotResolution);
    }
    Ok(y1.trop_add(y2)?)
}

/// The minimal resolution of a monic polynomial:
/// `y = ⊕_{1<=i<=d} f_{d-i}^{⊗(1/i)}` over the present terms.
pub fn minimal_resolution_monic(f: &PolyInY) -> Result<NpPoly, ResolveError> {
    if !f.is_monic() {
        return Err(ResolveError::NotMonic);
    }
    let d = f.degree();
    let mut acc: Option<NpPoly> = None;
    for i in 1..=d {
        let Some(fd_i) = f.coeff(d - i) else { continue };
        let piece = fd_i.trop_pow(&Rat::new(BigInt::from(1), BigInt::from(i)))?;
        acc = Some(match acc {
            None => piece,
            Some(a) => a.trop_add(&piece)?,
        });
    }
    acc.ok_or(ResolveError::NotMonic)
}

/// A tropical Newton-Puiseux rational function `g ⊖ h`, classically the
/// difference `g - h` of two min-convex functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPl {
    g: NpPoly,
    h: NpPoly,
}

impl RationalPl {
    pub fn new(g: NpPoly, h: NpPoly) -> Result<Self, ResolveError> {
        if g.arity() != h.arity() {
            return Err(PolyError::ArityMismatch { expected: g.arity(), found: h.arity() }.into());
        }
        Ok(RationalPl { g, h })
    }

    pub fn g(&self) -> &NpPoly {
        &self.g
    }

    pub fn h(&self) -> &NpPoly {
        &self.h
    }

    pub fn arity(&self) -> usize {
        self.g.arity()
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        Ok(self.g.eval(point)? - self.h.eval(point)?)
    }

    /// Both parts reduced to essential monomials; the value is unchanged.
    pub fn reduced(&self) -> RationalPl {
        RationalPl { g: reduce_poly(&self.g), h: reduce_poly(&self.h) }
    }
}

/// The minimal rational-function resolution
/// `y = ⊕_{1<=i<=d} (f_{d-i} ⊘ f_d)^{⊗(1/i)}`, assembled as one difference
/// with the identity `min_i(g_i - h_i) = min_i(g_i + Σ_{j≠i} h_j) - Σ_j h_j`.
pub fn minimal_resolution_rational(f: &PolyInY) -> Result<RationalPl, ResolveError> {
    let d = f.degree();
    let fd = f.coeff(d).ok_or(ResolveError::MissingLeadingTerm)?;
    let mut terms: Vec<(NpPoly, NpPoly)> = Vec::new(); // (g_i, h_i)
    for i in 1..=d {
        let Some(fd_i) = f.coeff(d - i) else { continue };
        let r = Rat::new(BigInt::from(1), BigInt::from(i));
        let g_i = reduce_poly(&fd_i.trop_pow(&r)?);
        let h_i = reduce_poly(&fd.trop_pow(&r)?);
        terms.push((g_i, h_i));
    }
    debug_assert!(!terms.is_empty(), "a valid polynomial in y has a lower present term");
    let mut h_total = NpPoly::constant(f.arity(), Rat::zero());
    for (_, h_i) in &terms {
        h_total = reduce_poly(&h_total.trop_mul(h_i)?);
    }
    let mut g_total: Option<NpPoly> = None;
    for (i, (g_i, _)) in terms.iter().enumerate() {
        let mut prod = g_i.clone();
        for (j, (_, h_j)) in terms.iter().enumerate() {
            if i != j {
                prod = reduce_poly(&prod.trop_mul(h_j)?);
            }
        }
        g_total = Some(match g_total {
            None => prod,
            Some(acc) => reduce_poly(&acc.trop_add(&prod)?),
        });
    }
    RationalPl::new(g_total.expect("nonempty"), h_total)
}

/// Exact verification with a piecewise-linear `y = g ⊖ h`: over the sign
/// partition refined by all monomial differences within `g`, within `h`, and
/// within each `f_i`, the degree-class values are affine on each cell and the
/// tie condition is one strict-feasibility LP per (cell, degree).
pub fn verify_rational_resolution(
    f: &PolyInY,
    y: &RationalPl,
) -> Result<VerifyOutcome, ResolveError> {
    if y.arity() != f.arity() {
        return Err(PolyError::ArityMismatch { expected: f.arity(), found: y.arity() }.into());
    }
    let arity = f.arity();
    let g = reduce_poly(y.g());
    let h = reduce_poly(y.h());
    let reduced_f: Vec<(usize, NpPoly)> = f
        .present_degrees()
        .into_iter()
        .map(|i| (i, reduce_poly(f.coeff(i).expect("present"))))
        .collect();

    // groups of monomials whose internal differences refine the partition
    let mut groups: Vec<&NpPoly> = vec![&g, &h];
    for (_, fi) in &reduced_f {
        groups.push(fi);
    }
    let mut funcs = Vec::new();
    let mut slots: Vec<Vec<(usize, usize, usize)>> = Vec::new(); // per group: (slot, a, b)
    for poly in &groups {
        let ms = poly.monomials();
        let mut group_slots = Vec::new();
        for a in 0..ms.len() {
            for b in (a + 1)..ms.len() {
                group_slots.push((funcs.len(), a, b));
                funcs.push(ms[a].as_affine().sub(&ms[b].as_affine()));
            }
        }
        slots.push(group_slots);
    }
    let cells = sign_partition_within(arity, &[], &funcs)?;

    // all argmin monomials of a group coincide on the cell, so any one works
    let argmin_rep = |cell_signs: &[Sign], group: usize| -> usize {
        let ms = groups[group].monomials();
        let mut alive = vec![true; ms.len()];
        for &(slot, a, b) in &slots[group] {
            match cell_signs[slot] {
                Sign::Pos => alive[a] = false,
                Sign::Neg => alive[b] = false,
                Sign::Zero => {}
            }
        }
        alive.iter().position(|&k| k).expect("a minimum exists")
    };

    for cell in &cells {
        let g_rep = groups[0].monomials()[argmin_rep(&cell.signs, 0)].as_affine();
        let h_rep = groups[1].monomials()[argmin_rep(&cell.signs, 1)].as_affine();
        // class value on this cell: f_i representative + i * (g - h) representatives
        let mut class_affines: Vec<AffineFunc> = Vec::with_capacity(reduced_f.len());
        for (k, (i, _)) in reduced_f.iter().enumerate() {
            let f_rep = groups[2 + k].monomials()[argmin_rep(&cell.signs, 2 + k)].as_affine();
            let i_rat = Rat::from_integer(BigInt::from(*i));
            let constant = &f_rep.constant + &i_rat * (&g_rep.constant - &h_rep.constant);
            let gradient: Vec<Rat> = f_rep
                .gradient
                .iter()
                .zip(g_rep.gradient.iter().zip(&h_rep.gradient))
                .map(|(fg, (gg, hg))| fg + &i_rat * &(gg - hg))
                .collect();
            class_affines.push(AffineFunc::new(constant, gradient));
        }
        for (ci, psi) in class_affines.iter().enumerate() {
            let mut constraints = cell.region.constraints.clone();
            for (cj, other) in class_affines.iter().enumerate() {
                if ci != cj {
                    constraints.push(LinConstraint::gt(other.sub(psi)));
                }
            }
            let feas = relative_interior_feasible(arity, &constraints)
                .expect("dimensions are consistent by construction");
            if let Some(witness) = feas.witness {
                return Ok(VerifyOutcome { ok: false, witness: Some(witness) });
            }
        }
    }
    Ok(VerifyOutcome { ok: true, witness: None })
}

/// Where a candidate resolution monomial came from: the two composite
/// monomials that coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSource {
    pub deg_lo: usize,
    pub exps_lo: Vec<Rat>,
    pub deg_hi: usize,
    pub exps_hi: Vec<Rat>,
}

/// A candidate monomial `coeff ⊗ x^{⊗exps}` for a resolution of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub coeff: Rat,
    pub exps: Vec<Rat>,
    pub source: CandidateSource,
}

/// Every possible monomial of a reduced resolution: for each pair of present
/// degrees `i1 < i2` and monomials `(c1, I1)` of `f_{i1}`, `(c2, I2)` of
/// `f_{i2}`, the coincidence equations give
/// `a = (c1 - c2)/(i2 - i1)` and `I = (I1 - I2)/(i2 - i1)`.
pub fn candidate_coeffs(f: &PolyInY) -> Vec<Candidate> {
    let degrees = f.present_degrees();
    let mut out: Vec<Candidate> = Vec::new();
    for (a, &i1) in degrees.iter().enumerate() {
        for &i2 in &degrees[a + 1..] {
            let k = Rat::from_integer(BigInt::from(i2 - i1));
            let f1 = f.coeff(i1).expect("present");
            let f2 = f.coeff(i2).expect("present");
            for m1 in f1.monomials() {
                for m2 in f2.monomials() {
                    let coeff = (&m1.coeff - &m2.coeff) / &k;
                    let exps: Vec<Rat> =
                        m1.exps.iter().zip(&m2.exps).map(|(u, v)| (u - v) / &k).collect();
                    if out.iter().any(|c| c.coeff == coeff && c.exps == exps) {
                        continue;
                    }
                    out.push(Candidate {
                        coeff,
                        exps,
                        source: CandidateSource {
                            deg_lo: i1,
                            exps_lo: m1.exps.clone(),
                            deg_hi: i2,
                            exps_hi: m2.exps.clone(),
                        },
                    });
                }
            }
        }
    }
    out
}

/// Deterministic sample points used to reject non-resolutions cheaply before
/// the exact check.
fn filter_points(arity: usize) -> Vec<Vec<Rat>> {
    let axis: Vec<Rat> = [-3i64, -1, 0, 1, 3]
        .iter()
        .map(|&v| Rat::from_integer(BigInt::from(v)))
        .chain([
            Rat::new(BigInt::from(-5), BigInt::from(2)),
            Rat::new(BigInt::from(7), BigInt::from(3)),
        ])
        .collect();
    if arity == 1 {
        return axis.into_iter().map(|v| vec![v]).collect();
    }
    let mut points = Vec::new();
    for (i, a) in axis.iter().enumerate() {
        for (j, b) in axis.iter().enumerate() {
            let mut p = vec![a.clone(), b.clone()];
            if arity > 2 {
                p.push(axis[(i + j) % axis.len()].clone());
                p.resize(arity, Rat::zero());
            }
            points.push(p);
        }
    }
    points
}

fn ties_at_point(f: &PolyInY, y: &NpPoly, x: &[Rat]) -> bool {
    let yv = y.eval(x).expect("arity checked");
    let mut best: Option<Rat> = None;
    let mut count = 0usize;
    for i in f.present_degrees() {
        let v = f.coeff(i).expect("present").eval(x).expect("arity checked")
            + Rat::from_integer(BigInt::from(i)) * &yv;
        match &best {
            Some(b) if v == *b => count += 1,
            Some(b) if v < *b => {
                best = Some(v);
                count = 1;
            }
            Some(_) => {}
            None => {
                best = Some(v);
                count = 1;
            }
        }
    }
    count >= 2
}

/// Exhaustive search over subsets of the candidate monomials, complete for
/// resolutions with at most `max_support` essential monomials. Results are
/// reduced and deduplicated by functional equality, in lexicographic order
/// of candidate-index subsets.
pub fn brute_force_resolutions(
    f: &PolyInY,
    max_support: usize,
) -> Result<Vec<NpPoly>, ResolveError> {
    let candidates = candidate_coeffs(f);
    let monomials: Vec<Monomial> =
        candidates.iter().map(|c| Monomial::new(c.coeff.clone(), c.exps.clone())).collect();
    let points = filter_points(f.arity());
    let mut found: Vec<NpPoly> = Vec::new();

    let mut subset: Vec<usize> = Vec::new();
    enumerate_subsets(monomials.len(), max_support, &mut subset, &mut |subset| -> Result<(), ResolveError> {
        let y = NpPoly::new(f.arity(), subset.iter().map(|&i| monomials[i].clone()).collect())?;
        if !points.iter().all(|p| ties_at_point(f, &y, p)) {
            return Ok(());
        }
        if !verify_resolution(f, &y)?.ok {
            return Ok(());
        }
        let reduced = reduce_poly(&y);
        if !found.contains(&reduced) {
            found.push(reduced);
        }
        Ok(())
    })?;
    Ok(found)
}

/// Visits all nonempty subsets of `{0..n}` of size at most `cap` in
/// lexicographic order.
pub(crate) fn enumerate_subsets<E>(
    n: usize,
    cap: usize,
    subset: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    let start = subset.last().map_or(0, |&l| l + 1);
    for next in start..n {
        subset.push(next);
        visit(subset)?;
        if subset.len() < cap {
            enumerate_subsets(n, cap, subset, visit)?;
        }
        subset.pop();
    }
    Ok(())
}

/// Outcome of the partition check for one full-dimensional linearity region
/// of a resolution.
#[derive(Debug, Clone)]
pub struct RegionReport {
    pub monomial_index: usize,
    /// Every full-dimensional piece of the region carries a coinciding pair
    /// of composites with distinct degrees.
    pub covered: bool,
    /// Number of distinct full-dimensional coincidence subcells.
    pub subcell_count: usize,
    /// All pairwise intersections of distinct subcells have lower dimension.
    pub overlaps_ok: bool,
}

#[derive(Debug, Clone)]
pub struct PartitionReport {
    pub regions: Vec<RegionReport>,
}

impl PartitionReport {
    pub fn all_ok(&self) -> bool {
        self.regions.iter().all(|r| r.covered && r.overlaps_ok)
    }
}

/// Checks, for a verified resolution `y`, that each full-dimensional
/// linearity region of `y` is partitioned by the full-dimensional coincidence
/// subcells: they cover the region and pairwise intersect in lower dimension.
pub fn check_linearity_partition(
    f: &PolyInY,
    y: &NpPoly,
) -> Result<PartitionReport, ResolveError> {
    let arity = f.arity();
    let y = reduce_poly(y);
    let ms = y.monomials();
    let mut regions = Vec::new();
    for (idx, m) in ms.iter().enumerate() {
        let m_aff = m.as_affine();
        // interior of the linearity region of this monomial
        let base: Vec<LinConstraint> = ms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, other)| LinConstraint::gt(other.as_affine().sub(&m_aff)))
            .collect();
        // composites: one per monomial of each present f_i, using this y-monomial
        let mut composites: Vec<(usize, AffineFunc)> = Vec::new();
        for i in f.present_degrees() {
            let i_rat = Rat::from_integer(BigInt::from(i));
            for fm in f.coeff(i).expect("present").monomials() {
                let constant = &fm.coeff + &i_rat * &m.coeff;
                let gradient: Vec<Rat> =
                    fm.exps.iter().zip(&m.exps).map(|(e, ye)| e + &i_rat * ye).collect();
                composites.push((i, AffineFunc::new(constant, gradient)));
            }
        }
        let mut funcs = Vec::new();
        let mut pairs = Vec::new();
        for a in 0..composites.len() {
            for b in (a + 1)..composites.len() {
                pairs.push((a, b));
                funcs.push(composites[a].1.sub(&composites[b].1));
            }
        }
        let cells = sign_partition_within(arity, &base, &funcs)?;
        // coverage: every full-dimensional piece must have two composites of
        // distinct degrees in its argmin (they then coincide as functions)
        let mut covered = true;
        for cell in &cells {
            let zero_rows: Vec<Vec<Rat>> = cell
                .signs
                .iter()
                .zip(&funcs)
                .filter(|(s, _)| **s == Sign::Zero)
                .map(|(_, func)| func.gradient.clone())
                .collect();
            let dim = arity as i64 - rank(&zero_rows) as i64;
            if dim < arity as i64 {
                continue;
            }
            let mut alive = vec![true; composites.len()];
            for (slot, &(a, b)) in pairs.iter().enumerate() {
                match cell.signs[slot] {
                    Sign::Pos => alive[a] = false,
                    Sign::Neg => alive[b] = false,
                    Sign::Zero => {}
                }
            }
            let mut degs: Vec<usize> = composites
                .iter()
                .zip(&alive)
                .filter(|(_, &k)| k)
                .map(|((d, _), _)| *d)
                .collect();
            degs.dedup();
            if degs.len() < 2 {
                covered = false;
            }
        }
        // distinct full-dimensional coincidence subcells, keyed by the
        // minimal composite function of a coinciding distinct-degree pair
        let closed_base: Vec<LinConstraint> = ms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, other)| LinConstraint::ge(other.as_affine().sub(&m_aff)))
            .collect();
        let mut subcells: Vec<(AffineFunc, Polyhedron)> = Vec::new();
        for a in 0..composites.len() {
            for b in (a + 1)..composites.len() {
                if composites[a].0 == composites[b].0 || composites[a].1 != composites[b].1 {
                    continue;
                }
                if subcells.iter().any(|(rep, _)| *rep == composites[a].1) {
                    continue;
                }
                let mut constraints = closed_base.clone();
                for (w, (_, waff)) in composites.iter().enumerate() {
                    if w != a {
                        constraints.push(LinConstraint::ge(waff.sub(&composites[a].1)));
                    }
                }
                let region = Polyhedron { dim_ambient: arity, constraints };
                if polyhedron_dim(&region)? == arity as i64 {
                    subcells.push((composites[a].1.clone(), region));
                }
            }
        }
        let mut overlaps_ok = true;
        for a in 0..subcells.len() {
            for b in (a + 1)..subcells.len() {
                let mut constraints = subcells[a].1.constraints.clone();
                constraints.extend(subcells[b].1.constraints.iter().cloned());
                let inter = Polyhedron { dim_ambient: arity, constraints };
                if polyhedron_dim(&inter)? >= arity as i64 {
                    overlaps_ok = false;
                }
            }
        }
        regions.push(RegionReport {
            monomial_index: idx,
            covered,
            subcell_count: subcells.len(),
            overlaps_ok,
        });
    }
    Ok(PartitionReport { regions })
}
