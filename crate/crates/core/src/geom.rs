//! Exact polyhedral geometry: sign partitions, tropical prevarieties,
//! functional reduction and equality, and 1-skeleton extraction.
//!
//! A sign partition splits `R^n` into relatively open cells on which every
//! registered affine function has a constant sign. Cells are discovered by
//! recursion on the functions: each current cell is extended by the feasible
//! signs of the next function, tested with exact LP feasibility. The
//! prevariety of a tropical system is read off the partition of all pairwise
//! monomial differences: a cell lies in `T` exactly when every polynomial's
//! argmin set of monomials on it has at least two elements.

use crate::linalg::{rank, solve_affine};
use crate::lp::{lp_solve, relative_interior_feasible, LpStatus, Sense};
use crate::poly::{AffineFunc, NpPoly, PolyError};
use crate::rat::{sign_of, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    DimensionMismatch { expected: usize, found: usize },
    /// `lp_solve` takes non-strict constraints only.
    StrictConstraintInLp,
    ArityMismatch { expected: usize, found: usize },
    /// The prevariety has a cell of dimension 2 or more, so it is not a curve.
    NotACurve { cell_index: usize, dim: i64 },
    Poly(PolyError),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            GeomError::StrictConstraintInLp => {
                write!(f, "lp_solve accepts non-strict constraints only")
            }
            GeomError::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            GeomError::NotACurve { cell_index, dim } => {
                write!(f, "not a curve: cell {cell_index} has dimension {dim}")
            }
            GeomError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GeomError {}

impl From<PolyError> for GeomError {
    fn from(e: PolyError) -> Self {
        GeomError::Poly(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `func(x) >= 0`
    Ge,
    /// `func(x) = 0`
    Eq,
    /// `func(x) > 0`
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinConstraint {
    pub func: AffineFunc,
    pub relation: Relation,
}

impl LinConstraint {
    pub fn ge(func: AffineFunc) -> Self {
        LinConstraint { func, relation: Relation::Ge }
    }
    pub fn eq(func: AffineFunc) -> Self {
        LinConstraint { func, relation: Relation::Eq }
    }
    pub fn gt(func: AffineFunc) -> Self {
        LinConstraint { func, relation: Relation::Gt }
    }

    pub fn holds_at(&self, point: &[Rat]) -> bool {
        let v = self.func.eval(point);
        match self.relation {
            Relation::Ge => !v.is_negative(),
            Relation::Eq => v.is_zero(),
            Relation::Gt => v.is_positive(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim_ambient: usize,
    pub constraints: Vec<LinConstraint>,
}

impl Polyhedron {
    pub fn new(dim_ambient: usize, constraints: Vec<LinConstraint>) -> Result<Self, GeomError> {
        for c in &constraints {
            if c.func.dim() != dim_ambient {
                return Err(GeomError::DimensionMismatch {
                    expected: dim_ambient,
                    found: c.func.dim(),
                });
            }
        }
        Ok(Polyhedron { dim_ambient, constraints })
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        self.constraints.iter().all(|c| c.holds_at(point))
    }
}

/// Dimension of a polyhedron: the dimension of its affine hull, or -1 when
/// empty. Strict constraints are honored for the emptiness test and relaxed
/// for the hull.
///
/// Implicit equalities are found by maximizing each inequality over the
/// relaxed region; the hull is cut out by the declared and implicit
/// equalities, whose rank is computed exactly.
pub fn polyhedron_dim(p: &Polyhedron) -> Result<i64, GeomError> {
    let n = p.dim_ambient;
    let feas = relative_interior_feasible(n, &p.constraints)?;
    let Some(witness) = feas.witness else {
        return Ok(-1);
    };
    let relaxed: Vec<LinConstraint> = p
        .constraints
        .iter()
        .map(|c| LinConstraint {
            func: c.func.clone(),
            relation: if c.relation == Relation::Gt { Relation::Ge } else { c.relation },
        })
        .collect();
    let mut eq_rows: Vec<Vec<Rat>> = Vec::new();
    for c in &relaxed {
        match c.relation {
            Relation::Eq => eq_rows.push(c.func.gradient.clone()),
            Relation::Ge => {
                if c.func.eval(&witness).is_positive() {
                    continue;
                }
                match lp_solve(&relaxed, &c.func, Sense::Maximize)? {
                    LpStatus::Optimal { value, .. } if value.is_zero() => {
                        eq_rows.push(c.func.gradient.clone());
                    }
                    _ => {}
                }
            }
            Relation::Gt => unreachable!(),
        }
    }
    Ok(n as i64 - rank(&eq_rows) as i64)
}

/// Sign of an affine function on a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn of(r: &Rat) -> Sign {
        match sign_of(r) {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// One relatively open cell of a sign partition: the set where every
/// registered function has the recorded sign. Carries an interior witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub signs: Vec<Sign>,
    pub region: Polyhedron,
    pub witness: Vec<Rat>,
}

impl Cell {
    /// Membership test against the recorded signs of the given functions.
    pub fn contains_by_signs(&self, funcs: &[AffineFunc], point: &[Rat]) -> bool {
        self.signs
            .iter()
            .zip(funcs)
            .all(|(s, f)| Sign::of(&f.eval(point)) == *s)
    }
}

/// Scales an affine function to a primitive integer vector with a canonical
/// sign; returns the key and whether the sign was flipped.
fn normalize_affine(f: &AffineFunc) -> (Vec<BigInt>, bool) {
    let mut den = BigInt::one();
    let mut entries: Vec<Rat> = Vec::with_capacity(f.gradient.len() + 1);
    entries.push(f.constant.clone());
    entries.extend(f.gradient.iter().cloned());
    for e in &entries {
        den = den.lcm(e.denom());
    }
    let mut ints: Vec<BigInt> = entries.iter().map(|e| (e * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in &mut ints {
            *v = &*v / &g;
        }
    }
    let flip = ints.iter().find(|v| !v.is_zero()).map(|v| v.is_negative()).unwrap_or(false);
    if flip {
        for v in &mut ints {
            *v = -&*v;
        }
    }
    (ints, flip)
}

fn sign_constraint(f: &AffineFunc, sign: Sign) -> LinConstraint {
    match sign {
        Sign::Pos => LinConstraint::gt(f.clone()),
        Sign::Zero => LinConstraint::eq(f.clone()),
        Sign::Neg => LinConstraint::gt(f.neg()),
    }
}

/// Partition of `R^dim` by the signs of the given affine functions.
///
/// Every point lies in exactly one cell; cells come out deterministically,
/// ordered by sign vectors with `- < 0 < +` refined function by function.
pub fn sign_partition(dim: usize, funcs: &[AffineFunc]) -> Result<Vec<Cell>, GeomError> {
    sign_partition_within(dim, &[], funcs)
}

/// Sign partition restricted to a base region (the cells partition the set
/// of points satisfying `base`). With an empty base this is `sign_partition`.
pub fn sign_partition_within(
    dim: usize,
    base: &[LinConstraint],
    funcs: &[AffineFunc],
) -> Result<Vec<Cell>, GeomError> {
    for f in funcs {
        if f.dim() != dim {
            return Err(GeomError::DimensionMismatch { expected: dim, found: f.dim() });
        }
    }
    struct Proto {
        signs: Vec<Sign>,
        constraints: Vec<LinConstraint>,
        witness: Vec<Rat>,
    }
    let initial_witness = if base.is_empty() {
        vec![Rat::zero(); dim]
    } else {
        let feas = relative_interior_feasible(dim, base)?;
        match feas.witness {
            Some(w) => w,
            None => return Ok(Vec::new()),
        }
    };
    let mut cells = vec![Proto {
        signs: Vec::new(),
        constraints: base.to_vec(),
        witness: initial_witness,
    }];
    // functions that are positive multiples of an earlier one split nothing;
    // their signs are copied (or flipped) from the representative
    let mut seen: HashMap<Vec<BigInt>, (usize, bool)> = HashMap::new();
    for (k, f) in funcs.iter().enumerate() {
        if f.is_constant() {
            let s = Sign::of(&f.constant);
            for cell in &mut cells {
                cell.signs.push(s);
            }
            continue;
        }
        let (key, flipped) = normalize_affine(f);
        if let Some(&(rep, rep_flipped)) = seen.get(&key) {
            for cell in &mut cells {
                let s = cell.signs[rep];
                cell.signs.push(if flipped == rep_flipped { s } else { s.flip() });
            }
            continue;
        }
        seen.insert(key, (k, flipped));
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            let here = Sign::of(&f.eval(&cell.witness));
            for sign in [Sign::Neg, Sign::Zero, Sign::Pos] {
                let constraint = sign_constraint(f, sign);
                let witness = if sign == here {
                    Some(cell.witness.clone())
                } else {
                    let mut cs = cell.constraints.clone();
                    cs.push(constraint.clone());
                    relative_interior_feasible(dim, &cs)?.witness
                };
                if let Some(witness) = witness {
                    let mut signs = cell.signs.clone();
                    signs.push(sign);
                    let mut constraints = cell.constraints.clone();
                    constraints.push(constraint);
                    next.push(Proto { signs, constraints, witness });
                }
            }
        }
        cells = next;
    }
    Ok(cells
        .into_iter()
        .map(|p| Cell {
            signs: p.signs,
            region: Polyhedron { dim_ambient: dim, constraints: p.constraints },
            witness: p.witness,
        })
        .collect())
}

/// Identifies one registered difference: monomial `mono_a` minus monomial
/// `mono_b` of polynomial `poly`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiffKey {
    pub poly: usize,
    pub mono_a: usize,
    pub mono_b: usize,
}

#[derive(Debug, Clone)]
pub struct PrevarietyCell {
    pub cell: Cell,
    /// Per input polynomial, the indices of monomials attaining its minimum
    /// everywhere on the cell.
    pub argmins: Vec<Vec<usize>>,
    /// In the prevariety: every polynomial's argmin set has >= 2 elements.
    pub in_t: bool,
    pub dim: i64,
}

#[derive(Debug, Clone)]
pub struct Prevariety {
    pub arity: usize,
    pub polys: Vec<NpPoly>,
    pub diffs: Vec<DiffKey>,
    pub cells: Vec<PrevarietyCell>,
}

impl Prevariety {
    pub fn in_t_cells(&self) -> impl Iterator<Item = (usize, &PrevarietyCell)> {
        self.cells.iter().enumerate().filter(|(_, c)| c.in_t)
    }

    pub fn diff_func(&self, key: &DiffKey) -> AffineFunc {
        let p = &self.polys[key.poly];
        let a = &p.monomials()[key.mono_a];
        let b = &p.monomials()[key.mono_b];
        a.as_affine().sub(&b.as_affine())
    }
}

/// Builds the tropical prevariety `T(f_1, ..., f_k)` by the sign partition of
/// all pairwise monomial differences, in lexicographic order of
/// (polynomial index, monomial pair).
pub fn prevariety(system: &[NpPoly]) -> Result<Prevariety, GeomError> {
    let arity = system.first().map(NpPoly::arity).unwrap_or(0);
    for p in system {
        if p.arity() != arity {
            return Err(GeomError::ArityMismatch { expected: arity, found: p.arity() });
        }
    }
    let mut diffs = Vec::new();
    let mut funcs = Vec::new();
    for (pi, p) in system.iter().enumerate() {
        let ms = p.monomials();
        for a in 0..ms.len() {
            for b in (a + 1)..ms.len() {
                diffs.push(DiffKey { poly: pi, mono_a: a, mono_b: b });
                funcs.push(ms[a].as_affine().sub(&ms[b].as_affine()));
            }
        }
    }
    let cells = sign_partition(arity, &funcs)?;
    let mut out = Vec::with_capacity(cells.len());
    for cell in cells {
        let mut argmins = Vec::with_capacity(system.len());
        for (pi, p) in system.iter().enumerate() {
            let m = p.monomials().len();
            let mut alive = vec![true; m];
            for (slot, key) in diffs.iter().enumerate() {
                if key.poly != pi {
                    continue;
                }
                match cell.signs[slot] {
                    Sign::Pos => alive[key.mono_a] = false,
                    Sign::Neg => alive[key.mono_b] = false,
                    Sign::Zero => {}
                }
            }
            argmins.push((0..m).filter(|&i| alive[i]).collect::<Vec<_>>());
        }
        let in_t = argmins.iter().all(|a| a.len() >= 2);
        // the cell is relatively open in the affine subspace cut out by its
        // zero-sign differences, so its dimension is a rank computation
        let zero_rows: Vec<Vec<Rat>> = cell
            .signs
            .iter()
            .zip(&funcs)
            .filter(|(s, _)| **s == Sign::Zero)
            .map(|(_, f)| f.gradient.clone())
            .collect();
        let dim = arity as i64 - rank(&zero_rows) as i64;
        out.push(PrevarietyCell { cell, argmins, in_t, dim });
    }
    Ok(Prevariety { arity, polys: system.to_vec(), diffs, cells: out })
}

/// Indices of monomials that are strictly below all others somewhere.
/// Removing the rest leaves the polynomial unchanged as a function.
pub fn essential_monomials(p: &NpPoly) -> Vec<usize> {
    let ms = p.monomials();
    if ms.len() == 1 {
        return vec![0];
    }
    let mut keep = Vec::new();
    for i in 0..ms.len() {
        let fi = ms[i].as_affine();
        let constraints: Vec<LinConstraint> = (0..ms.len())
            .filter(|&j| j != i)
            .map(|j| LinConstraint::gt(ms[j].as_affine().sub(&fi)))
            .collect();
        let feas = relative_interior_feasible(p.arity(), &constraints)
            .expect("dimensions are consistent by construction");
        if feas.feasible {
            keep.push(i);
        }
    }
    keep
}

/// The reduced polynomial: essential monomials only.
pub fn reduce_poly(p: &NpPoly) -> NpPoly {
    let keep = essential_monomials(p);
    let ms = p.monomials();
    NpPoly::new(p.arity(), keep.iter().map(|&i| ms[i].clone()).collect())
        .expect("the lower envelope keeps at least one monomial")
}

/// Functional equality: equal as piecewise-linear functions, decided by
/// comparing reduced monomial sets.
pub fn poly_equal(p: &NpPoly, q: &NpPoly) -> Result<bool, GeomError> {
    if p.arity() != q.arity() {
        return Err(GeomError::ArityMismatch { expected: p.arity(), found: q.arity() });
    }
    Ok(reduce_poly(p) == reduce_poly(q))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeGeometry {
    Segment { a: Vec<Rat>, b: Vec<Rat> },
    Ray { base: Vec<Rat>, direction: Vec<Rat> },
    Line { base: Vec<Rat>, direction: Vec<Rat> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonVertex {
    pub point: Vec<Rat>,
    pub cell_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub geometry: EdgeGeometry,
    pub cell_index: usize,
}

/// The 0- and 1-cells of a curve, with exact endpoints and directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub dim_ambient: usize,
    pub vertices: Vec<SkeletonVertex>,
    pub edges: Vec<SkeletonEdge>,
}

/// Primitive integer direction with the first nonzero component positive.
fn normalize_direction(v: &[Rat]) -> Vec<Rat> {
    let mut den = BigInt::one();
    for e in v {
        den = den.lcm(e.denom());
    }
    let mut ints: Vec<BigInt> =
        v.iter().map(|e| (e * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x = &*x / &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -&*x;
        }
    }
    ints.into_iter().map(Rat::from_integer).collect()
}

fn point_on_line(base: &[Rat], dir: &[Rat], t: &Rat) -> Vec<Rat> {
    base.iter().zip(dir).map(|(b, d)| b + t * d).collect()
}

/// Extracts the 1-skeleton of a prevariety whose cells all have dimension at
/// most 1. Reports the first higher-dimensional cell otherwise.
pub fn extract_skeleton(t: &Prevariety) -> Result<Skeleton, GeomError> {
    for (i, c) in t.in_t_cells() {
        if c.dim > 1 {
            return Err(GeomError::NotACurve { cell_index: i, dim: c.dim });
        }
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, c) in t.in_t_cells() {
        let eq_rows: Vec<Vec<Rat>> = c
            .cell
            .region
            .constraints
            .iter()
            .filter(|k| k.relation == Relation::Eq)
            .map(|k| k.func.gradient.clone())
            .collect();
        let eq_rhs: Vec<Rat> = c
            .cell
            .region
            .constraints
            .iter()
            .filter(|k| k.relation == Relation::Eq)
            .map(|k| -k.func.constant.clone())
            .collect();
        match c.dim {
            0 => {
                let (point, nullspace) =
                    solve_affine(&eq_rows, &eq_rhs).expect("nonempty cell has consistent equalities");
                debug_assert!(nullspace.is_empty());
                vertices.push(SkeletonVertex { point, cell_index: i });
            }
            1 => {
                let (base, nullspace) =
                    solve_affine(&eq_rows, &eq_rhs).expect("nonempty cell has consistent equalities");
                debug_assert_eq!(nullspace.len(), 1);
                let dir = normalize_direction(&nullspace[0]);
                // the cell is an open parameter interval on base + t*dir
                let mut lo: Option<Rat> = None;
                let mut hi: Option<Rat> = None;
                for k in &c.cell.region.constraints {
                    if k.relation != Relation::Gt {
                        continue;
                    }
                    let beta: Rat =
                        k.func.gradient.iter().zip(&dir).map(|(g, d)| g * d).sum();
                    let alpha = k.func.eval(&base);
                    if beta.is_zero() {
                        debug_assert!(alpha.is_positive(), "constant constraint must hold on the line");
                        continue;
                    }
                    let bound = -&alpha / &beta;
                    if beta.is_positive() {
                        if lo.as_ref().is_none_or(|l| bound > *l) {
                            lo = Some(bound);
                        }
                    } else if hi.as_ref().is_none_or(|h| bound < *h) {
                        hi = Some(bound);
                    }
                }
                let geometry = match (lo, hi) {
                    (None, None) => EdgeGeometry::Line { base, direction: dir },
                    (Some(lo), None) => {
                        EdgeGeometry::Ray { base: point_on_line(&base, &dir, &lo), direction: dir }
                    }
                    (None, Some(hi)) => EdgeGeometry::Ray {
                        base: point_on_line(&base, &dir, &hi),
                        direction: dir.iter().map(|d| -d).collect(),
                    },
                    (Some(lo), Some(hi)) => {
                        debug_assert!(lo < hi, "1-cell has a nonempty parameter interval");
                        EdgeGeometry::Segment {
                            a: point_on_line(&base, &dir, &lo),
                            b: point_on_line(&base, &dir, &hi),
                        }
                    }
                };
                edges.push(SkeletonEdge { geometry, cell_index: i });
            }
            d => {
                debug_assert!(d < 0 || d > 1, "unexpected cell dimension {d}");
            }
        }
    }
    Ok(Skeleton { dim_ambient: t.arity, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::rat::{rat, rat_int};

    fn af(constant: i64, gradient: &[i64]) -> AffineFunc {
        AffineFunc::new(rat_int(constant), gradient.iter().map(|&g| rat_int(g)).collect())
    }

    fn pt(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    fn x_plus_zero() -> NpPoly {
        NpPoly::var(1, 0).trop_add(&NpPoly::constant(1, rat_int(0))).unwrap()
    }

    /// y ⊕ x ⊕ 0 over (x, y).
    fn tropical_line() -> NpPoly {
        NpPoly::var(2, 1)
            .trop_add(&NpPoly::var(2, 0))
            .unwrap()
            .trop_add(&NpPoly::constant(2, rat_int(0)))
            .unwrap()
    }

    #[test]
    fn polyhedron_dim_examples() {
        // half-line {x >= 0, y = 0} in R^2
        let p = Polyhedron::new(
            2,
            vec![LinConstraint::ge(af(0, &[1, 0])), LinConstraint::eq(af(0, &[0, 1]))],
        )
        .unwrap();
        assert_eq!(polyhedron_dim(&p).unwrap(), 1);

        let point = Polyhedron::new(
            2,
            vec![LinConstraint::eq(af(0, &[1, 0])), LinConstraint::eq(af(0, &[0, 1]))],
        )
        .unwrap();
        assert_eq!(polyhedron_dim(&point).unwrap(), 0);

        let empty = Polyhedron::new(
            2,
            vec![LinConstraint::ge(af(0, &[1, 0])), LinConstraint::ge(af(-1, &[-1, 0]))],
        )
        .unwrap();
        assert_eq!(polyhedron_dim(&empty).unwrap(), -1);

        let all = Polyhedron::new(2, vec![]).unwrap();
        assert_eq!(polyhedron_dim(&all).unwrap(), 2);

        // implicit equality: {x >= 0, -x >= 0} is the y-axis
        let axis = Polyhedron::new(
            2,
            vec![LinConstraint::ge(af(0, &[1, 0])), LinConstraint::ge(af(0, &[-1, 0]))],
        )
        .unwrap();
        assert_eq!(polyhedron_dim(&axis).unwrap(), 1);
    }

    #[test]
    fn sign_partition_single_function() {
        let cells = sign_partition(1, &[af(0, &[1])]).unwrap();
        assert_eq!(cells.len(), 3);
        assert_eq!(
            cells.iter().map(|c| c.signs[0]).collect::<Vec<_>>(),
            vec![Sign::Neg, Sign::Zero, Sign::Pos]
        );
    }

    #[test]
    fn sign_partition_two_coordinates() {
        let cells = sign_partition(2, &[af(0, &[1, 0]), af(0, &[0, 1])]).unwrap();
        assert_eq!(cells.len(), 9);
    }

    #[test]
    fn sign_partition_with_constant_function() {
        // {x, x-1, 1}: the constant has a fixed sign, so 5 cells
        let cells = sign_partition(1, &[af(0, &[1]), af(-1, &[1]), af(1, &[0])]).unwrap();
        assert_eq!(cells.len(), 5);
        for c in &cells {
            assert_eq!(c.signs[2], Sign::Pos);
            assert_eq!(c.signs.len(), 3);
        }
        let sign_rows: Vec<Vec<i8>> =
            cells.iter().map(|c| c.signs.iter().map(|s| s.value()).collect()).collect();
        assert_eq!(
            sign_rows,
            vec![
                vec![-1, -1, 1],
                vec![0, -1, 1],
                vec![1, -1, 1],
                vec![1, 0, 1],
                vec![1, 1, 1],
            ]
        );
    }

    #[test]
    fn sign_partition_dedupes_parallel_copies() {
        // 2x and -x are multiples of x: no extra splits, signs consistent
        let funcs = [af(0, &[1]), af(0, &[2]), af(0, &[-1])];
        let cells = sign_partition(1, &funcs).unwrap();
        assert_eq!(cells.len(), 3);
        for c in &cells {
            assert_eq!(c.signs[0], c.signs[1]);
            assert_eq!(c.signs[2], c.signs[0].flip());
        }
    }

    #[test]
    fn partition_covers_points_exactly_once() {
        let funcs = [af(0, &[1, -1]), af(-1, &[1, 0]), af(2, &[0, 1]), af(0, &[1, 1])];
        let cells = sign_partition(2, &funcs).unwrap();
        let mut points = Vec::new();
        for a in -40i64..40 {
            points.push(vec![rat(a, 7), rat(a * a % 13 - 6, 3)]);
        }
        for p in points {
            let hits =
                cells.iter().filter(|c| c.contains_by_signs(&funcs, &p)).count();
            assert_eq!(hits, 1, "point {p:?} lies in {hits} cells");
        }
    }

    #[test]
    fn witnesses_lie_in_their_cells() {
        let funcs = [af(0, &[1, -1]), af(-1, &[1, 0]), af(2, &[0, 1])];
        let cells = sign_partition(2, &funcs).unwrap();
        for c in &cells {
            assert!(c.contains_by_signs(&funcs, &c.witness));
            assert!(c.region.contains(&c.witness));
        }
    }

    #[test]
    fn prevariety_tropical_line() {
        let t = prevariety(&[tropical_line()]).unwrap();
        // 3 concurrent lines: 6 sectors + 6 rays + origin
        assert_eq!(t.cells.len(), 13);
        let in_t: Vec<&PrevarietyCell> = t.cells.iter().filter(|c| c.in_t).collect();
        assert_eq!(in_t.len(), 4);
        assert_eq!(in_t.iter().filter(|c| c.dim == 1).count(), 3);
        assert_eq!(in_t.iter().filter(|c| c.dim == 0).count(), 1);
        // every in-T witness is a tropical root
        for c in &in_t {
            assert!(t.polys[0].is_tropical_root(&c.cell.witness).unwrap());
        }
    }

    #[test]
    fn prevariety_single_monomial_is_empty() {
        let p = NpPoly::var(1, 0);
        let t = prevariety(&[p]).unwrap();
        assert!(t.cells.iter().all(|c| !c.in_t));
    }

    #[test]
    fn prevariety_x_plus_zero_is_origin() {
        let t = prevariety(&[x_plus_zero()]).unwrap();
        let in_t: Vec<&PrevarietyCell> = t.cells.iter().filter(|c| c.in_t).collect();
        assert_eq!(in_t.len(), 1);
        assert_eq!(in_t[0].dim, 0);
        assert_eq!(in_t[0].cell.witness, pt(&[0]));
    }

    #[test]
    fn essential_monomials_examples() {
        let p = x_plus_zero();
        assert_eq!(essential_monomials(&p), vec![0, 1]);

        // x^{⊗2} ⊕ x ⊕ 0: x is never strictly minimal
        let q = p.trop_mul(&p).unwrap();
        let keep = essential_monomials(&q);
        let kept: Vec<&Monomial> = keep.iter().map(|&i| &q.monomials()[i]).collect();
        assert_eq!(kept.len(), 2);
        assert!(kept.iter().all(|m| m.exps[0] != rat_int(1)));

        // 1⊗x ⊕ x: the shifted copy is dominated
        let r = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(1), vec![rat_int(1)]),
                Monomial::new(rat_int(0), vec![rat_int(1)]),
            ],
        )
        .unwrap();
        assert_eq!(essential_monomials(&r), vec![0]);
        assert_eq!(r.monomials()[0].coeff, rat_int(0));
    }

    #[test]
    fn reduction_preserves_eval() {
        let p = NpPoly::new(
            2,
            vec![
                Monomial::new(rat_int(0), vec![rat_int(2), rat_int(0)]),
                Monomial::new(rat_int(0), vec![rat_int(1), rat_int(0)]),
                Monomial::new(rat_int(0), vec![rat_int(0), rat_int(0)]),
                Monomial::new(rat_int(1), vec![rat_int(0), rat_int(1)]),
            ],
        )
        .unwrap();
        let r = reduce_poly(&p);
        for a in -5i64..5 {
            for b in -5i64..5 {
                let point = vec![rat(a, 2), rat(b, 3)];
                assert_eq!(p.eval(&point).unwrap(), r.eval(&point).unwrap());
            }
        }
    }

    #[test]
    fn poly_equal_examples() {
        let p = x_plus_zero();
        let sq = p.trop_mul(&p).unwrap(); // x^{⊗2} ⊕ x ⊕ 0
        let sq_reduced = NpPoly::new(
            1,
            vec![
                Monomial::new(rat_int(0), vec![rat_int(2)]),
                Monomial::new(rat_int(0), vec![rat_int(0)]),
            ],
        )
        .unwrap();
        assert!(poly_equal(&sq, &sq_reduced).unwrap());
        assert!(!poly_equal(&p, &NpPoly::var(1, 0)).unwrap());
        assert!(poly_equal(&p, &p).unwrap());
        assert!(poly_equal(&tropical_line(), &p).is_err());
    }

    #[test]
    fn skeleton_of_tropical_line() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let sk = extract_skeleton(&t).unwrap();
        assert_eq!(sk.vertices.len(), 1);
        assert_eq!(sk.vertices[0].point, pt(&[0, 0]));
        assert_eq!(sk.edges.len(), 3);
        for e in &sk.edges {
            match &e.geometry {
                EdgeGeometry::Ray { base, .. } => assert_eq!(base, &pt(&[0, 0])),
                other => panic!("expected ray, got {other:?}"),
            }
        }
        // ray directions are (1,0), (0,1), (1,1) up to normalization
        let mut dirs: Vec<Vec<Rat>> = sk
            .edges
            .iter()
            .map(|e| match &e.geometry {
                EdgeGeometry::Ray { direction, .. } => direction.clone(),
                _ => unreachable!(),
            })
            .collect();
        dirs.sort();
        let expected: Vec<Vec<Rat>> = vec![pt(&[-1, -1]), pt(&[0, 1]), pt(&[1, 0])];
        assert_eq!(dirs, expected);
    }

    #[test]
    fn skeleton_full_line() {
        // y ⊕ 0 over (x, y): T = {y = 0}, one full line
        let p = NpPoly::var(2, 1).trop_add(&NpPoly::constant(2, rat_int(0))).unwrap();
        let t = prevariety(&[p]).unwrap();
        let sk = extract_skeleton(&t).unwrap();
        assert!(sk.vertices.is_empty());
        assert_eq!(sk.edges.len(), 1);
        match &sk.edges[0].geometry {
            EdgeGeometry::Line { direction, .. } => assert_eq!(direction, &pt(&[1, 0])),
            other => panic!("expected line, got {other:?}"),
        }
    }

    #[test]
    fn skeleton_empty_prevariety() {
        let t = prevariety(&[NpPoly::var(1, 0)]).unwrap();
        let sk = extract_skeleton(&t).unwrap();
        assert!(sk.vertices.is_empty() && sk.edges.is_empty());
    }

    #[test]
    fn skeleton_rejects_high_dimension() {
        // the empty system leaves all of R^2 in T
        let t = prevariety(&[]).unwrap();
        // arity defaults to 0 for an empty system; build a real 2-dim case instead
        assert_eq!(t.cells.len(), 1);
        let two_dim = prevariety(&[NpPoly::constant(2, rat_int(0))
            .trop_add(&NpPoly::constant(2, rat_int(0)))
            .unwrap()])
        .unwrap();
        let _ = two_dim;
        // a segment-free has dim 2: use a polynomial pair whose common roots fill a quadrant?
        // prevarieties of a single polynomial are at most (n-1)-dimensional, so craft
        // a 3-variable instance: T(y ⊕ 0) in R^3 is the plane y = 0.
        let p = NpPoly::var(3, 1).trop_add(&NpPoly::constant(3, rat_int(0))).unwrap();
        let t3 = prevariety(&[p]).unwrap();
        let err = extract_skeleton(&t3).unwrap_err();
        match err {
            GeomError::NotACurve { dim, .. } => assert_eq!(dim, 2),
            other => panic!("expected NotACurve, got {other:?}"),
        }
    }

    #[test]
    fn segment_extraction() {
        // two tropical lines with shifted vertices: the union contains a
        // diagonal segment from (0,0) to (1,1)
        let l1 = tropical_line();
        let l2 = NpPoly::var(2, 1)
            .trop_add(&NpPoly::var(2, 0))
            .unwrap()
            .trop_add(&NpPoly::constant(2, rat_int(1)))
            .unwrap();
        let product = l1.trop_mul(&l2).unwrap();
        let t = prevariety(&[product]).unwrap();
        let sk = extract_skeleton(&t).unwrap();
        // cross-monomial differences split the diagonal at (1/2, 1/2); the
        // two halves together cover (0,0)-(1,1)
        let mut diag_ends: Vec<(Vec<Rat>, Vec<Rat>)> = sk
            .edges
            .iter()
            .filter_map(|e| match &e.geometry {
                EdgeGeometry::Segment { a, b } if a[0] == a[1] && b[0] == b[1] => {
                    Some((a.clone(), b.clone()))
                }
                _ => None,
            })
            .collect();
        diag_ends.sort();
        let half = vec![rat(1, 2), rat(1, 2)];
        assert_eq!(
            diag_ends,
            vec![(pt(&[0, 0]), half.clone()), (half, pt(&[1, 1]))],
            "diagonal should split at (1/2, 1/2)"
        );
    }
}
