//! Exact linear programming over the rationals.
//!
//! A dense two-phase simplex with Bland's anti-cycling rule. No big-M: phase
//! one minimizes the sum of artificial variables, phase two optimizes the real
//! objective with artificial columns banned from entering. Free variables are
//! split into differences of nonnegative ones.
//!
//! Arithmetic runs first over small machine rationals with overflow checking;
//! any overflow restarts the solve over arbitrary-precision rationals, so the
//! result is always exact.

use crate::geom::{GeomError, LinConstraint, Relation};
use crate::poly::AffineFunc;
use crate::rat::Rat;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpStatus {
    Optimal { value: Rat, witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

/// Outcome of a strict-feasibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub witness: Option<Vec<Rat>>,
}

/// Scalar abstraction for the simplex: `None` signals overflow and triggers
/// the arbitrary-precision retry.
trait LpNum: Clone + PartialEq + PartialOrd + Sized {
    fn from_rat(r: &Rat) -> Option<Self>;
    fn to_rat(&self) -> Rat;
    fn lp_zero() -> Self;
    fn lp_one() -> Self;
    fn lp_is_zero(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn is_pos(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl LpNum for Rat {
    fn from_rat(r: &Rat) -> Option<Self> {
        Some(r.clone())
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
    fn lp_zero() -> Self {
        Zero::zero()
    }
    fn lp_one() -> Self {
        One::one()
    }
    fn lp_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Reduced fraction over `i128` with a positive denominator. Every operation
/// is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq)]
struct R128 {
    n: i128,
    d: i128,
}

impl R128 {
    fn make(n: i128, d: i128) -> Option<R128> {
        if d == 0 || n == i128::MIN || d == i128::MIN {
            return None;
        }
        let (n, d) = if d < 0 { (n.checked_neg()?, d.checked_neg()?) } else { (n, d) };
        let g = n.gcd(&d);
        Some(R128 { n: n / g, d: d / g })
    }
}

impl PartialOrd for R128 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        // denominators positive, so cross-multiplication keeps the order;
        // fall back to wide arithmetic only when needed
        let l = self.n.checked_mul(other.d);
        let r = other.n.checked_mul(self.d);
        match (l, r) {
            (Some(l), Some(r)) => l.partial_cmp(&r),
            _ => self.to_rat().partial_cmp(&other.to_rat()),
        }
    }
}

impl LpNum for R128 {
    fn from_rat(r: &Rat) -> Option<Self> {
        let n = r.numer().to_i128()?;
        let d = r.denom().to_i128()?;
        R128::make(n, d)
    }
    fn to_rat(&self) -> Rat {
        Rat::new(self.n.into(), self.d.into())
    }
    fn lp_zero() -> Self {
        R128 { n: 0, d: 1 }
    }
    fn lp_one() -> Self {
        R128 { n: 1, d: 1 }
    }
    fn lp_is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_neg(&self) -> bool {
        self.n < 0
    }
    fn is_pos(&self) -> bool {
        self.n > 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        let g = self.d.gcd(&o.d);
        let lhs = self.n.checked_mul(o.d / g)?;
        let rhs = o.n.checked_mul(self.d / g)?;
        R128::make(lhs.checked_add(rhs)?, (self.d / g).checked_mul(o.d)?)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.add(&R128 { n: o.n.checked_neg()?, d: o.d })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        let g1 = self.n.gcd(&o.d);
        let g2 = o.n.gcd(&self.d);
        let n = (self.n / g1).checked_mul(o.n / g2)?;
        let d = (self.d / g2).checked_mul(o.d / g1)?;
        R128::make(n, d)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.n == 0 {
            return None;
        }
        self.mul(&R128::make(o.d, o.n)?)
    }
    fn neg(&self) -> Option<Self> {
        Some(R128 { n: self.n.checked_neg()?, d: self.d })
    }
}

/// One row of the problem in original (free) variables: `gradient · x (= | >=) rhs`.
struct Row {
    gradient: Vec<Rat>,
    rhs: Rat,
    equality: bool,
}

struct Problem {
    dim: usize,
    rows: Vec<Row>,
    /// Objective over original variables, always minimized.
    objective: Vec<Rat>,
}

enum RawStatus {
    Optimal { witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

const MAX_PIVOTS: usize = 2_000_000;

fn simplex<T: LpNum>(p: &Problem) -> Option<RawStatus> {
    let m = p.rows.len();
    let n2 = 2 * p.dim;
    let n_slack = p.rows.iter().filter(|r| !r.equality).count();
    let art_start = n2 + n_slack;
    let cols = art_start + m;

    // tableau rows: structural | slack | artificial | rhs
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;
    for (i, row) in p.rows.iter().enumerate() {
        let mut r: Vec<T> = vec![T::lp_zero(); cols + 1];
        let flip = row.rhs.is_negative();
        for (j, g) in row.gradient.iter().enumerate() {
            let g = if flip { -g } else { g.clone() };
            r[2 * j] = T::from_rat(&g)?;
            r[2 * j + 1] = T::from_rat(&g)?.neg()?;
        }
        if !row.equality {
            // gradient·x - s = rhs, flipped along with the row
            r[n2 + slack_idx] = if flip { T::lp_one() } else { T::lp_one().neg()? };
            slack_idx += 1;
        }
        r[art_start + i] = T::lp_one();
        let rhs = if flip { -&row.rhs } else { row.rhs.clone() };
        r[cols] = T::from_rat(&rhs)?;
        tab.push(r);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| art_start + i).collect();

    // reduced-cost row for given column costs
    let recompute_obj = |tab: &[Vec<T>], basis: &[usize], cost: &dyn Fn(usize) -> T| -> Option<Vec<T>> {
        let mut obj: Vec<T> = (0..cols).map(cost).collect();
        obj.push(T::lp_zero());
        for (r, &b) in basis.iter().enumerate() {
            let cb = cost(b);
            if cb.lp_is_zero() {
                continue;
            }
            for j in 0..=cols {
                obj[j] = obj[j].sub(&cb.mul(&tab[r][j])?)?;
            }
        }
        Some(obj)
    };

    let pivot = |tab: &mut Vec<Vec<T>>, obj: &mut Vec<T>, basis: &mut Vec<usize>, r: usize, c: usize| -> Option<()> {
        let piv = tab[r][c].clone();
        for j in 0..=cols {
            tab[r][j] = tab[r][j].div(&piv)?;
        }
        for r2 in 0..m {
            if r2 == r || tab[r2][c].lp_is_zero() {
                continue;
            }
            let f = tab[r2][c].clone();
            for j in 0..=cols {
                let delta = f.mul(&tab[r][j])?;
                tab[r2][j] = tab[r2][j].sub(&delta)?;
            }
        }
        if !obj[c].lp_is_zero() {
            let f = obj[c].clone();
            for j in 0..=cols {
                let delta = f.mul(&tab[r][j])?;
                obj[j] = obj[j].sub(&delta)?;
            }
        }
        basis[r] = c;
        Some(())
    };

    // Bland: entering = lowest eligible index with negative reduced cost;
    // leaving = min ratio, ties broken by lowest basis variable index.
    let run = |tab: &mut Vec<Vec<T>>,
               obj: &mut Vec<T>,
               basis: &mut Vec<usize>,
               allowed: &dyn Fn(usize) -> bool|
     -> Option<bool> {
        for _ in 0..MAX_PIVOTS {
            let mut entering = None;
            for j in 0..cols {
                if allowed(j) && obj[j].is_neg() {
                    entering = Some(j);
                    break;
                }
            }
            let c = match entering {
                Some(c) => c,
                None => return Some(true), // optimal
            };
            let mut best: Option<(T, usize, usize)> = None; // (ratio, basis var, row)
            for r in 0..m {
                if tab[r][c].is_pos() {
                    let ratio = tab[r][cols].div(&tab[r][c])?;
                    let replace = match &best {
                        None => true,
                        Some((bratio, bvar, _)) => {
                            ratio < *bratio || (ratio == *bratio && basis[r] < *bvar)
                        }
                    };
                    if replace {
                        best = Some((ratio, basis[r], r));
                    }
                }
            }
            let (_, _, r) = match best {
                Some(b) => b,
                None => return Some(false), // unbounded
            };
            pivot(tab, obj, basis, r, c)?;
        }
        panic!("simplex did not terminate under Bland's rule");
    };

    // phase 1: minimize the sum of artificials
    let phase1_cost = |j: usize| if j >= art_start { T::lp_one() } else { T::lp_zero() };
    let mut obj = recompute_obj(&tab, &basis, &phase1_cost)?;
    let finished = run(&mut tab, &mut obj, &mut basis, &|_| true)?;
    debug_assert!(finished, "phase 1 is bounded below by zero");
    let mut infeas = T::lp_zero();
    for (r, &b) in basis.iter().enumerate() {
        if b >= art_start {
            infeas = infeas.add(&tab[r][cols])?;
        }
    }
    if infeas.is_pos() {
        return Some(RawStatus::Infeasible);
    }

    // Drive basic artificials (all at value 0) out of the basis; pivoting on
    // a nonzero entry of a zero-rhs row keeps feasibility even when the
    // entry is negative. Rows with no nonzero structural entry are redundant
    // and stay inert: every later column entry in them is zero.
    for r in 0..m {
        if basis[r] >= art_start {
            if let Some(c) = (0..art_start).find(|&c| !tab[r][c].lp_is_zero()) {
                pivot(&mut tab, &mut obj, &mut basis, r, c)?;
            }
        }
    }

    // phase 2: the real objective, artificials banned from entering
    let obj_rat: Vec<Rat> = p.objective.clone();
    let phase2_cost = |j: usize| -> T {
        if j < n2 {
            let v = &obj_rat[j / 2];
            let v = if j % 2 == 0 { v.clone() } else { -v };
            T::from_rat(&v).unwrap_or_else(T::lp_zero)
        } else {
            T::lp_zero()
        }
    };
    // conversion failure in costs must abort the fast path
    for (j, g) in obj_rat.iter().enumerate() {
        if T::from_rat(g).is_none() {
            let _ = j;
            return None;
        }
    }
    let mut obj2 = recompute_obj(&tab, &basis, &phase2_cost)?;
    let finished = run(&mut tab, &mut obj2, &mut basis, &|j| j < art_start)?;
    if !finished {
        return Some(RawStatus::Unbounded);
    }

    let mut vals: Vec<T> = vec![T::lp_zero(); cols];
    for (r, &b) in basis.iter().enumerate() {
        vals[b] = tab[r][cols].clone();
    }
    let witness: Vec<Rat> =
        (0..p.dim).map(|j| vals[2 * j].to_rat() - vals[2 * j + 1].to_rat()).collect();
    Some(RawStatus::Optimal { witness })
}

fn solve_problem(p: &Problem) -> RawStatus {
    if let Some(st) = simplex::<R128>(p) {
        return st;
    }
    simplex::<Rat>(p).expect("exact rational simplex cannot overflow")
}

fn check_dims(constraints: &[LinConstraint], dim: usize) -> Result<(), GeomError> {
    for c in constraints {
        if c.func.dim() != dim {
            return Err(GeomError::DimensionMismatch { expected: dim, found: c.func.dim() });
        }
    }
    Ok(())
}

/// Solves `min`/`max` of an affine objective subject to non-strict
/// constraints. Returns the exact optimum with a witness point, or a
/// certified infeasible/unbounded status.
pub fn lp_solve(
    constraints: &[LinConstraint],
    objective: &AffineFunc,
    sense: Sense,
) -> Result<LpStatus, GeomError> {
    let dim = objective.dim();
    check_dims(constraints, dim)?;
    if constraints.iter().any(|c| c.relation == Relation::Gt) {
        return Err(GeomError::StrictConstraintInLp);
    }
    let rows = constraints
        .iter()
        .map(|c| Row {
            gradient: c.func.gradient.clone(),
            rhs: -c.func.constant.clone(),
            equality: c.relation == Relation::Eq,
        })
        .collect();
    let obj_vec: Vec<Rat> = match sense {
        Sense::Minimize => objective.gradient.clone(),
        Sense::Maximize => objective.gradient.iter().map(|g| -g).collect(),
    };
    let problem = Problem { dim, rows, objective: obj_vec };
    Ok(match solve_problem(&problem) {
        RawStatus::Infeasible => LpStatus::Infeasible,
        RawStatus::Unbounded => LpStatus::Unbounded,
        RawStatus::Optimal { witness } => {
            let value = objective.eval(&witness);
            LpStatus::Optimal { value, witness }
        }
    })
}

/// Decides whether a system mixing strict, non-strict, and equality
/// constraints has a point satisfying every strict constraint strictly.
///
/// Strictness is reduced to one LP: maximize a slack `t <= 1` with each
/// strict constraint relaxed to `g(x) >= t`; the system is feasible exactly
/// when the optimum is positive, and the optimal point is a witness.
pub fn relative_interior_feasible(
    dim: usize,
    constraints: &[LinConstraint],
) -> Result<Feasibility, GeomError> {
    check_dims(constraints, dim)?;
    let mut rows = Vec::with_capacity(constraints.len() + 1);
    for c in constraints {
        let mut gradient = c.func.gradient.clone();
        gradient.push(match c.relation {
            Relation::Gt => -Rat::one(),
            _ => Rat::zero(),
        });
        rows.push(Row {
            gradient,
            rhs: -c.func.constant.clone(),
            equality: c.relation == Relation::Eq,
        });
    }
    // t <= 1
    let mut t_row = vec![Rat::zero(); dim + 1];
    t_row[dim] = -Rat::one();
    rows.push(Row { gradient: t_row, rhs: -Rat::one(), equality: false });

    let mut objective = vec![Rat::zero(); dim + 1];
    objective[dim] = -Rat::one(); // maximize t == minimize -t
    let problem = Problem { dim: dim + 1, rows, objective };
    match solve_problem(&problem) {
        RawStatus::Infeasible => Ok(Feasibility { feasible: false, witness: None }),
        RawStatus::Unbounded => unreachable!("slack is bounded above by 1"),
        RawStatus::Optimal { witness } => {
            let t = witness[dim].clone();
            if t.is_positive() {
                Ok(Feasibility { feasible: true, witness: Some(witness[..dim].to_vec()) })
            } else {
                Ok(Feasibility { feasible: false, witness: None })
            }
        }
    }
}
