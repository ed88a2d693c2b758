//! Reduction from 3-SAT to resolubility of tropical systems in one variable
//! `x` and several indeterminates.
//!
//! For variables `u_1..u_n` the system gets `y_i ⊗ z_i ⊕ x` per variable;
//! for each clause it gets the three gadget polynomials
//! `t_1 ⊕ t_2 ⊕ t_3 ⊕ v_j`, `v_j ⊕ x ⊕ w_j`, and `w_j ⊕ x ⊕ 0`, where a
//! positive literal `u_m` maps to `y_m` and a negative one `¬u_k` to `z_k`.
//! The constant monomial 0 encodes truth and `x` encodes falsity.

use crate::curve::{min_tie_witness, np_to_pl, pl_to_np, CurveError, Pl1d};
use crate::poly::{Monomial, NpPoly, PolyError};
use crate::rat::Rat;
use crate::resolve::enumerate_subsets;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatError {
    /// A clause must hold exactly three literals with indices in range.
    MalformedClause { index: usize },
    /// `assignment_to_resolution` needs a satisfying assignment.
    UnsatisfiedAssignment,
    /// The resolution map misses an indeterminate of the system.
    MissingIndeterminate(String),
    /// An assignment indeterminate reduced to something other than 0 or x.
    NonCanonical(String),
    Dimacs(String),
    Poly(PolyError),
    Curve(CurveError),
}

impl fmt::Display for SatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatError::MalformedClause { index } => write!(f, "malformed clause {index}"),
            SatError::UnsatisfiedAssignment => {
                write!(f, "assignment does not satisfy the formula")
            }
            SatError::MissingIndeterminate(name) => write!(f, "missing indeterminate {name}"),
            SatError::NonCanonical(name) => {
                write!(f, "indeterminate {name} is not a canonical certificate")
            }
            SatError::Dimacs(msg) => write!(f, "dimacs: {msg}"),
            SatError::Poly(e) => write!(f, "{e}"),
            SatError::Curve(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SatError {}

impl From<PolyError> for SatError {
    fn from(e: PolyError) -> Self {
        SatError::Poly(e)
    }
}

impl From<CurveError> for SatError {
    fn from(e: CurveError) -> Self {
        SatError::Curve(e)
    }
}

/// A 3-CNF: clauses of exactly three signed literals over `u_1..u_num_vars`
/// in DIMACS convention (`-2` is `¬u_2`). Repeated literals are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    pub num_vars: usize,
    pub clauses: Vec<[i64; 3]>,
}

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<[i64; 3]>) -> Result<Self, SatError> {
        for (index, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(SatError::MalformedClause { index });
                }
            }
        }
        Ok(Cnf3 { num_vars, clauses })
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|clause| {
                clause.iter().any(|&lit| {
                    let value = assignment[lit.unsigned_abs() as usize - 1];
                    if lit > 0 {
                        value
                    } else {
                        !value
                    }
                })
            })
    }
}

/// One term of a gadget polynomial: `coeff ⊗ x^{⊗x_exp} ⊗ Π indets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SysTerm {
    pub coeff: Rat,
    pub x_exp: Rat,
    /// Indices into the system's indeterminate list (a multiset).
    pub indets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SysPoly {
    pub name: String,
    pub terms: Vec<SysTerm>,
}

/// A system of tropical polynomials in one variable `x` and named
/// indeterminates, each polynomial multilinear in the indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalSystem {
    pub indeterminates: Vec<String>,
    pub polys: Vec<SysPoly>,
}

fn term_x(exp: i64) -> SysTerm {
    SysTerm {
        coeff: Rat::zero(),
        x_exp: Rat::from_integer(BigInt::from(exp)),
        indets: Vec::new(),
    }
}

fn term_indet(idx: usize) -> SysTerm {
    SysTerm { coeff: Rat::zero(), x_exp: Rat::zero(), indets: vec![idx] }
}

/// Builds the gadget system for a 3-CNF. Indeterminates come out in the
/// order `y_1..y_n, z_1..z_n, v_1, w_1, ..., v_m, w_m`.
pub fn reduce_3sat(cnf: &Cnf3) -> Result<TropicalSystem, SatError> {
    let n = cnf.num_vars;
    let mut indeterminates: Vec<String> = Vec::with_capacity(2 * n + 2 * cnf.clauses.len());
    for i in 1..=n {
        indeterminates.push(format!("y{i}"));
    }
    for i in 1..=n {
        indeterminates.push(format!("z{i}"));
    }
    let mut polys = Vec::new();
    for i in 0..n {
        polys.push(SysPoly {
            name: format!("var{}", i + 1),
            terms: vec![
                SysTerm { coeff: Rat::zero(), x_exp: Rat::zero(), indets: vec![i, n + i] },
                term_x(1),
            ],
        });
    }
    for (j, clause) in cnf.clauses.iter().enumerate() {
        let v_idx = indeterminates.len();
        indeterminates.push(format!("v{}", j + 1));
        let w_idx = indeterminates.len();
        indeterminates.push(format!("w{}", j + 1));
        let mut clause_terms = Vec::with_capacity(4);
        for &lit in clause {
            if lit == 0 || lit.unsigned_abs() as usize > n {
                return Err(SatError::MalformedClause { index: j });
            }
            let var = lit.unsigned_abs() as usize - 1;
            clause_terms.push(term_indet(if lit > 0 { var } else { n + var }));
        }
        clause_terms.push(term_indet(v_idx));
        polys.push(SysPoly { name: format!("clause{}a", j + 1), terms: clause_terms });
        polys.push(SysPoly {
            name: format!("clause{}b", j + 1),
            terms: vec![term_indet(v_idx), term_x(1), term_indet(w_idx)],
        });
        polys.push(SysPoly {
            name: format!("clause{}c", j + 1),
            terms: vec![term_indet(w_idx), term_x(1), term_x(0)],
        });
    }
    Ok(TropicalSystem { indeterminates, polys })
}

/// Univariate tropical polynomials assigned to the named indeterminates.
pub type ResolutionMap = BTreeMap<String, NpPoly>;

fn x_monomial() -> NpPoly {
    NpPoly::var(1, 0)
}

fn zero_poly() -> NpPoly {
    NpPoly::constant(1, Rat::zero())
}

fn x_plus_zero() -> NpPoly {
    x_monomial().trop_add(&zero_poly()).expect("same arity")
}

/// The proof-side certificate for a satisfying assignment: `y_i = 0,
/// z_i = x` when `u_i` is true (swapped otherwise), `w_j = x ⊕ 0`, and
/// `v_j` the tropical sum of the three substituted literal values.
pub fn assignment_to_resolution(
    cnf: &Cnf3,
    assignment: &[bool],
) -> Result<ResolutionMap, SatError> {
    if !cnf.satisfied_by(assignment) {
        return Err(SatError::UnsatisfiedAssignment);
    }
    let mut map = ResolutionMap::new();
    for (i, &value) in assignment.iter().enumerate() {
        let (y, z) = if value {
            (zero_poly(), x_monomial())
        } else {
            (x_monomial(), zero_poly())
        };
        map.insert(format!("y{}", i + 1), y);
        map.insert(format!("z{}", i + 1), z);
    }
    for (j, clause) in cnf.clauses.iter().enumerate() {
        let mut v: Option<NpPoly> = None;
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let name =
                if lit > 0 { format!("y{}", var + 1) } else { format!("z{}", var + 1) };
            let value = map.get(&name).expect("assigned above").clone();
            v = Some(match v {
                None => value,
                Some(acc) => acc.trop_add(&value)?,
            });
        }
        map.insert(format!("v{}", j + 1), v.expect("three literals"));
        map.insert(format!("w{}", j + 1), x_plus_zero());
    }
    Ok(map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SysVerify {
    pub ok: bool,
    /// An x where some polynomial's term minimum is attained once.
    pub witness: Option<Rat>,
}

fn poly_terms_as_pl(
    poly: &SysPoly,
    values: &[Option<Pl1d>],
) -> Result<Vec<Pl1d>, SatError> {
    let mut terms = Vec::with_capacity(poly.terms.len());
    for term in &poly.terms {
        let mut pl = Pl1d::affine(term.x_exp.clone(), term.coeff.clone());
        for &idx in &term.indets {
            let value = values[idx].as_ref().expect("caller checks coverage");
            pl = pl.add(value);
        }
        terms.push(pl);
    }
    Ok(terms)
}

/// Substitutes the map into every polynomial and demands that each term
/// minimum is attained at least twice at every real `x`. Exact, via the
/// one-dimensional sign partition of the substituted terms.
pub fn verify_system_resolution(
    sys: &TropicalSystem,
    map: &ResolutionMap,
) -> Result<SysVerify, SatError> {
    let mut values: Vec<Option<Pl1d>> = Vec::with_capacity(sys.indeterminates.len());
    for name in &sys.indeterminates {
        match map.get(name) {
            None => return Err(SatError::MissingIndeterminate(name.clone())),
            Some(poly) => values.push(Some(np_to_pl(poly)?)),
        }
    }
    for poly in &sys.polys {
        let terms = poly_terms_as_pl(poly, &values)?;
        if let Some(witness) = min_tie_witness(&terms) {
            return Ok(SysVerify { ok: false, witness: Some(witness) });
        }
    }
    Ok(SysVerify { ok: true, witness: None })
}

/// Reads the assignment off a verified map: `u_i` is true exactly when
/// `y_i` reduces to the constant 0. Reductions other than `0` or `x` are
/// rejected as non-canonical certificates.
pub fn extract_assignment(map: &ResolutionMap) -> Result<Vec<bool>, SatError> {
    let mut out = Vec::new();
    for i in 1.. {
        let name = format!("y{i}");
        let Some(poly) = map.get(&name) else { break };
        let reduced = pl_to_np(&np_to_pl(poly)?)?;
        if reduced == zero_poly() {
            out.push(true);
        } else if reduced == x_monomial() {
            out.push(false);
        } else {
            return Err(SatError::NonCanonical(name));
        }
    }
    Ok(out)
}

/// Exhaustive search for a resolution over the structured certificate pool:
/// candidate values per indeterminate are tropical sums of at most
/// `support_bound` monomials `x^{⊗b}` with integer `0 <= b <= degree_bound`.
/// Indeterminates are assigned in system order with backtracking; each
/// polynomial is checked as soon as all its indeterminates have values.
/// Returns the lexicographically first verified map.
pub fn brute_force_system(
    sys: &TropicalSystem,
    degree_bound: usize,
    support_bound: usize,
) -> Option<ResolutionMap> {
    let pool: Vec<Monomial> = (0..=degree_bound)
        .map(|b| Monomial::new(Rat::zero(), vec![Rat::from_integer(BigInt::from(b))]))
        .collect();
    let mut candidates: Vec<NpPoly> = Vec::new();
    {
        let mut subset = Vec::new();
        let _ = enumerate_subsets::<()>(
            pool.len(),
            support_bound.min(pool.len()),
            &mut subset,
            &mut |subset| {
                candidates.push(
                    NpPoly::new(1, subset.iter().map(|&i| pool[i].clone()).collect())
                        .expect("pool monomials are univariate"),
                );
                Ok(())
            },
        );
    }
    let candidate_pls: Vec<Pl1d> =
        candidates.iter().map(|c| np_to_pl(c).expect("univariate")).collect();

    let s = sys.indeterminates.len();
    // polynomials become checkable once their highest indeterminate is set
    let mut ready_at: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
    for (pi, poly) in sys.polys.iter().enumerate() {
        let highest = poly.terms.iter().flat_map(|t| t.indets.iter().copied()).max();
        match highest {
            None => ready_at[0].push(pi),
            Some(h) => ready_at[h + 1].push(pi),
        }
    }
    let mut values: Vec<Option<Pl1d>> = vec![None; s];
    for &pi in &ready_at[0] {
        let terms = poly_terms_as_pl(&sys.polys[pi], &values).expect("no indets used");
        if min_tie_witness(&terms).is_some() {
            return None;
        }
    }

    fn search(
        sys: &TropicalSystem,
        candidates: &[NpPoly],
        candidate_pls: &[Pl1d],
        ready_at: &[Vec<usize>],
        values: &mut Vec<Option<Pl1d>>,
        chosen: &mut Vec<usize>,
        k: usize,
    ) -> bool {
        if k == values.len() {
            return true;
        }
        for c in 0..candidates.len() {
            values[k] = Some(candidate_pls[c].clone());
            chosen.push(c);
            let ok = ready_at[k + 1].iter().all(|&pi| {
                let terms =
                    poly_terms_as_pl(&sys.polys[pi], values).expect("indets covered");
                min_tie_witness(&terms).is_none()
            });
            if ok && search(sys, candidates, candidate_pls, ready_at, values, chosen, k + 1) {
                return true;
            }
            chosen.pop();
            values[k] = None;
        }
        false
    }

    let mut chosen = Vec::new();
    if search(sys, &candidates, &candidate_pls, &ready_at, &mut values, &mut chosen, 0) {
        let mut map = ResolutionMap::new();
        for (name, &c) in sys.indeterminates.iter().zip(&chosen) {
            map.insert(name.clone(), candidates[c].clone());
        }
        Some(map)
    } else {
        None
    }
}

/// Reads a DIMACS CNF ("p cnf" header, clauses terminated by 0); every
/// clause must have exactly three literals.
pub fn parse_dimacs(text: &str) -> Result<Cnf3, SatError> {
    let mut num_vars: Option<usize> = None;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() < 3 || fields[0] != "cnf" {
                return Err(SatError::Dimacs(format!("bad problem line `{line}`")));
            }
            num_vars = Some(
                fields[1]
                    .parse()
                    .map_err(|_| SatError::Dimacs(format!("bad variable count `{}`", fields[1])))?,
            );
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i64 =
                tok.parse().map_err(|_| SatError::Dimacs(format!("bad literal `{tok}`")))?;
            if lit == 0 {
                let c: [i64; 3] = current
                    .clone()
                    .try_into()
                    .map_err(|_| SatError::Dimacs("clause is not a 3-clause".to_string()))?;
                clauses.push(c);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        return Err(SatError::Dimacs("unterminated clause".to_string()));
    }
    let num_vars = num_vars.ok_or_else(|| SatError::Dimacs("missing p cnf header".to_string()))?;
    Cnf3::new(num_vars, clauses)
}

/// The system read as plain tropical polynomials over `(x, indets...)`,
/// with one exponent slot per indeterminate.
pub fn system_as_polys(sys: &TropicalSystem) -> (Vec<String>, Vec<(String, NpPoly)>) {
    let mut vars = vec!["x".to_string()];
    vars.extend(sys.indeterminates.iter().cloned());
    let arity = vars.len();
    let polys = sys
        .polys
        .iter()
        .map(|p| {
            let monomials = p
                .terms
                .iter()
                .map(|t| {
                    let mut exps = vec![Rat::zero(); arity];
                    exps[0] = t.x_exp.clone();
                    for &idx in &t.indets {
                        exps[idx + 1] += Rat::one();
                    }
                    Monomial::new(t.coeff.clone(), exps)
                })
                .collect();
            (p.name.clone(), NpPoly::new(arity, monomials).expect("terms exist"))
        })
        .collect();
    (vars, polys)
}
