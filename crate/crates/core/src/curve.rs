//! Tropical curves and their resolution by monotone edge paths.
//!
//! A prevariety of dimension at most 1 over variables `(x, y_1, ..., y_{n-1})`
//! becomes a [`CurveModel`]: classified edges with exact slopes `dy_j/dx`.
//! The resolution graph has the non-vertical edges as nodes and links two
//! edges sharing an endpoint when x advances and every coordinate slope does
//! not increase; paths from left-unbounded edges to right-unbounded edges are
//! exactly the resolutions. Dropping the slope condition yields rational
//! resolutions through the difference-of-convex decomposition of univariate
//! piecewise-linear functions.

use crate::geom::{EdgeGeometry, GeomError, Prevariety, Skeleton};
use crate::poly::{Monomial, NpPoly, PolyError};
use crate::rat::Rat;
use crate::resolve::{RationalPl, ResolveError};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    Geom(GeomError),
    Poly(PolyError),
    /// Conversion to a tropical polynomial needs non-increasing slopes.
    NotMinConvex,
    /// Breakpoints must strictly increase and match the slope count.
    MalformedPl,
    /// The system and the resolution vector disagree on the variable count.
    ArityMismatch { expected: usize, found: usize },
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::Geom(e) => write!(f, "{e}"),
            CurveError::Poly(e) => write!(f, "{e}"),
            CurveError::NotMinConvex => write!(f, "function is not a min of affine pieces"),
            CurveError::MalformedPl => write!(f, "malformed piecewise-linear data"),
            CurveError::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl std::error::Error for CurveError {}

impl From<GeomError> for CurveError {
    fn from(e: GeomError) -> Self {
        CurveError::Geom(e)
    }
}

impl From<PolyError> for CurveError {
    fn from(e: PolyError) -> Self {
        CurveError::Poly(e)
    }
}

/// A univariate continuous piecewise-linear function: `k` breakpoints,
/// `k + 1` slopes, and the value at the first breakpoint (at 0 when affine).
/// Breakpoints with no slope change are normalized away, so the
/// representation is canonical and derived equality is functional equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pl1d {
    breakpoints: Vec<Rat>,
    slopes: Vec<Rat>,
    anchor: Rat,
}

fn eval_raw(breakpoints: &[Rat], slopes: &[Rat], anchor: &Rat, t: &Rat) -> Rat {
    if breakpoints.is_empty() {
        return anchor + &slopes[0] * t;
    }
    if *t <= breakpoints[0] {
        return anchor + &slopes[0] * (t - &breakpoints[0]);
    }
    let mut value = anchor.clone();
    let mut prev = breakpoints[0].clone();
    for i in 1..breakpoints.len() {
        if *t <= breakpoints[i] {
            return value + &slopes[i] * (t - &prev);
        }
        value += &slopes[i] * (&breakpoints[i] - &prev);
        prev = breakpoints[i].clone();
    }
    value + slopes.last().expect("nonempty") * (t - &prev)
}

impl Pl1d {
    pub fn new(breakpoints: Vec<Rat>, slopes: Vec<Rat>, anchor: Rat) -> Result<Self, CurveError> {
        if slopes.len() != breakpoints.len() + 1 {
            return Err(CurveError::MalformedPl);
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CurveError::MalformedPl);
        }
        // drop breakpoints with no slope change, re-anchoring at the new head
        let mut kept_bps: Vec<Rat> = Vec::with_capacity(breakpoints.len());
        let mut kept_slopes: Vec<Rat> = vec![slopes[0].clone()];
        for (i, bp) in breakpoints.iter().enumerate() {
            if slopes[i + 1] != *kept_slopes.last().expect("nonempty") {
                kept_bps.push(bp.clone());
                kept_slopes.push(slopes[i + 1].clone());
            }
        }
        let reference = kept_bps.first().cloned().unwrap_or_else(Rat::zero);
        let anchor = eval_raw(&breakpoints, &slopes, &anchor, &reference);
        Ok(Pl1d { breakpoints: kept_bps, slopes: kept_slopes, anchor })
    }

    /// The affine function `value_at_zero + slope * t`.
    pub fn affine(slope: Rat, value_at_zero: Rat) -> Self {
        Pl1d { breakpoints: Vec::new(), slopes: vec![slope], anchor: value_at_zero }
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn slopes(&self) -> &[Rat] {
        &self.slopes
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        eval_raw(&self.breakpoints, &self.slopes, &self.anchor, t)
    }

    /// Slope on the open interval containing `t`, which must not be a
    /// breakpoint.
    fn slope_at(&self, t: &Rat) -> &Rat {
        let idx = self.breakpoints.iter().filter(|b| *b < t).count();
        &self.slopes[idx]
    }

    pub fn is_min_convex(&self) -> bool {
        self.slopes.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn scale(&self, r: &Rat) -> Pl1d {
        Pl1d::new(
            self.breakpoints.clone(),
            self.slopes.iter().map(|s| s * r).collect(),
            &self.anchor * r,
        )
        .expect("scaling preserves shape")
    }

    pub fn add(&self, other: &Pl1d) -> Pl1d {
        let mut bps: Vec<Rat> = self.breakpoints.clone();
        bps.extend(other.breakpoints.iter().cloned());
        bps.sort();
        bps.dedup();
        let mut slopes = Vec::with_capacity(bps.len() + 1);
        for i in 0..=bps.len() {
            // a point strictly inside interval i
            let probe = if bps.is_empty() {
                Rat::zero()
            } else if i == 0 {
                &bps[0] - Rat::one()
            } else if i == bps.len() {
                &bps[i - 1] + Rat::one()
            } else {
                (&bps[i - 1] + &bps[i]) / Rat::from_integer(2.into())
            };
            slopes.push(self.slope_at(&probe) + other.slope_at(&probe));
        }
        let reference = bps.first().cloned().unwrap_or_else(Rat::zero);
        let anchor = self.eval(&reference) + other.eval(&reference);
        Pl1d::new(bps, slopes, anchor).expect("merged breakpoints are increasing")
    }

    pub fn add_constant(&self, c: &Rat) -> Pl1d {
        Pl1d { breakpoints: self.breakpoints.clone(), slopes: self.slopes.clone(), anchor: &self.anchor + c }
    }

    pub fn sub(&self, other: &Pl1d) -> Pl1d {
        self.add(&other.scale(&-Rat::one()))
    }
}

/// Splits `f = g - h` with both parts min-convex: negative slope changes go
/// to `g`, positive ones (negated) to `h`; `h` starts with slope 0 and value
/// 0 at the first breakpoint, which makes the decomposition unique.
pub fn dc_decompose(f: &Pl1d) -> (Pl1d, Pl1d) {
    if f.breakpoints.is_empty() {
        return (f.clone(), Pl1d::affine(Rat::zero(), Rat::zero()));
    }
    let mut g_slopes = vec![f.slopes[0].clone()];
    let mut h_slopes = vec![Rat::zero()];
    for w in f.slopes.windows(2) {
        let delta = &w[1] - &w[0];
        let (dg, dh) = if delta.is_positive() {
            (Rat::zero(), -delta)
        } else {
            (delta, Rat::zero())
        };
        g_slopes.push(g_slopes.last().expect("nonempty") + dg);
        h_slopes.push(h_slopes.last().expect("nonempty") + dh);
    }
    let h = Pl1d::new(f.breakpoints.clone(), h_slopes, Rat::zero()).expect("same breakpoints");
    let g = Pl1d::new(f.breakpoints.clone(), g_slopes, f.anchor.clone()).expect("same breakpoints");
    debug_assert!(g.is_min_convex() && h.is_min_convex());
    (g, h)
}

/// Converts a min-convex piecewise-linear function to the univariate
/// tropical polynomial with one monomial per affine piece.
pub fn pl_to_np(f: &Pl1d) -> Result<NpPoly, CurveError> {
    if !f.is_min_convex() {
        return Err(CurveError::NotMinConvex);
    }
    if f.breakpoints.is_empty() {
        let intercept = f.anchor.clone();
        return Ok(NpPoly::new(1, vec![Monomial::new(intercept, vec![f.slopes[0].clone()])])?);
    }
    let mut monomials = Vec::with_capacity(f.slopes.len());
    for (j, slope) in f.slopes.iter().enumerate() {
        let point = &f.breakpoints[j.max(1) - 1];
        let value = f.eval(point);
        monomials.push(Monomial::new(value - slope * point, vec![slope.clone()]));
    }
    Ok(NpPoly::new(1, monomials)?)
}

/// The lower envelope of a univariate tropical polynomial as a canonical
/// piecewise-linear function (slopes descending left to right).
pub fn np_to_pl(p: &NpPoly) -> Result<Pl1d, CurveError> {
    if p.arity() != 1 {
        return Err(CurveError::ArityMismatch { expected: 1, found: p.arity() });
    }
    // lines (slope, intercept), steepest first; equal slopes keep the lowest
    let mut lines: Vec<(Rat, Rat)> =
        p.monomials().iter().map(|m| (m.exps[0].clone(), m.coeff.clone())).collect();
    lines.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    lines.dedup_by(|b, a| a.0 == b.0);
    // hull sweep: stack of (line, parameter where it becomes minimal)
    let mut stack: Vec<((Rat, Rat), Option<Rat>)> = Vec::new();
    for line in lines {
        loop {
            match stack.last() {
                None => {
                    stack.push((line.clone(), None));
                    break;
                }
                Some((top, start)) => {
                    // line is below top for t > crossing
                    let crossing = (&line.1 - &top.1) / (&top.0 - &line.0);
                    match start {
                        Some(s) if crossing <= *s => {
                            stack.pop();
                        }
                        _ => {
                            stack.push((line.clone(), Some(crossing)));
                            break;
                        }
                    }
                }
            }
        }
    }
    let slopes: Vec<Rat> = stack.iter().map(|((s, _), _)| s.clone()).collect();
    let breakpoints: Vec<Rat> = stack.iter().skip(1).map(|(_, st)| st.clone().expect("set")).collect();
    let (slope0, intercept0) = (stack[0].0 .0.clone(), stack[0].0 .1.clone());
    let reference = breakpoints.first().cloned().unwrap_or_else(Rat::zero);
    let anchor = &intercept0 + &slope0 * &reference;
    Pl1d::new(breakpoints, slopes, anchor)
}

/// Exact check that the minimum over the terms is attained at least twice at
/// every real point; returns a witness where it is attained once.
pub fn min_tie_witness(terms: &[Pl1d]) -> Option<Rat> {
    let mut crit: BTreeSet<Rat> = BTreeSet::new();
    for t in terms {
        crit.extend(t.breakpoints.iter().cloned());
    }
    let base: Vec<Rat> = crit.iter().cloned().collect();
    // pairwise crossings inside each base interval
    let probes = interval_probes(&base);
    for (lo, hi, probe) in &probes {
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                let si = terms[i].slope_at(probe);
                let sj = terms[j].slope_at(probe);
                if si == sj {
                    continue;
                }
                let vi = terms[i].eval(probe);
                let vj = terms[j].eval(probe);
                let root = probe + (vj - vi) / (si - sj);
                let inside = lo.as_ref().is_none_or(|l| root > *l)
                    && hi.as_ref().is_none_or(|h| root < *h);
                if inside {
                    crit.insert(root);
                }
            }
        }
    }
    // one sample per critical point and per open interval between them
    let all: Vec<Rat> = crit.iter().cloned().collect();
    let mut samples: Vec<Rat> = all.clone();
    for (_, _, probe) in interval_probes(&all) {
        samples.push(probe);
    }
    for s in samples {
        let values: Vec<Rat> = terms.iter().map(|t| t.eval(&s)).collect();
        let min = values.iter().min().expect("nonempty").clone();
        if values.iter().filter(|v| **v == min).count() < 2 {
            return Some(s);
        }
    }
    None
}

/// Open intervals induced by a sorted point list, each with an interior
/// probe point: `(lo, hi, probe)` with `None` for an infinite end.
fn interval_probes(points: &[Rat]) -> Vec<(Option<Rat>, Option<Rat>, Rat)> {
    if points.is_empty() {
        return vec![(None, None, Rat::zero())];
    }
    let mut out = Vec::with_capacity(points.len() + 1);
    out.push((None, Some(points[0].clone()), &points[0] - Rat::one()));
    for w in points.windows(2) {
        out.push((
            Some(w[0].clone()),
            Some(w[1].clone()),
            (&w[0] + &w[1]) / Rat::from_integer(2.into()),
        ));
    }
    let last = points.last().expect("nonempty");
    out.push((Some(last.clone()), None, last + Rat::one()));
    out
}

/// One edge of a tropical curve over `(x, y_1, ..., y_{n-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveEdge {
    pub cell_index: usize,
    /// Lies in a hyperplane `x = c`.
    pub vertical: bool,
    pub full_line: bool,
    pub left_unbounded: bool,
    pub right_unbounded: bool,
    /// `dy_j/dx` per coordinate; empty for vertical edges.
    pub slopes: Vec<Rat>,
    /// Finite endpoint with the smaller x, if any.
    pub left: Option<Vec<Rat>>,
    /// Finite endpoint with the larger x, if any.
    pub right: Option<Vec<Rat>>,
    /// Some point on the edge.
    pub anchor_point: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub struct CurveModel {
    pub ambient: usize,
    pub skeleton: Skeleton,
    pub edges: Vec<CurveEdge>,
}

/// Builds the curve model of a prevariety of dimension at most 1.
/// Dimension 2 or more is reported with the offending cell.
pub fn build_curve(t: &Prevariety) -> Result<CurveModel, CurveError> {
    let skeleton = crate::geom::extract_skeleton(t)?;
    let n = skeleton.dim_ambient;
    let mut edges = Vec::with_capacity(skeleton.edges.len());
    for e in &skeleton.edges {
        let edge = match &e.geometry {
            EdgeGeometry::Segment { a, b } => {
                let (a, b) = if a[0] <= b[0] { (a, b) } else { (b, a) };
                let dx = &b[0] - &a[0];
                if dx.is_zero() {
                    CurveEdge {
                        cell_index: e.cell_index,
                        vertical: true,
                        full_line: false,
                        left_unbounded: false,
                        right_unbounded: false,
                        slopes: Vec::new(),
                        left: None,
                        right: None,
                        anchor_point: a.clone(),
                    }
                } else {
                    let slopes = (1..n).map(|j| (&b[j] - &a[j]) / &dx).collect();
                    CurveEdge {
                        cell_index: e.cell_index,
                        vertical: false,
                        full_line: false,
                        left_unbounded: false,
                        right_unbounded: false,
                        slopes,
                        left: Some(a.clone()),
                        right: Some(b.clone()),
                        anchor_point: a.clone(),
                    }
                }
            }
            EdgeGeometry::Ray { base, direction } => {
                if direction[0].is_zero() {
                    CurveEdge {
                        cell_index: e.cell_index,
                        vertical: true,
                        full_line: false,
                        left_unbounded: false,
                        right_unbounded: false,
                        slopes: Vec::new(),
                        left: None,
                        right: None,
                        anchor_point: base.clone(),
                    }
                } else {
                    let slopes: Vec<Rat> = (1..n).map(|j| &direction[j] / &direction[0]).collect();
                    let rightward = direction[0].is_positive();
                    CurveEdge {
                        cell_index: e.cell_index,
                        vertical: false,
                        full_line: false,
                        left_unbounded: !rightward,
                        right_unbounded: rightward,
                        slopes,
                        left: rightward.then(|| base.clone()),
                        right: (!rightward).then(|| base.clone()),
                        anchor_point: base.clone(),
                    }
                }
            }
            EdgeGeometry::Line { base, direction } => {
                let vertical = direction[0].is_zero();
                let slopes: Vec<Rat> = if vertical {
                    Vec::new()
                } else {
                    (1..n).map(|j| &direction[j] / &direction[0]).collect()
                };
                CurveEdge {
                    cell_index: e.cell_index,
                    vertical,
                    full_line: !vertical,
                    left_unbounded: !vertical,
                    right_unbounded: !vertical,
                    slopes,
                    left: None,
                    right: None,
                    anchor_point: base.clone(),
                }
            }
        };
        edges.push(edge);
    }
    Ok(CurveModel { ambient: n, skeleton, edges })
}

/// Directed graph on the non-vertical edges of a curve.
#[derive(Debug, Clone)]
pub struct ResolutionGraph {
    /// Node -> index of the curve edge it stands for.
    pub nodes: Vec<usize>,
    /// Adjacency lists over node indices, each sorted ascending.
    pub arcs: Vec<Vec<usize>>,
    /// Nodes unbounded from the left, sorted.
    pub sources: Vec<usize>,
    /// Nodes unbounded from the right, sorted.
    pub sinks: Vec<usize>,
}

fn graph_with_condition(c: &CurveModel, slope_condition: bool) -> ResolutionGraph {
    let nodes: Vec<usize> = c
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.vertical)
        .map(|(i, _)| i)
        .collect();
    let mut arcs = vec![Vec::new(); nodes.len()];
    for (a_idx, &ea) in nodes.iter().enumerate() {
        let Some(junction) = &c.edges[ea].right else { continue };
        for (b_idx, &eb) in nodes.iter().enumerate() {
            if a_idx == b_idx {
                continue;
            }
            if c.edges[eb].left.as_ref() != Some(junction) {
                continue;
            }
            let slopes_ok = !slope_condition
                || c.edges[ea]
                    .slopes
                    .iter()
                    .zip(&c.edges[eb].slopes)
                    .all(|(sa, sb)| sa >= sb);
            if slopes_ok {
                arcs[a_idx].push(b_idx);
            }
        }
    }
    let sources: Vec<usize> = (0..nodes.len()).filter(|&i| c.edges[nodes[i]].left_unbounded).collect();
    let sinks: Vec<usize> = (0..nodes.len()).filter(|&i| c.edges[nodes[i]].right_unbounded).collect();
    ResolutionGraph { nodes, arcs, sources, sinks }
}

/// The §-graph with the slope condition: an arc means x advances and no
/// coordinate slope increases, so assembled paths are min-convex.
pub fn build_resolution_graph(c: &CurveModel) -> ResolutionGraph {
    graph_with_condition(c, true)
}

/// Turns a source-to-sink node path into one piecewise-linear function per
/// `y_j` coordinate.
fn path_resolution(c: &CurveModel, g: &ResolutionGraph, path: &[usize]) -> Vec<Pl1d> {
    let n = c.ambient;
    let edges: Vec<&CurveEdge> = path.iter().map(|&i| &c.edges[g.nodes[i]]).collect();
    if edges.len() == 1 {
        let e = edges[0];
        return (1..n)
            .map(|j| {
                let slope = e.slopes[j - 1].clone();
                let value0 = &e.anchor_point[j] - &slope * &e.anchor_point[0];
                Pl1d::affine(slope, value0)
            })
            .collect();
    }
    let junctions: Vec<&Vec<Rat>> =
        edges.windows(2).map(|w| w[1].left.as_ref().expect("arc endpoint")).collect();
    (1..n)
        .map(|j| {
            let breakpoints: Vec<Rat> = junctions.iter().map(|p| p[0].clone()).collect();
            let slopes: Vec<Rat> = edges.iter().map(|e| e.slopes[j - 1].clone()).collect();
            let anchor = junctions[0][j].clone();
            Pl1d::new(breakpoints, slopes, anchor).expect("junction x strictly increases")
        })
        .collect()
}

/// Depth-first enumeration of source-to-sink paths in lexicographic node
/// order, stopping after `limit` paths.
fn enumerate_paths(g: &ResolutionGraph, limit: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    let mut stack = Vec::new();
    fn dfs(
        g: &ResolutionGraph,
        node: usize,
        stack: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if paths.len() >= limit {
            return;
        }
        stack.push(node);
        if g.sinks.contains(&node) {
            paths.push(stack.clone());
        }
        for &next in &g.arcs[node] {
            dfs(g, next, stack, paths, limit);
        }
        stack.pop();
    }
    for &s in &g.sources {
        dfs(g, s, &mut stack, &mut paths, limit);
    }
    paths
}

/// Resolves the curve: a full-line edge resolves it directly; otherwise the
/// lexicographically first source-to-sink path of the resolution graph is
/// assembled into min-convex functions.
pub fn resolve_curve(c: &CurveModel) -> Option<Vec<Pl1d>> {
    let g = build_resolution_graph(c);
    if let Some(full) = (0..g.nodes.len()).find(|&i| c.edges[g.nodes[i]].full_line) {
        return Some(path_resolution(c, &g, &[full]));
    }
    let paths = enumerate_paths(&g, 1);
    paths.first().map(|p| path_resolution(c, &g, p))
}

/// All resolutions of the curve, one per source-to-sink path, up to `limit`.
pub fn enumerate_resolutions(c: &CurveModel, limit: usize) -> Vec<Vec<Pl1d>> {
    let g = build_resolution_graph(c);
    enumerate_paths(&g, limit).iter().map(|p| path_resolution(c, &g, p)).collect()
}

/// Resolves the curve by rational functions: any monotone-in-x path works
/// (no slope condition), and each coordinate is split into a difference of
/// min-convex parts.
pub fn resolve_curve_rational(c: &CurveModel) -> Option<Vec<RationalPl>> {
    let g = graph_with_condition(c, false);
    let path = if let Some(full) = (0..g.nodes.len()).find(|&i| c.edges[g.nodes[i]].full_line) {
        vec![full]
    } else {
        match enumerate_paths(&g, 1).into_iter().next() {
            Some(p) => p,
            None => return None,
        }
    };
    let pls = path_resolution(c, &g, &path);
    let mut out = Vec::with_capacity(pls.len());
    for pl in &pls {
        let (gpart, hpart) = dc_decompose(pl);
        let g_np = pl_to_np(&gpart).expect("dc parts are min-convex");
        let h_np = pl_to_np(&hpart).expect("dc parts are min-convex");
        out.push(RationalPl::new(g_np, h_np).expect("both univariate"));
    }
    Some(out)
}

/// Re-verifies curve resolutions against the defining system: substitutes
/// `y_j(x)` into every polynomial and demands the minimum over its monomials
/// be attained at least twice for all x. Returns a violating x if any.
pub fn verify_against_system(
    system: &[NpPoly],
    ys: &[Pl1d],
) -> Result<Option<Rat>, CurveError> {
    for p in system {
        if p.arity() != ys.len() + 1 {
            return Err(CurveError::ArityMismatch { expected: p.arity(), found: ys.len() + 1 });
        }
        let terms: Vec<Pl1d> = p
            .monomials()
            .iter()
            .map(|m| {
                let mut term = Pl1d::affine(m.exps[0].clone(), m.coeff.clone());
                for (j, y) in ys.iter().enumerate() {
                    if !m.exps[j + 1].is_zero() {
                        term = term.add(&y.scale(&m.exps[j + 1]));
                    }
                }
                term
            })
            .collect();
        if let Some(x) = min_tie_witness(&terms) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Convenience: verifies that substituting the resolutions turns every
/// polynomial of the system into a family with the everywhere-tied minimum.
pub fn resolution_verifies(system: &[NpPoly], ys: &[Pl1d]) -> Result<bool, CurveError> {
    Ok(verify_against_system(system, ys)?.is_none())
}

impl From<ResolveError> for CurveError {
    fn from(e: ResolveError) -> Self {
        match e {
            ResolveError::Poly(p) => CurveError::Poly(p),
            ResolveError::Geom(g) => CurveError::Geom(g),
            _ => CurveError::MalformedPl,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::prevariety;
    use crate::poly::PolyInY;
    use crate::rat::{rat, rat_int};
    use crate::resolve::verify_rational_resolution;

    fn r(v: i64) -> Rat {
        rat_int(v)
    }

    fn poly2(monomials: &[(i64, [i64; 2])]) -> NpPoly {
        NpPoly::new(
            2,
            monomials
                .iter()
                .map(|(c, e)| Monomial::new(rat_int(*c), e.iter().map(|&v| rat_int(v)).collect()))
                .collect(),
        )
        .unwrap()
    }

    /// y ⊕ x ⊕ 0 over (x, y).
    fn tropical_line() -> NpPoly {
        poly2(&[(0, [0, 1]), (0, [1, 0]), (0, [0, 0])])
    }

    /// (x ⊕ 0) ⊗ y ⊕ 0 over (x, y): monomials xy, y, 0.
    fn non_monic_curve_poly() -> NpPoly {
        poly2(&[(0, [1, 1]), (0, [0, 1]), (0, [0, 0])])
    }

    #[test]
    fn pl_eval_and_canonical_form() {
        // min(x, 0): breakpoint 0, slopes 1 then 0
        let f = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap();
        assert_eq!(f.eval(&r(-3)), r(-3));
        assert_eq!(f.eval(&r(5)), r(0));
        assert!(f.is_min_convex());

        // a breakpoint without slope change disappears
        let g = Pl1d::new(vec![r(-1), r(0)], vec![r(1), r(1), r(0)], r(-1)).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn pl_arithmetic() {
        let f = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap(); // min(x,0)
        let g = Pl1d::affine(r(1), r(0)); // x
        let sum = f.add(&g);
        assert_eq!(sum.eval(&r(-2)), r(-4));
        assert_eq!(sum.eval(&r(3)), r(3));
        let diff = g.sub(&f); // x - min(x,0) = max(x,0)
        assert_eq!(diff.eval(&r(-2)), r(0));
        assert_eq!(diff.eval(&r(3)), r(3));
        assert!(!diff.is_min_convex());
        let scaled = f.scale(&r(-2));
        assert_eq!(scaled.eval(&r(-1)), r(2));
    }

    #[test]
    fn dc_decompose_absolute_value() {
        // |x|: slopes -1 then +1
        let f = Pl1d::new(vec![r(0)], vec![r(-1), r(1)], r(0)).unwrap();
        let (g, h) = dc_decompose(&f);
        assert!(g.is_min_convex() && h.is_min_convex());
        for t in [-5i64, -1, 0, 1, 2, 7] {
            let t = r(t);
            assert_eq!(g.eval(&t) - h.eval(&t), f.eval(&t));
        }
        // h is anchored at value 0 on the first breakpoint
        assert_eq!(h.eval(&r(0)), r(0));
    }

    #[test]
    fn dc_decompose_min_convex_input() {
        let f = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap();
        let (g, h) = dc_decompose(&f);
        assert_eq!(g, f);
        assert_eq!(h, Pl1d::affine(r(0), r(0)));

        // -|x| is already min-convex
        let neg_abs = Pl1d::new(vec![r(0)], vec![r(1), r(-1)], r(0)).unwrap();
        let (g2, h2) = dc_decompose(&neg_abs);
        assert_eq!(g2, neg_abs);
        assert_eq!(h2, Pl1d::affine(r(0), r(0)));
    }

    #[test]
    fn pl_np_conversions() {
        // min(x, 0) <-> x ⊕ 0
        let f = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap();
        let p = pl_to_np(&f).unwrap();
        let expected = NpPoly::new(
            1,
            vec![Monomial::new(r(0), vec![r(1)]), Monomial::new(r(0), vec![r(0)])],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert_eq!(np_to_pl(&p).unwrap(), f);

        // a single affine piece a + s*t
        let single = Pl1d::affine(rat(1, 2), r(-3));
        let q = pl_to_np(&single).unwrap();
        assert_eq!(q.monomials().len(), 1);
        assert_eq!(q.monomials()[0].coeff, r(-3));
        assert_eq!(q.monomials()[0].exps[0], rat(1, 2));

        // slopes 1, 1/2, 0 with breakpoints 0 and 2
        let three = Pl1d::new(vec![r(0), r(2)], vec![r(1), rat(1, 2), r(0)], r(0)).unwrap();
        let p3 = pl_to_np(&three).unwrap();
        assert_eq!(p3.monomials().len(), 3);
        let coeffs: Vec<Rat> = p3.monomials().iter().map(|m| m.coeff.clone()).collect();
        let exps: Vec<Rat> = p3.monomials().iter().map(|m| m.exps[0].clone()).collect();
        assert_eq!(exps, vec![r(0), rat(1, 2), r(1)]);
        assert_eq!(coeffs, vec![r(1), r(0), r(0)]);
        for t in [-3i64, 0, 1, 2, 5] {
            assert_eq!(p3.eval(&[r(t)]).unwrap(), three.eval(&r(t)));
        }

        // non-convex input is rejected
        let bad = Pl1d::new(vec![r(0)], vec![r(-1), r(1)], r(0)).unwrap();
        assert_eq!(pl_to_np(&bad).unwrap_err(), CurveError::NotMinConvex);
    }

    #[test]
    fn envelope_drops_hidden_monomials() {
        // x^{⊗2} ⊕ x ⊕ 0: the middle line never appears on the envelope
        let p = NpPoly::new(
            1,
            vec![
                Monomial::new(r(0), vec![r(2)]),
                Monomial::new(r(0), vec![r(1)]),
                Monomial::new(r(0), vec![r(0)]),
            ],
        )
        .unwrap();
        let f = np_to_pl(&p).unwrap();
        assert_eq!(f.slopes(), &[r(2), r(0)]);
        assert_eq!(f.breakpoints(), &[r(0)]);
    }

    #[test]
    fn tie_witness_examples() {
        // min(x, 0) attained once almost everywhere
        let terms = vec![Pl1d::affine(r(1), r(0)), Pl1d::affine(r(0), r(0))];
        assert!(min_tie_witness(&terms).is_some());

        // {min(x,0), x, 0}: tie everywhere
        let envelope = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap();
        let terms =
            vec![envelope, Pl1d::affine(r(1), r(0)), Pl1d::affine(r(0), r(0))];
        assert_eq!(min_tie_witness(&terms), None);
    }

    #[test]
    fn build_curve_tropical_line() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let c = build_curve(&t).unwrap();
        assert_eq!(c.edges.len(), 3);
        let vertical: Vec<&CurveEdge> = c.edges.iter().filter(|e| e.vertical).collect();
        assert_eq!(vertical.len(), 1);
        let mut slopes: Vec<Vec<Rat>> = c
            .edges
            .iter()
            .filter(|e| !e.vertical)
            .map(|e| e.slopes.clone())
            .collect();
        slopes.sort();
        assert_eq!(slopes, vec![vec![r(0)], vec![r(1)]]);
        let left = c.edges.iter().find(|e| e.left_unbounded).unwrap();
        assert_eq!(left.slopes, vec![r(1)]);
        let right = c.edges.iter().find(|e| e.right_unbounded).unwrap();
        assert_eq!(right.slopes, vec![r(0)]);
    }

    #[test]
    fn resolution_graph_of_line_has_one_arc() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let c = build_curve(&t).unwrap();
        let g = build_resolution_graph(&c);
        assert_eq!(g.nodes.len(), 2);
        let arc_count: usize = g.arcs.iter().map(Vec::len).sum();
        assert_eq!(arc_count, 1);
        assert_eq!(g.sources.len(), 1);
        assert_eq!(g.sinks.len(), 1);
    }

    #[test]
    fn reversed_slopes_produce_no_arc() {
        // (x ⊕ 0) ⊗ y ⊕ 0: slopes -1 then 0 at the joint, 14 fails
        let t = prevariety(&[non_monic_curve_poly()]).unwrap();
        let c = build_curve(&t).unwrap();
        let g = build_resolution_graph(&c);
        let arc_count: usize = g.arcs.iter().map(Vec::len).sum();
        assert_eq!(arc_count, 0);
        assert!(resolve_curve(&c).is_none());
    }

    #[test]
    fn resolve_tropical_line() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let c = build_curve(&t).unwrap();
        let ys = resolve_curve(&c).unwrap();
        assert_eq!(ys.len(), 1);
        let expected = Pl1d::new(vec![r(0)], vec![r(1), r(0)], r(0)).unwrap();
        assert_eq!(ys[0], expected);
        // converts to x ⊕ 0 and re-verifies
        let np = pl_to_np(&ys[0]).unwrap();
        assert_eq!(np.monomials().len(), 2);
        assert!(resolution_verifies(&[tropical_line()], &ys).unwrap());
    }

    #[test]
    fn resolve_full_line_curve() {
        // y ⊕ x: T = {y = x}, a single non-vertical line
        let p = poly2(&[(0, [0, 1]), (0, [1, 0])]);
        let t = prevariety(&[p.clone()]).unwrap();
        let c = build_curve(&t).unwrap();
        assert!(c.edges.iter().any(|e| e.full_line));
        let ys = resolve_curve(&c).unwrap();
        assert_eq!(ys[0], Pl1d::affine(r(1), r(0)));
        assert!(resolution_verifies(&[p], &ys).unwrap());
    }

    #[test]
    fn enumerate_counts() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let c = build_curve(&t).unwrap();
        assert_eq!(enumerate_resolutions(&c, 100).len(), 1);

        let t = prevariety(&[non_monic_curve_poly()]).unwrap();
        let c = build_curve(&t).unwrap();
        assert_eq!(enumerate_resolutions(&c, 100).len(), 0);

        // (y ⊕ x ⊕ 0) ⊗ (y ⊕ x ⊕ 1): two parallel branches
        let product = tropical_line()
            .trop_mul(&poly2(&[(0, [0, 1]), (0, [1, 0]), (1, [0, 0])]))
            .unwrap();
        let t = prevariety(&[product.clone()]).unwrap();
        let c = build_curve(&t).unwrap();
        let all = enumerate_resolutions(&c, 100);
        assert_eq!(all.len(), 2);
        for ys in &all {
            assert!(resolution_verifies(&[product.clone()], ys).unwrap());
            assert!(ys[0].is_min_convex());
        }
        // the two resolutions differ somewhere
        assert_ne!(all[0], all[1]);
    }

    #[test]
    fn rational_resolution_of_non_monic_curve() {
        let p = non_monic_curve_poly();
        let t = prevariety(&[p.clone()]).unwrap();
        let c = build_curve(&t).unwrap();
        let ys = resolve_curve_rational(&c).unwrap();
        assert_eq!(ys.len(), 1);
        // y = 0 ⊖ (x ⊕ 0) as a function: -min(x, 0)
        for x in [-4i64, -1, 0, 2, 5] {
            let expected = -r(x).min(r(0));
            assert_eq!(ys[0].eval(&[r(x)]).unwrap(), expected);
        }
        // it verifies as a rational resolution of f = (x⊕0)y ⊕ 0
        let f = PolyInY::new(
            1,
            vec![
                Some(NpPoly::constant(1, r(0))),
                Some(NpPoly::new(
                    1,
                    vec![Monomial::new(r(0), vec![r(1)]), Monomial::new(r(0), vec![r(0)])],
                )
                .unwrap()),
            ],
        )
        .unwrap();
        assert!(verify_rational_resolution(&f, &ys[0]).unwrap().ok);
    }

    #[test]
    fn rational_resolution_with_convex_curve_has_constant_h() {
        let t = prevariety(&[tropical_line()]).unwrap();
        let c = build_curve(&t).unwrap();
        let ys = resolve_curve_rational(&c).unwrap();
        assert_eq!(ys.len(), 1);
        assert!(ys[0].h().is_single_monomial());
        for x in [-3i64, 0, 4] {
            assert_eq!(ys[0].eval(&[r(x)]).unwrap(), r(x).min(r(0)));
        }
    }

    #[test]
    fn curve_not_spanning_x_axis_is_unresolvable() {
        // x ⊕ 0 in (x, y): T = {x = 0}, a vertical line only
        let p = poly2(&[(0, [1, 0]), (0, [0, 0])]);
        let t = prevariety(&[p]).unwrap();
        let c = build_curve(&t).unwrap();
        assert!(resolve_curve(&c).is_none());
        assert!(resolve_curve_rational(&c).is_none());
    }
}
