//! Deterministic SVG plots of planar skeletons.
//!
//! The drawing window is the bounding box of the skeleton vertices padded by
//! one unit per side; rays and lines are clipped to the window edge. Output
//! bytes depend only on the input skeleton.

use num_traits::{ToPrimitive, Zero};
use tnp_core::geom::{EdgeGeometry, Skeleton};
use tnp_core::rat::Rat;

const STROKES: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
const SIZE: f64 = 400.0;

fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Window {
    x0: Rat,
    x1: Rat,
    y0: Rat,
    y1: Rat,
}

impl Window {
    /// Maps world coordinates to pixel coordinates (y axis flipped).
    fn map(&self, p: &[Rat]) -> (f64, f64) {
        let w = to_f64(&(&self.x1 - &self.x0));
        let h = to_f64(&(&self.y1 - &self.y0));
        let px = (to_f64(&(&p[0] - &self.x0)) / w) * SIZE;
        let py = SIZE - (to_f64(&(&p[1] - &self.y0)) / h) * SIZE;
        (px, py)
    }

    /// Clips `base + t*dir`, `t` in `[t_lo, +inf)` or all of `R`, to the
    /// window; returns the endpoints of the visible piece.
    fn clip_line(
        &self,
        base: &[Rat],
        dir: &[Rat],
        t_lo: Option<Rat>,
    ) -> Option<(Vec<Rat>, Vec<Rat>)> {
        let mut lo = t_lo;
        let mut hi: Option<Rat> = None;
        for (axis, (b0, b1)) in
            [(&self.x0, &self.x1), (&self.y0, &self.y1)].into_iter().enumerate()
        {
            let d = &dir[axis];
            let b = &base[axis];
            if d.is_zero() {
                if b < b0 || b > b1 {
                    return None;
                }
                continue;
            }
            let (t0, t1) = ((b0 - b) / d, (b1 - b) / d);
            let (t0, t1) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
            if lo.as_ref().is_none_or(|l| t0 > *l) {
                lo = Some(t0);
            }
            if hi.as_ref().is_none_or(|h| t1 < *h) {
                hi = Some(t1);
            }
        }
        let (lo, hi) = (lo?, hi?);
        if lo > hi {
            return None;
        }
        let at = |t: &Rat| -> Vec<Rat> { base.iter().zip(dir).map(|(b, d)| b + t * d).collect() };
        Some((at(&lo), at(&hi)))
    }
}

/// Renders a 2-dimensional skeleton.
pub fn render_skeleton(sk: &Skeleton) -> String {
    assert_eq!(sk.dim_ambient, 2, "svg output needs a planar skeleton");
    let one = Rat::from_integer(1.into());
    let mut points: Vec<&Vec<Rat>> = sk.vertices.iter().map(|v| &v.point).collect();
    let bases: Vec<&Vec<Rat>> = sk
        .edges
        .iter()
        .map(|e| match &e.geometry {
            EdgeGeometry::Segment { a, .. } => a,
            EdgeGeometry::Ray { base, .. } | EdgeGeometry::Line { base, .. } => base,
        })
        .collect();
    if points.is_empty() {
        points = bases;
    }
    let origin = vec![Rat::from_integer(0.into()), Rat::from_integer(0.into())];
    if points.is_empty() {
        points.push(&origin);
    }
    let xs: Vec<&Rat> = points.iter().map(|p| &p[0]).collect();
    let ys: Vec<&Rat> = points.iter().map(|p| &p[1]).collect();
    let window = Window {
        x0: (*xs.iter().min().expect("nonempty")).clone() - &one,
        x1: (*xs.iter().max().expect("nonempty")).clone() + &one,
        y0: (*ys.iter().min().expect("nonempty")).clone() - &one,
        y1: (*ys.iter().max().expect("nonempty")).clone() + &one,
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));
    for (i, e) in sk.edges.iter().enumerate() {
        let stroke = STROKES[i % STROKES.len()];
        let clipped = match &e.geometry {
            EdgeGeometry::Segment { a, b } => Some((a.clone(), b.clone())),
            EdgeGeometry::Ray { base, direction } => {
                window.clip_line(base, direction, Some(Rat::from_integer(0.into())))
            }
            EdgeGeometry::Line { base, direction } => window.clip_line(base, direction, None),
        };
        if let Some((a, b)) = clipped {
            let (x1, y1) = window.map(&a);
            let (x2, y2) = window.map(&b);
            svg.push_str(&format!(
                "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{stroke}\" stroke-width=\"2\"/>\n"
            ));
        }
    }
    for v in &sk.vertices {
        let (cx, cy) = window.map(&v.point);
        svg.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"black\"/>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use tnp_core::geom::{extract_skeleton, prevariety};
    use tnp_core::poly::{Monomial, NpPoly};
    use tnp_core::rat::rat_int;

    fn tropical_line_skeleton() -> Skeleton {
        let poly = NpPoly::new(
            2,
            vec![
                Monomial::new(rat_int(0), vec![rat_int(0), rat_int(1)]),
                Monomial::new(rat_int(0), vec![rat_int(1), rat_int(0)]),
                Monomial::new(rat_int(0), vec![rat_int(0), rat_int(0)]),
            ],
        )
        .unwrap();
        extract_skeleton(&prevariety(&[poly]).unwrap()).unwrap()
    }

    #[test]
    fn deterministic_output() {
        let sk = tropical_line_skeleton();
        let a = render_skeleton(&sk);
        let b = render_skeleton(&sk);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<line").count(), 3);
        assert_eq!(a.matches("<circle").count(), 1);
    }
}
