//! Static SVG pictures of a curve in the fundamental parallelogram.
//!
//! Output depends only on the curve: elements appear in index order and
//! coordinates are printed with three decimals.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use crate::curve::MarkedCurve;
use crate::exactmath::{int, Rational};
use crate::plane::{self, Point};
use crate::torus::{TorusPoint, TropicalTorus};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

struct Frame {
    min: [f64; 2],
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(t: &TropicalTorus) -> Frame {
        let corners = corners(t);
        let xs: Vec<f64> = corners.iter().map(|p| f(&p[0])).collect();
        let ys: Vec<f64> = corners.iter().map(|p| f(&p[1])).collect();
        let min = [fold(&xs, f64::min), fold(&ys, f64::min)];
        let span = [fold(&xs, f64::max) - min[0], fold(&ys, f64::max) - min[1]];
        let scale = SIZE / span[0].max(span[1]);
        Frame { min, scale, height: span[1] * scale }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let x = MARGIN + (f(&p[0]) - self.min[0]) * self.scale;
        let y = MARGIN + self.height - (f(&p[1]) - self.min[1]) * self.scale;
        (x, y)
    }
}

fn f(r: &Rational) -> f64 {
    r.to_f64().expect("finite")
}

fn fold(v: &[f64], op: fn(f64, f64) -> f64) -> f64 {
    v.iter().copied().reduce(op).expect("nonempty")
}

fn corners(t: &TropicalTorus) -> [Point; 4] {
    let p = |x: i64, y: i64| t.to_plane(&[int(x), int(y)]);
    [p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
}

/// Pieces of the segment `x0 + s d` (`s ∈ [0, 1]`, lattice coordinates),
/// each translated into the fundamental parallelogram.
fn pieces(x0: &Point, d: &Point) -> Vec<(Point, Point, Rational, Rational)> {
    let mut cuts = vec![int(0), int(1)];
    for k in 0..2 {
        if d[k].is_zero() {
            continue;
        }
        let end = &x0[k] + &d[k];
        let (lo, hi) = if d[k] > int(0) { (&x0[k], &end) } else { (&end, &x0[k]) };
        let mut n = lo.floor() + int(1);
        while &n < hi {
            cuts.push((&n - &x0[k]) / &d[k]);
            n += int(1);
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts.windows(2)
        .map(|w| {
            let at = |s: &Rational| plane::add(x0, &plane::scale(s, d));
            let mid = at(&((&w[0] + &w[1]) / int(2)));
            let shift = [mid[0].floor(), mid[1].floor()];
            (plane::sub(&at(&w[0]), &shift), plane::sub(&at(&w[1]), &shift), w[0].clone(), w[1].clone())
        })
        .collect()
}

fn cross(out: &mut String, (x, y): (f64, f64), r: f64, diagonal: bool) {
    let (a, b) = if diagonal { ((r, r), (r, -r)) } else { ((r, 0.0), (0.0, r)) };
    for (dx, dy) in [a, b] {
        let _ = writeln!(
            out,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="2"/>"#,
            x - dx,
            y - dy,
            x + dx,
            y + dy
        );
    }
}

/// Draws the curve, its marks as `×` and any extra `points` as `+`.
pub fn render(mc: &MarkedCurve, points: &[TorusPoint]) -> String {
    let c = &mc.curve;
    let t = &c.torus;
    let frame = Frame::new(t);
    let w = 2.0 * MARGIN + SIZE;
    let h = 2.0 * MARGIN + frame.height;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let poly: Vec<String> = corners(t)
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"  <polygon class="domain" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
        poly.join(" ")
    );
    for (i, e) in c.edges().iter().enumerate() {
        let x0 = c.positions[e.tail].coords().clone();
        let d = t.to_lattice_coords(&e.displacement());
        let _ = writeln!(out, r#"  <g class="edge" data-edge="{i}" data-weight="{}">"#, e.weight);
        let half = Rational::new(1.into(), 2.into());
        let mut label = None;
        for (a, b, s0, s1) in pieces(&x0, &d) {
            let (x1, y1) = frame.map(&t.to_plane(&a));
            let (x2, y2) = frame.map(&t.to_plane(&b));
            let _ = writeln!(
                out,
                r#"    <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5"/>"#
            );
            if label.is_none() && s0 <= half && half <= s1 {
                let m = plane::add(&a, &plane::scale(&(&half - &s0), &d));
                label = Some(frame.map(&t.to_plane(&m)));
            }
        }
        if e.weight > 1 {
            let (x, y) = label.expect("some piece covers the midpoint");
            let _ = writeln!(
                out,
                r#"    <text class="weight" x="{:.3}" y="{:.3}" font-size="14">{}</text>"#,
                x + 4.0,
                y - 4.0,
                e.weight
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    for (v, p) in c.positions.iter().enumerate() {
        let (x, y) = frame.map(&p.in_plane(t));
        let _ = writeln!(out, r#"  <circle class="vertex" data-vertex="{v}" cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
    }
    for p in mc.mark_points() {
        cross(&mut out, frame.map(&p.in_plane(t)), 5.0, true);
    }
    for p in points {
        cross(&mut out, frame.map(&p.in_plane(t)), 6.0, false);
    }
    out.push_str("</svg>\n");
    out
}
