//! Minimal enclosing circles, circumradii of polygons, and the
//! circumradius–perimeter inequality `2n sin(π/n) R(P) ≥ per(P)` for convex
//! `m`-gons with `m ≤ n`, including detection of the regular-`n`-gon
//! equality case.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{normalize_mod_tau, ConvexPolygon, Vec2};

/// Standard tolerance for equality verdicts and inequality slacks.
pub const REPORT_TOL: f64 = 1e-9;

/// Geometric tolerance used by [`dowker_check`] when certifying that a
/// polygon is a regular n-gon.
pub const REGULARITY_TOL: f64 = 1e-6;

/// Fixed seed for the solver's internal shuffle, so results do not depend on
/// input order.
const SHUFFLE_SEED: u64 = 0x00c1_5c1e;

/// A circle given by center and radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Vec2,
    pub radius: f64,
}

impl Circle {
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        (p - self.center).norm() <= self.radius + tol
    }
}

/// One verified inequality instance: `lhs ≥ rhs` with `slack = lhs − rhs`.
///
/// The `equality` flag is set when `|slack| ≤ 1e-9 · (1 + |lhs| + |rhs|)`;
/// checks that certify equality geometrically may clear it further.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub equality: bool,
    pub context: String,
}

impl BoundReport {
    pub fn new(context: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let slack = lhs - rhs;
        let equality = slack.abs() <= REPORT_TOL * report_scale(lhs, rhs);
        BoundReport { lhs, rhs, slack, equality, context: context.into() }
    }

    /// `1 + |lhs| + |rhs|`, the scale all tolerances are relative to.
    pub fn scale(&self) -> f64 {
        report_scale(self.lhs, self.rhs)
    }

    /// Whether `lhs ≥ rhs` holds within the standard tolerance.
    pub fn holds(&self) -> bool {
        self.holds_within(REPORT_TOL)
    }

    pub fn holds_within(&self, tol: f64) -> bool {
        self.slack >= -tol * self.scale()
    }

    /// Strict inequality by at least `margin` (absolute).
    pub fn strict_by(&self, margin: f64) -> bool {
        self.slack >= margin
    }

    pub fn csv_header() -> &'static str {
        "context,lhs,rhs,slack,equality"
    }

    /// CSV row with numeric fields at 12 significant digits.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.context,
            format_sig12(self.lhs),
            format_sig12(self.rhs),
            format_sig12(self.slack),
            self.equality
        )
    }
}

fn report_scale(lhs: f64, rhs: f64) -> f64 {
    1.0 + lhs.abs() + rhs.abs()
}

/// Scientific notation with 12 significant digits, for diffable tables.
pub fn format_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Smallest circle containing all points.
///
/// Move-to-front Welzl with a deterministically seeded shuffle: expected
/// linear time, result independent of input order, and the returned circle
/// is supported by at most three points.
pub fn min_enclosing_circle(points: &[Vec2]) -> Result<Circle> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFiniteCoordinate);
    }
    let mut pts = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    pts.shuffle(&mut rng);

    let scale = pts.iter().map(|p| p.x.abs().max(p.y.abs())).fold(0.0, f64::max);
    let eps = 1e-12 * (1.0 + scale);

    let mut circle = Circle { center: pts[0], radius: 0.0 };
    for i in 1..pts.len() {
        if circle.contains(pts[i], eps) {
            continue;
        }
        // pts[i] must lie on the boundary.
        circle = Circle { center: pts[i], radius: 0.0 };
        for j in 0..i {
            if circle.contains(pts[j], eps) {
                continue;
            }
            circle = circle_from_two(pts[i], pts[j]);
            for k in 0..j {
                if circle.contains(pts[k], eps) {
                    continue;
                }
                circle = circle_from_three(pts[i], pts[j], pts[k], eps);
            }
        }
    }
    Ok(circle)
}

fn circle_from_two(a: Vec2, b: Vec2) -> Circle {
    let center = (a + b) * 0.5;
    Circle { center, radius: (a - center).norm() }
}

fn circle_from_three(a: Vec2, b: Vec2, c: Vec2, eps: f64) -> Circle {
    // Work relative to `a` for conditioning.
    let u = b - a;
    let v = c - a;
    let d = 2.0 * u.cross(v);
    let uu = u.norm_sq();
    let vv = v.norm_sq();
    if d.abs() <= 2e-14 * (uu * vv).sqrt() {
        // Degenerate (collinear) support: the farthest pair covers all three.
        let candidates = [
            (circle_from_two(a, b), c),
            (circle_from_two(a, c), b),
            (circle_from_two(b, c), a),
        ];
        return candidates
            .iter()
            .filter(|(circ, other)| circ.contains(*other, eps))
            .min_by(|(x, _), (y, _)| x.radius.partial_cmp(&y.radius).expect("finite radius"))
            .map(|(circ, _)| *circ)
            .unwrap_or(candidates[0].0);
    }
    let ox = (v.y * uu - u.y * vv) / d;
    let oy = (u.x * vv - v.x * uu) / d;
    let offset = Vec2::new(ox, oy);
    Circle { center: a + offset, radius: offset.norm() }
}

/// Circumcircle of a polygon: the minimal enclosing circle of its vertices.
pub fn circumcircle(p: &ConvexPolygon) -> Circle {
    min_enclosing_circle(p.vertices()).expect("polygon has at least one finite vertex")
}

/// Circumradius `R(P)`.
pub fn circumradius(p: &ConvexPolygon) -> f64 {
    circumcircle(p).radius
}

/// Check `2n sin(π/n) · R(P) ≥ per(P)` for an `m`-gon `P` with `m ≤ n`.
///
/// The report's `equality` flag is set only when the slack vanishes at the
/// standard tolerance *and* `P` is certified as a regular `n`-gon or a
/// singleton, the two exact equality cases.
pub fn dowker_check(p: &ConvexPolygon, n: usize) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::invalid("dowker check needs n >= 1"));
    }
    let m = p.vertex_count();
    if m > n {
        return Err(Error::VertexCountExceedsN { m, n });
    }
    let lhs = 2.0 * n as f64 * (PI / n as f64).sin() * circumradius(p);
    let rhs = p.perimeter();
    let mut report = BoundReport::new(format!("dowker m={m} n={n}"), lhs, rhs);
    report.equality =
        report.equality && (p.is_singleton() || is_regular_ngon(p, n, REGULARITY_TOL));
    Ok(report)
}

/// Whether `P` is a regular `n`-gon within `tol`: exactly `n` vertices, all
/// at the circumradius (relative tolerance) from the circumcenter, with all
/// consecutive central angles equal to `2π/n` (absolute tolerance, radians).
///
/// A singleton is the regular 1-gon; a segment is a regular 2-gon.
pub fn is_regular_ngon(p: &ConvexPolygon, n: usize, tol: f64) -> bool {
    let m = p.vertex_count();
    if m != n {
        return false;
    }
    if m == 1 {
        return true;
    }
    let circle = circumcircle(p);
    let r = circle.radius;
    if r <= 0.0 {
        return false;
    }
    for &v in p.vertices() {
        if ((v - circle.center).norm() - r).abs() > tol * r {
            return false;
        }
    }
    let step = 2.0 * PI / n as f64;
    let angles: Vec<f64> = p.vertices().iter().map(|&v| (v - circle.center).angle()).collect();
    for i in 0..m {
        let gap = normalize_mod_tau(angles[(i + 1) % m] - angles[i]);
        if (gap - step).abs() > tol {
            return false;
        }
    }
    true
}
