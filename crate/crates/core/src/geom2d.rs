//! Planar convex-geometry kernel: vectors, convex polygons, Minkowski sums,
//! symmetrization, and regular-polygon construction.
//!
//! Polygons are normalized on construction (convex hull, counter-clockwise
//! order, collinear and duplicate vertices removed, traversal starting at the
//! lexicographically smallest vertex), so structural equality of two polygons
//! is well-defined. Singletons and segments are valid degenerate polygons.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for merging duplicate vertices, relative to coordinate scale.
const DUP_TOL: f64 = 1e-12;

/// A point or direction in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "(f64, f64)", into = "(f64, f64)")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at angle `theta` (radians from the positive x-axis).
    pub fn from_angle(theta: f64) -> Self {
        Vec2::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` is
    /// counter-clockwise from `self`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Angle in (−π, π] measured from the positive x-axis.
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

impl From<Vec2> for (f64, f64) {
    fn from(v: Vec2) -> Self {
        (v.x, v.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

/// Closed segment between two points; zero length is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Vec2,
    pub b: Vec2,
}

impl Segment {
    pub fn new(a: Vec2, b: Vec2) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFiniteCoordinate);
        }
        Ok(Segment { a, b })
    }

    /// The origin-symmetric segment `[-u, u]`.
    pub fn centered(u: Vec2) -> Self {
        Segment { a: -u, b: u }
    }

    pub fn length(self) -> f64 {
        (self.b - self.a).norm()
    }

    /// Direction angle normalized to `[0, π)`; `None` for zero length.
    pub fn direction_angle(self) -> Option<f64> {
        let d = self.b - self.a;
        if d.norm_sq() == 0.0 {
            return None;
        }
        Some(normalize_mod_pi(d.angle()))
    }

    pub fn to_polygon(self) -> ConvexPolygon {
        ConvexPolygon::from_points(&[self.a, self.b]).expect("finite endpoints")
    }
}

/// Reduce an angle to `[0, π)`.
pub(crate) fn normalize_mod_pi(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(std::f64::consts::PI);
    if t >= std::f64::consts::PI {
        t -= std::f64::consts::PI;
    }
    t
}

/// Reduce an angle to `[0, 2π)`.
pub(crate) fn normalize_mod_tau(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(TAU);
    if t >= TAU {
        t -= TAU;
    }
    t
}

#[derive(Serialize, Deserialize)]
struct PolygonData {
    vertices: Vec<Vec2>,
}

/// Convex polygon with vertices in strict counter-clockwise order.
///
/// The vertex list is canonical: it is the convex hull of whatever points the
/// polygon was built from, starts at the lexicographically smallest vertex,
/// and contains no duplicate or collinear vertices. One vertex (a singleton)
/// and two vertices (a segment) are valid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonData", into = "PolygonData")]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl TryFrom<PolygonData> for ConvexPolygon {
    type Error = Error;
    fn try_from(data: PolygonData) -> Result<Self> {
        ConvexPolygon::from_points(&data.vertices)
    }
}

impl From<ConvexPolygon> for PolygonData {
    fn from(p: ConvexPolygon) -> Self {
        PolygonData { vertices: p.vertices }
    }
}

impl ConvexPolygon {
    /// Convex hull of a non-empty point set, in canonical form.
    ///
    /// Interior and collinear points are removed; duplicates within a
    /// relative tolerance of 1e-12 are merged.
    pub fn from_points(points: &[Vec2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        Ok(ConvexPolygon { vertices: monotone_chain(points) })
    }

    pub fn singleton(p: Vec2) -> Result<Self> {
        Self::from_points(&[p])
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Boundary length. A segment's boundary is traversed both ways, so its
    /// perimeter is twice its length; a singleton has perimeter 0. This keeps
    /// the perimeter Minkowski-additive across degenerate cases.
    pub fn perimeter(&self) -> f64 {
        let m = self.vertices.len();
        if m < 2 {
            return 0.0;
        }
        (0..m)
            .map(|i| (self.vertices[(i + 1) % m] - self.vertices[i]).norm())
            .sum()
    }

    /// Support value `max_v ⟨v, dir⟩`; errors on a zero direction.
    pub fn support(&self, dir: Vec2) -> Result<f64> {
        if dir.norm_sq() == 0.0 {
            return Err(Error::ZeroDirection);
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.dot(dir))
            .fold(f64::NEG_INFINITY, f64::max))
    }

    pub fn translate(&self, t: Vec2) -> ConvexPolygon {
        // Translation preserves order, orientation, and the lexicographic
        // starting vertex.
        ConvexPolygon { vertices: self.vertices.iter().map(|&v| v + t).collect() }
    }

    pub fn negate(&self) -> ConvexPolygon {
        let pts: Vec<Vec2> = self.vertices.iter().map(|&v| -v).collect();
        ConvexPolygon::from_points(&pts).expect("negation preserves validity")
    }

    /// Dilate by a factor `s ≥ 0`.
    pub fn scale(&self, s: f64) -> ConvexPolygon {
        assert!(s >= 0.0 && s.is_finite(), "scale factor must be finite and >= 0");
        let pts: Vec<Vec2> = self.vertices.iter().map(|&v| v * s).collect();
        ConvexPolygon::from_points(&pts).expect("scaling preserves validity")
    }

    /// Minkowski sum `P + Q` via the merge of the two angle-sorted edge
    /// sequences; degenerate summands contribute empty or two-edge fans.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        let start = self.bottom_vertex() + other.bottom_vertex();
        let mut edges = self.edge_vectors();
        edges.extend(other.edge_vectors());
        polygon_from_edge_fan(start, edges).expect("sum of valid polygons is valid")
    }

    /// Central symmetrization `(K − K)/2`, a 0-symmetric body.
    pub fn symmetrize(&self) -> ConvexPolygon {
        self.minkowski_sum(&self.negate()).scale(0.5)
    }

    /// Whether the polygon equals its own reflection through the origin,
    /// within `tol` scaled by the coordinate magnitude.
    pub fn is_origin_symmetric(&self, tol: f64) -> bool {
        self.approx_eq(&self.negate(), tol)
    }

    /// Vertex-wise comparison of canonical forms with tolerance `tol`
    /// relative to the larger coordinate scale.
    pub fn approx_eq(&self, other: &ConvexPolygon, tol: f64) -> bool {
        if self.vertices.len() != other.vertices.len() {
            return false;
        }
        let scale = 1.0 + self.coord_scale().max(other.coord_scale());
        self.vertices
            .iter()
            .zip(other.vertices.iter())
            .all(|(a, b)| (*a - *b).max_abs() <= tol * scale)
    }

    /// Mean of the vertices; for a centrally symmetric polygon this is its
    /// center of symmetry.
    pub fn vertex_centroid(&self) -> Vec2 {
        let m = self.vertices.len() as f64;
        let sum = self
            .vertices
            .iter()
            .fold(Vec2::ZERO, |acc, &v| acc + v);
        sum * (1.0 / m)
    }

    pub(crate) fn coord_scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.max_abs())
            .fold(0.0, f64::max)
    }

    /// Edge vectors of the closed boundary cycle. A segment yields its two
    /// antiparallel traversal edges; a singleton yields none.
    pub(crate) fn edge_vectors(&self) -> Vec<Vec2> {
        let m = self.vertices.len();
        if m < 2 {
            return Vec::new();
        }
        (0..m)
            .map(|i| self.vertices[(i + 1) % m] - self.vertices[i])
            .collect()
    }

    /// Vertex minimizing (y, x); the start of the angle-sorted edge fan.
    pub(crate) fn bottom_vertex(&self) -> Vec2 {
        *self
            .vertices
            .iter()
            .min_by(|a, b| (a.y, a.x).partial_cmp(&(b.y, b.x)).expect("finite coords"))
            .expect("polygon is non-empty")
    }
}

/// Regular `m`-gon with circumradius `rho`, first vertex at angle `phase`.
///
/// Vertices are `rho·(cos(2πj/m + phase), sin(2πj/m + phase))`. `m = 1` gives
/// a singleton, `m = 2` a segment; `rho = 0` collapses to the origin.
pub fn regular_polygon(m: usize, rho: f64, phase: f64) -> Result<ConvexPolygon> {
    if m == 0 {
        return Err(Error::invalid("regular polygon needs m >= 1 vertices"));
    }
    if !(rho.is_finite() && rho >= 0.0) || !phase.is_finite() {
        return Err(Error::invalid("rho must be finite and >= 0, phase finite"));
    }
    let pts: Vec<Vec2> = (0..m)
        .map(|j| {
            let t = TAU * j as f64 / m as f64 + phase;
            Vec2::new(rho * t.cos(), rho * t.sin())
        })
        .collect();
    ConvexPolygon::from_points(&pts)
}

/// Walk a convex polygon from `start` along `edges` sorted by direction
/// angle in `[0, 2π)`. `start` must be the (y, x)-smallest vertex of the
/// result and the edges must close up to rounding.
pub(crate) fn polygon_from_edge_fan(start: Vec2, mut edges: Vec<Vec2>) -> Result<ConvexPolygon> {
    edges.retain(|e| e.norm_sq() > 0.0);
    edges.sort_by(|a, b| {
        normalize_mod_tau(a.angle())
            .partial_cmp(&normalize_mod_tau(b.angle()))
            .expect("finite angles")
    });
    let mut verts = Vec::with_capacity(edges.len() + 1);
    let mut acc = start;
    verts.push(acc);
    for e in &edges {
        acc = acc + *e;
        verts.push(acc);
    }
    // The walk closes back at `start`; drop the rounding-noise duplicate.
    if verts.len() > 1 {
        verts.pop();
    }
    ConvexPolygon::from_points(&verts)
}

/// Andrew's monotone chain with duplicate merging and collinear removal.
fn monotone_chain(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).expect("finite coords"));
    let scale = pts.iter().map(|p| p.max_abs()).fold(0.0, f64::max);
    let dup = DUP_TOL * scale;
    pts.dedup_by(|a, b| (a.x - b.x).abs() <= dup && (a.y - b.y).abs() <= dup);
    if pts.len() <= 2 {
        return pts;
    }
    let area_eps = DUP_TOL * scale * scale;

    let mut lower: Vec<Vec2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        push_chain(&mut lower, p, area_eps);
    }
    let mut upper: Vec<Vec2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        push_chain(&mut upper, p, area_eps);
    }
    // Each chain repeats the other's endpoint; drop both and concatenate.
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn push_chain(chain: &mut Vec<Vec2>, p: Vec2, area_eps: f64) {
    while chain.len() >= 2 {
        let a = chain[chain.len() - 2];
        let b = chain[chain.len() - 1];
        if (b - a).cross(p - a) <= area_eps {
            chain.pop();
        } else {
            break;
        }
    }
    chain.push(p);
}
