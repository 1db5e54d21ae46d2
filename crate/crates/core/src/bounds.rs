//! Closed-form constants and the main planar inequalities: the exact maximin
//! constant `c(2,n,n) = 1/sin(π/2n)`, its one-sided bounds for general
//! parameters, the circumradius bound for Minkowski sums of planar symmetric
//! bodies, and the dimension-free `2κ_{d−1}/(dκ_d)` chain.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::circumball::{circumradius, BoundReport};
use crate::error::{Error, Result};
use crate::geom2d::{ConvexPolygon, Segment, Vec2};

/// How a [`CValue`] is to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CKind {
    /// Proven exact value.
    Exact,
    /// Valid lower bound for every admissible `n`.
    Lower,
    /// Valid upper bound for every admissible `d` and `k`.
    Upper,
    /// Numerical estimate without a ground-truth claim.
    Estimate,
}

/// A value attached to the maximin constant `c(d,n,k)`. Parameters that the
/// value does not depend on are left unset.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CValue {
    pub d: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub value: f64,
    pub kind: CKind,
}

/// Exact value `c(2,n,n) = 1/sin(π/2n)`.
pub fn c_exact_2nn(n: u32) -> Result<CValue> {
    if n == 0 {
        return Err(Error::invalid("c(2,n,n) needs n >= 1"));
    }
    Ok(CValue {
        d: Some(2),
        n: Some(n),
        k: Some(n),
        value: 1.0 / (PI / (2.0 * f64::from(n))).sin(),
        kind: CKind::Exact,
    })
}

/// Lower bound `c(2,n,k) ≥ 1/sin(π/2k)`, valid for every `n ≥ k`; it is
/// attained exactly when `k ∈ {1, n}`.
pub fn c_lower_bound(k: u32) -> CValue {
    assert!(k >= 1, "c lower bound needs k >= 1");
    CValue {
        d: Some(2),
        n: None,
        k: Some(k),
        value: 1.0 / (PI / (2.0 * f64::from(k))).sin(),
        kind: CKind::Lower,
    }
}

/// Upper bound `c(d,n,k) ≤ c(2,n,n) = 1/sin(π/2n)`, valid in every
/// dimension and for every `k ≤ n` by monotonicity.
pub fn c_upper_bound(n: u32) -> CValue {
    assert!(n >= 1, "c upper bound needs n >= 1");
    CValue {
        d: None,
        n: Some(n),
        k: None,
        value: 1.0 / (PI / (2.0 * f64::from(n))).sin(),
        kind: CKind::Upper,
    }
}

#[derive(Serialize, Deserialize)]
struct BodySetData {
    bodies: Vec<ConvexPolygon>,
}

/// A list of 0-symmetric planar convex bodies with their circumradii.
///
/// Inputs are centrally symmetrized on load (`K ↦ (K−K)/2`), which is a
/// translation for bodies that are already symmetric; [`Self::was_symmetric`]
/// records which inputs needed no change, so callers can warn about the rest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BodySetData", into = "BodySetData")]
pub struct SymmetricBodySet {
    bodies: Vec<ConvexPolygon>,
    radii: Vec<f64>,
    was_symmetric: Vec<bool>,
}

impl TryFrom<BodySetData> for SymmetricBodySet {
    type Error = Error;
    fn try_from(data: BodySetData) -> Result<Self> {
        SymmetricBodySet::from_bodies(data.bodies)
    }
}

impl From<SymmetricBodySet> for BodySetData {
    fn from(s: SymmetricBodySet) -> Self {
        BodySetData { bodies: s.bodies }
    }
}

impl SymmetricBodySet {
    pub fn from_bodies(bodies: Vec<ConvexPolygon>) -> Result<Self> {
        if bodies.is_empty() {
            return Err(Error::EmptyBodySet);
        }
        let mut stored = Vec::with_capacity(bodies.len());
        let mut radii = Vec::with_capacity(bodies.len());
        let mut was_symmetric = Vec::with_capacity(bodies.len());
        for body in bodies {
            let sym = body.symmetrize();
            // A t-symmetric body has its center at the vertex centroid, so
            // recentering must reproduce the symmetrization.
            was_symmetric.push(body.translate(-body.vertex_centroid()).approx_eq(&sym, 1e-9));
            radii.push(circumradius(&sym));
            stored.push(sym);
        }
        Ok(SymmetricBodySet { bodies: stored, radii, was_symmetric })
    }

    /// Convenience constructor for segment bodies `[−uʲ, uʲ]`.
    pub fn from_centered_segments(half_extents: &[Vec2]) -> Result<Self> {
        let bodies: Vec<ConvexPolygon> =
            half_extents.iter().map(|&u| Segment::centered(u).to_polygon()).collect();
        Self::from_bodies(bodies)
    }

    pub fn bodies(&self) -> &[ConvexPolygon] {
        &self.bodies
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    /// Per-body flags: `true` when the corresponding input was already
    /// symmetric (about some center) within tolerance.
    pub fn was_symmetric(&self) -> &[bool] {
        &self.was_symmetric
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    /// Iterated Minkowski sum `K¹ + … + Kⁿ`.
    pub fn minkowski_sum_all(&self) -> ConvexPolygon {
        let mut iter = self.bodies.iter();
        let first = iter.next().expect("body set is non-empty").clone();
        iter.fold(first, |acc, body| acc.minkowski_sum(body))
    }
}

/// Check `R(K¹+…+Kⁿ) ≥ (1/(n sin(π/2n))) (R(K¹)+…+R(Kⁿ))` for symmetric
/// planar bodies.
pub fn minkowski_circumradius_check(s: &SymmetricBodySet) -> BoundReport {
    let n = s.len() as f64;
    let lhs = circumradius(&s.minkowski_sum_all());
    let rhs = s.radii().iter().sum::<f64>() / (n * (PI / (2.0 * n)).sin());
    BoundReport::new(format!("minkowski circumradius n={}", s.len()), lhs, rhs)
}

/// Necessary equality condition for the Minkowski-sum bound, for segment
/// bodies: the `n` directions must be a rotation of `{jπ/n}` (gaps of `π/n`
/// mod π, absolute tolerance `tol`) and all lengths must agree (relative
/// tolerance `tol`). The condition is not sufficient in general.
pub fn equality_direction_check(s: &SymmetricBodySet, tol: f64) -> Result<bool> {
    let n = s.len();
    if n < 2 {
        return Err(Error::invalid("direction check needs at least 2 segments"));
    }
    let mut angles = Vec::with_capacity(n);
    let mut lengths = Vec::with_capacity(n);
    for body in s.bodies() {
        if !body.is_segment() {
            return Err(Error::NotASegment);
        }
        let seg = Segment::new(body.vertices()[0], body.vertices()[1])?;
        angles.push(seg.direction_angle().expect("segments have two distinct vertices"));
        lengths.push(seg.length());
    }
    let mean = lengths.iter().sum::<f64>() / n as f64;
    if lengths.iter().any(|&l| (l - mean).abs() > tol * mean) {
        return Ok(false);
    }
    angles.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
    let step = PI / n as f64;
    for i in 0..n {
        let next = if i + 1 == n { angles[0] + PI } else { angles[i + 1] };
        if (next - angles[i] - step).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Volume `κ_d` of the d-dimensional Euclidean unit ball, via the recurrence
/// `κ_d = κ_{d−2} · 2π/d` with `κ₀ = 1`, `κ₁ = 2`.
pub fn ball_volume(d: u32) -> f64 {
    match d {
        0 => 1.0,
        1 => 2.0,
        _ => ball_volume(d - 2) * 2.0 * PI / f64::from(d),
    }
}

/// The dimension-free constant `2κ_{d−1}/(d·κ_d)`; equals `2/π` for `d = 2`.
pub fn radius_sum_constant(d: u32) -> f64 {
    assert!(d >= 1, "remark constant needs d >= 1");
    2.0 * ball_volume(d - 1) / (f64::from(d) * ball_volume(d))
}

/// First quermassintegral in the plane: `W₁(P) = per(P)/2`, normalized so
/// that `W₁(𝔹²) = κ₂ = π`.
pub fn quermassintegral_w1(p: &ConvexPolygon) -> f64 {
    p.perimeter() / 2.0
}

/// `W_{d−1}` of a Euclidean ball of radius `rho`.
pub fn quermassintegral_ball(d: u32, rho: f64) -> f64 {
    ball_volume(d) * rho
}

/// `W_{d−1}` of a segment of half-length `rho` (so circumradius `rho`).
pub fn quermassintegral_segment(d: u32, rho: f64) -> f64 {
    assert!(d >= 1, "segment quermassintegral needs d >= 1");
    2.0 * ball_volume(d - 1) * rho / f64::from(d)
}

/// The planar chain behind the dimension-free bound, as four reports:
///
/// 1. `κ₂·R(ΣK) ≥ W₁(ΣK)`
/// 2. `W₁(ΣK) = Σ W₁(Kⁱ)` (Minkowski additivity; an equality report)
/// 3. `Σ W₁(Kⁱ) ≥ 2 Σ R(Kⁱ)` (i.e. `(2κ₁/2)·R` per body)
/// 4. end to end, `R(ΣK) ≥ (2/π) Σ R(Kⁱ)`
pub fn quermassintegral_chain_check(s: &SymmetricBodySet) -> Vec<BoundReport> {
    let sum = s.minkowski_sum_all();
    let r_sum = circumradius(&sum);
    let w_sum = quermassintegral_w1(&sum);
    let w_parts: f64 = s.bodies().iter().map(quermassintegral_w1).sum();
    let r_parts: f64 = s.radii().iter().sum();
    vec![
        BoundReport::new("kappa_2 R(sum) >= W_1(sum)", PI * r_sum, w_sum),
        BoundReport::new("W_1(sum) = sum W_1", w_sum, w_parts),
        BoundReport::new("sum W_1 >= 2 sum R", w_parts, 2.0 * r_parts),
        BoundReport::new("R(sum) >= (2/pi) sum R", r_sum, 2.0 / PI * r_parts),
    ]
}

/// Circumradius-to-radius-sum ratio `R(S¹+…+Sⁿ)/ΣR(Sⁱ)` for `n` unit
/// segments at angles `jπ/n`: equals `1/(n sin(π/2n))`, strictly decreasing
/// in `n` with limit `2/π`.
pub fn zonoid_disc_ratio(n: u32) -> f64 {
    assert!(n >= 1, "zonoid ratio needs n >= 1");
    let nf = f64::from(n);
    1.0 / (nf * (PI / (2.0 * nf)).sin())
}

/// All diameter pairs of a polygon: the maximum vertex distance together
/// with every vertex index pair within `rel_tol` of it.
pub fn diameter_pairs(p: &ConvexPolygon, rel_tol: f64) -> (f64, Vec<(usize, usize)>) {
    let verts = p.vertices();
    let mut max_d = 0.0f64;
    for i in 0..verts.len() {
        for j in 0..i {
            max_d = max_d.max((verts[i] - verts[j]).norm());
        }
    }
    let mut pairs = Vec::new();
    for i in 0..verts.len() {
        for j in 0..i {
            if (verts[i] - verts[j]).norm() >= max_d * (1.0 - rel_tol) {
                pairs.push((j, i));
            }
        }
    }
    (max_d, pairs)
}

/// The unique longest segment of a polygon, if there is one.
///
/// Uniqueness is decided at relative tolerance `rel_tol` on the diameter;
/// this is a numerical gate, not an exact certificate.
pub fn unique_longest_segment(p: &ConvexPolygon, rel_tol: f64) -> Option<Segment> {
    let (max_d, pairs) = diameter_pairs(p, rel_tol);
    if max_d == 0.0 || pairs.len() != 1 {
        return None;
    }
    let (j, i) = pairs[0];
    Some(Segment { a: p.vertices()[j], b: p.vertices()[i] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2d::regular_polygon;

    fn poly(pts: &[(f64, f64)]) -> ConvexPolygon {
        let pts: Vec<Vec2> = pts.iter().map(|&(x, y)| Vec2::new(x, y)).collect();
        ConvexPolygon::from_points(&pts).unwrap()
    }

    fn rhombus_pair(half_width: f64) -> SymmetricBodySet {
        let k1 = poly(&[(1.0, 0.0), (0.0, half_width), (-1.0, 0.0), (0.0, -half_width)]);
        let k2 = poly(&[(0.0, 1.0), (-half_width, 0.0), (0.0, -1.0), (half_width, 0.0)]);
        SymmetricBodySet::from_bodies(vec![k1, k2]).unwrap()
    }

    #[test]
    fn c_values_closed_forms() {
        assert!((c_exact_2nn(1).unwrap().value - 1.0).abs() < 1e-15);
        assert!((c_exact_2nn(2).unwrap().value - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((c_exact_2nn(3).unwrap().value - 2.0).abs() < 1e-12);
        assert!(c_exact_2nn(0).is_err());

        assert!((c_lower_bound(1).value - 1.0).abs() < 1e-15);
        assert!((c_lower_bound(2).value - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((c_lower_bound(4).value - 2.613_125_929_752_753).abs() < 1e-12);

        assert!((c_upper_bound(3).value - 2.0).abs() < 1e-12);
        assert!((c_upper_bound(1).value - 1.0).abs() < 1e-15);
        assert!((c_upper_bound(6).value - 3.863_703_305_156_273).abs() < 1e-12);
    }

    #[test]
    fn c_value_kinds() {
        assert_eq!(c_exact_2nn(4).unwrap().kind, CKind::Exact);
        assert_eq!(c_lower_bound(4).kind, CKind::Lower);
        assert_eq!(c_upper_bound(4).kind, CKind::Upper);
    }

    #[test]
    fn c_sandwich_for_k_le_n() {
        for n in 1..=10u32 {
            for k in 1..=n {
                let lo = c_lower_bound(k).value;
                let hi = c_upper_bound(n).value;
                assert!(lo <= hi + 1e-12, "k={k} n={n}");
                if k == n {
                    assert!((lo - hi).abs() < 1e-12);
                } else {
                    assert!(lo < hi - 1e-9);
                }
            }
        }
    }

    #[test]
    fn narrow_rhombi_attain_equality() {
        let s = rhombus_pair(0.25);
        assert_eq!(s.radii(), &[1.0, 1.0]);
        assert!(s.was_symmetric().iter().all(|&b| b));
        let report = minkowski_circumradius_check(&s);
        assert!((report.lhs - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((report.rhs - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(report.equality);
    }

    #[test]
    fn wide_rhombi_are_strict() {
        let s = rhombus_pair(0.5);
        let report = minkowski_circumradius_check(&s);
        assert!((report.lhs - 1.5).abs() < 1e-12);
        assert!((report.rhs - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(!report.equality);
        assert!(report.holds());
        assert!((report.slack - (1.5 - 2.0_f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn segment_configuration_attains_equality() {
        for n in 2..=10u32 {
            let us: Vec<Vec2> =
                (1..=n).map(|j| Vec2::from_angle(f64::from(j) * PI / f64::from(n))).collect();
            let s = SymmetricBodySet::from_centered_segments(&us).unwrap();
            let report = minkowski_circumradius_check(&s);
            assert!(report.equality, "n={n} slack={}", report.slack);
        }
    }

    #[test]
    fn direction_check_accepts_rotated_equiangular_segments() {
        let us: Vec<Vec2> = (0..3).map(|j| Vec2::from_angle(f64::from(j) * PI / 3.0)).collect();
        let s = SymmetricBodySet::from_centered_segments(&us).unwrap();
        assert!(equality_direction_check(&s, 1e-9).unwrap());
    }

    #[test]
    fn direction_check_rejects_wrong_gaps_and_lengths() {
        let bad_gaps: Vec<Vec2> =
            [0.0, PI / 4.0, PI / 2.0].iter().map(|&a| Vec2::from_angle(a)).collect();
        let s = SymmetricBodySet::from_centered_segments(&bad_gaps).unwrap();
        assert!(!equality_direction_check(&s, 1e-9).unwrap());

        let unequal = [Vec2::new(1.0, 0.0), Vec2::new(0.0, 2.0)];
        let s = SymmetricBodySet::from_centered_segments(&unequal).unwrap();
        assert!(!equality_direction_check(&s, 1e-9).unwrap());
    }

    #[test]
    fn direction_check_rejects_non_segments() {
        let s = SymmetricBodySet::from_bodies(vec![
            regular_polygon(4, 1.0, 0.0).unwrap(),
            regular_polygon(4, 1.0, 0.3).unwrap(),
        ])
        .unwrap();
        assert!(matches!(equality_direction_check(&s, 1e-9), Err(Error::NotASegment)));
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(0), 1.0);
        assert_eq!(ball_volume(1), 2.0);
        assert!((ball_volume(2) - PI).abs() < 1e-15);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
        assert!((ball_volume(5) - 8.0 * PI * PI / 15.0).abs() < 1e-14);
    }

    #[test]
    fn radius_sum_constants() {
        assert!((radius_sum_constant(1) - 1.0).abs() < 1e-15);
        assert!((radius_sum_constant(2) - 2.0 / PI).abs() < 1e-15);
        assert!((radius_sum_constant(3) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn w1_values() {
        let disc = regular_polygon(720, 1.0, 0.0).unwrap();
        assert!((quermassintegral_w1(&disc) - PI).abs() < 1e-4);
        let seg = Segment::centered(Vec2::new(1.0, 0.0)).to_polygon();
        assert!((quermassintegral_w1(&seg) - 2.0).abs() < 1e-12);
        assert!((quermassintegral_segment(2, 1.0) - 2.0).abs() < 1e-15);
        let point = poly(&[(2.0, 3.0)]);
        assert_eq!(quermassintegral_w1(&point), 0.0);
        assert!((quermassintegral_ball(2, 1.0) - PI).abs() < 1e-15);
    }

    #[test]
    fn chain_on_two_squares_is_strict_end_to_end() {
        let s = SymmetricBodySet::from_bodies(vec![
            regular_polygon(4, 1.0, 0.0).unwrap(),
            regular_polygon(4, 1.0, 0.0).unwrap(),
        ])
        .unwrap();
        let reports = quermassintegral_chain_check(&s);
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert!(r.holds(), "{}: slack {}", r.context, r.slack);
        }
        assert!(reports[1].equality);
        assert!(!reports[3].equality);
    }

    #[test]
    fn chain_equality_for_orthogonal_segments() {
        let s = SymmetricBodySet::from_centered_segments(&[
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap();
        let reports = quermassintegral_chain_check(&s);
        // Step 3 is the segment equality case.
        assert!(reports[2].equality);
        for r in &reports {
            assert!(r.holds());
        }
    }

    #[test]
    fn chain_on_singletons_is_all_zero() {
        let s = SymmetricBodySet::from_bodies(vec![
            poly(&[(1.0, 2.0)]),
            poly(&[(-3.0, 0.5)]),
        ])
        .unwrap();
        for r in quermassintegral_chain_check(&s) {
            assert_eq!(r.lhs, 0.0);
            assert_eq!(r.rhs, 0.0);
            assert!(r.equality);
        }
    }

    #[test]
    fn zonoid_ratio_values_and_limit() {
        assert!((zonoid_disc_ratio(1) - 1.0).abs() < 1e-15);
        assert!((zonoid_disc_ratio(2) - 1.0 / 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((zonoid_disc_ratio(64) - 2.0 / PI).abs() < 1e-3);
    }

    #[test]
    fn asymmetric_input_is_flagged_and_symmetrized() {
        let tri = poly(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        let s = SymmetricBodySet::from_bodies(vec![tri]).unwrap();
        assert_eq!(s.was_symmetric(), &[false]);
        assert!(s.bodies()[0].is_origin_symmetric(1e-9));
    }

    #[test]
    fn direction_condition_is_not_sufficient() {
        // The wider rhombus pair: its longest segments are axis-aligned with
        // equal lengths, so the direction condition passes, yet the bound
        // stays strict.
        let k1 = poly(&[(1.0, 0.0), (0.0, 0.5), (-1.0, 0.0), (0.0, -0.5)]);
        let k2 = poly(&[(0.0, 1.0), (-0.5, 0.0), (0.0, -1.0), (0.5, 0.0)]);
        let segments: Vec<ConvexPolygon> = [&k1, &k2]
            .iter()
            .map(|b| unique_longest_segment(b, 1e-6).unwrap().to_polygon())
            .collect();
        let seg_set = SymmetricBodySet::from_bodies(segments).unwrap();
        assert!(equality_direction_check(&seg_set, 1e-9).unwrap());

        let full = SymmetricBodySet::from_bodies(vec![k1, k2]).unwrap();
        let report = minkowski_circumradius_check(&full);
        assert!(!report.equality);
        assert!(report.strict_by(0.08));
    }

    #[test]
    fn unique_longest_segment_on_rhombus() {
        let k1 = poly(&[(1.0, 0.0), (0.0, 0.5), (-1.0, 0.0), (0.0, -0.5)]);
        let seg = unique_longest_segment(&k1, 1e-6).unwrap();
        assert!((seg.length() - 2.0).abs() < 1e-12);
        assert!((seg.direction_angle().unwrap() - 0.0).abs() < 1e-12);
        // A square's diagonals tie, so no unique longest segment.
        let sq = poly(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]);
        assert!(unique_longest_segment(&sq, 1e-6).is_none());
    }
}
