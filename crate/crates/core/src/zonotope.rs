//! Zonotopes `Σ [−uⁱ, uⁱ]` spanned by planar generators, and the exact
//! largest signed sum `max_ε ‖Σ εᵢ uⁱ‖`.
//!
//! Two independent maximizers are provided: an `O(n log n)` rotating sweep
//! over the zonotope's normal fan (exact, used everywhere) and a `2^{n−1}`
//! brute-force enumeration (the oracle, capped at 24 generators). The two
//! must always agree; the verification suites enforce this.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{normalize_mod_pi, polygon_from_edge_fan, ConvexPolygon, Vec2};

/// Enumeration cap for the brute-force oracle.
pub const BRUTE_MAX_GENERATORS: usize = 24;

#[derive(Serialize, Deserialize)]
struct GeneratorData {
    generators: Vec<Vec2>,
}

/// The planar generators `u¹, …, uⁿ` of a zonotope. Zero vectors are
/// allowed; the set itself must be non-empty and finite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GeneratorData", into = "GeneratorData")]
pub struct GeneratorSet {
    generators: Vec<Vec2>,
}

impl TryFrom<GeneratorData> for GeneratorSet {
    type Error = Error;
    fn try_from(data: GeneratorData) -> Result<Self> {
        GeneratorSet::new(data.generators)
    }
}

impl From<GeneratorSet> for GeneratorData {
    fn from(g: GeneratorSet) -> Self {
        GeneratorData { generators: g.generators }
    }
}

/// A choice of sign for each generator; entries are exactly ±1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignPattern(Vec<i8>);

impl TryFrom<Vec<i8>> for SignPattern {
    type Error = Error;
    fn try_from(signs: Vec<i8>) -> Result<Self> {
        SignPattern::new(signs)
    }
}

impl From<SignPattern> for Vec<i8> {
    fn from(p: SignPattern) -> Self {
        p.0
    }
}

impl SignPattern {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignPattern);
        }
        Ok(SignPattern(signs))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A maximizing signed sum: its norm, the sign pattern, and the vector
/// `Σ εᵢ uⁱ` itself.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignedSumResult {
    pub value: f64,
    pub pattern: SignPattern,
    pub vector: Vec2,
}

/// `Σ signs[i] · generators[i]`, evaluated in index order.
pub fn signed_sum(generators: &[Vec2], pattern: &SignPattern) -> Vec2 {
    generators
        .iter()
        .zip(pattern.signs())
        .fold(Vec2::ZERO, |acc, (&u, &s)| acc + u * f64::from(s))
}

impl GeneratorSet {
    pub fn new(generators: Vec<Vec2>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        if generators.iter().any(|u| !u.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        Ok(GeneratorSet { generators })
    }

    pub fn generators(&self) -> &[Vec2] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of the generator norms.
    pub fn total_length(&self) -> f64 {
        self.generators.iter().map(|u| u.norm()).sum()
    }

    /// The zonotope `Σ [−uⁱ, uⁱ]`: a 0-symmetric polygon whose edges are
    /// parallel to the generators, with at most `2n` vertices. Collinear
    /// generators merge; an all-zero set collapses to the origin.
    pub fn zonotope(&self) -> ConvexPolygon {
        let mut edges = Vec::with_capacity(2 * self.generators.len());
        let mut start = Vec2::ZERO;
        for &u in &self.generators {
            if u.norm_sq() == 0.0 {
                continue;
            }
            edges.push(u * 2.0);
            edges.push(u * -2.0);
            // (y, x)-smallest endpoint of [−u, u].
            start = start + if (u.y, u.x) < (0.0, 0.0) { u } else { -u };
        }
        polygon_from_edge_fan(start, edges).expect("finite generators build a valid polygon")
    }

    /// Sharp lower bound `(1/(n sin(π/2n))) Σ ‖uⁱ‖` for the largest
    /// signed sum.
    pub fn lower_bound(&self) -> f64 {
        let n = self.generators.len() as f64;
        self.total_length() / (n * (PI / (2.0 * n)).sin())
    }

    /// Exact maximum of `‖Σ εᵢ uⁱ‖` over all sign patterns, via a rotating
    /// sweep over the `≤ 2n` normal-fan cells.
    ///
    /// For a fixed direction θ the best pattern is `εᵢ = sign⟨uⁱ, θ⟩`; the
    /// pattern changes only when θ crosses a generator normal. The sweep
    /// visits every cell once, flipping one sign per crossing, so ties and
    /// near-parallel generators need no perturbation. Zero generators and
    /// exact ties take sign +1.
    pub fn max_signed_sum_sweep(&self) -> SignedSumResult {
        let gens = &self.generators;
        let n = gens.len();

        // Sign flips happen at the generator normals, reduced mod π.
        let mut events: Vec<(f64, usize)> = gens
            .iter()
            .enumerate()
            .filter(|(_, u)| u.norm_sq() > 0.0)
            .map(|(i, u)| (normalize_mod_pi(u.angle() + PI / 2.0), i))
            .collect();
        if events.is_empty() {
            let pattern = SignPattern::new(vec![1; n]).expect("all +1");
            return SignedSumResult { value: 0.0, pattern, vector: Vec2::ZERO };
        }
        events.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));

        // Start in the wrap-around cell below the smallest event angle.
        let theta0 = (events[0].0 + events[events.len() - 1].0 - PI) / 2.0;
        let dir0 = Vec2::from_angle(theta0);
        let initial_signs: Vec<i8> =
            gens.iter().map(|&u| if u.dot(dir0) < 0.0 { -1 } else { 1 }).collect();

        let mut signs = initial_signs.clone();
        let mut vector = signed_sum(gens, &SignPattern(signs.clone()));
        let mut best_sq = vector.norm_sq();
        let mut best_cell = 0usize;
        for (cell, &(_, i)) in events.iter().enumerate() {
            // Crossing the normal of generator i flips its sign.
            vector = vector - gens[i] * (2.0 * f64::from(signs[i]));
            signs[i] = -signs[i];
            let sq = vector.norm_sq();
            if sq > best_sq {
                best_sq = sq;
                best_cell = cell + 1;
            }
        }

        // Rebuild the winning pattern and re-evaluate it exactly.
        let mut signs = initial_signs;
        for &(_, i) in events.iter().take(best_cell) {
            signs[i] = -signs[i];
        }
        let pattern = SignPattern(signs);
        let vector = signed_sum(gens, &pattern);
        SignedSumResult { value: vector.norm(), pattern, vector }
    }

    /// Brute-force oracle: enumerate `2^{n−1}` sign patterns (the first sign
    /// is pinned to +1 since `‖v‖ = ‖−v‖`). Errors above
    /// [`BRUTE_MAX_GENERATORS`] generators.
    pub fn max_signed_sum_brute(&self) -> Result<SignedSumResult> {
        let gens = &self.generators;
        let n = gens.len();
        if n > BRUTE_MAX_GENERATORS {
            return Err(Error::OracleTooLarge { n, limit: BRUTE_MAX_GENERATORS });
        }
        let mut best_sq = f64::NEG_INFINITY;
        let mut best_mask = 0u32;
        for mask in 0..(1u32 << (n - 1)) {
            let mut v = gens[0];
            for (i, &u) in gens.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    v = v - u;
                } else {
                    v = v + u;
                }
            }
            let sq = v.norm_sq();
            if sq > best_sq {
                best_sq = sq;
                best_mask = mask;
            }
        }
        let mut signs = vec![1i8; n];
        for (i, s) in signs.iter_mut().enumerate().skip(1) {
            if best_mask >> (i - 1) & 1 == 1 {
                *s = -1;
            }
        }
        let pattern = SignPattern(signs);
        let vector = signed_sum(gens, &pattern);
        Ok(SignedSumResult { value: vector.norm(), pattern, vector })
    }

    /// Whether the generators attain the lower bound exactly: either all
    /// zero, or all of equal norm (relative tolerance `tol`) with the `2n`
    /// points `±uⁱ` spaced `π/n` apart (absolute tolerance `tol`, radians) —
    /// the vertex set of a regular `2n`-gon.
    pub fn is_equality_configuration(&self, tol: f64) -> bool {
        let gens = &self.generators;
        let n = gens.len();
        let norms: Vec<f64> = gens.iter().map(|u| u.norm()).collect();
        if norms.iter().all(|&r| r == 0.0) {
            return true;
        }
        let mean = norms.iter().sum::<f64>() / n as f64;
        if norms.iter().any(|&r| (r - mean).abs() > tol * mean) {
            return false;
        }
        let mut angles: Vec<f64> = Vec::with_capacity(2 * n);
        for &u in gens {
            let a = normalize_mod_pi(u.angle());
            angles.push(a);
            angles.push(a + PI);
        }
        angles.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
        let step = PI / n as f64;
        for i in 0..2 * n {
            let next = if i + 1 == 2 * n { angles[0] + 2.0 * PI } else { angles[i + 1] };
            if (next - angles[i] - step).abs() > tol {
                return false;
            }
        }
        true
    }
}

/// Brute-force signed-sum maximum for vectors of any dimension.
///
/// Same enumeration as [`GeneratorSet::max_signed_sum_brute`] but over raw
/// coordinate slices; all vectors must share one dimension.
pub fn max_signed_sum_brute_nd(vectors: &[Vec<f64>]) -> Result<(f64, SignPattern, Vec<f64>)> {
    if vectors.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    let n = vectors.len();
    if n > BRUTE_MAX_GENERATORS {
        return Err(Error::OracleTooLarge { n, limit: BRUTE_MAX_GENERATORS });
    }
    let dim = vectors[0].len();
    if vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::invalid("vectors must share one dimension"));
    }
    if vectors.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFiniteCoordinate);
    }
    let mut acc = vec![0.0; dim];
    let mut best_sq = f64::NEG_INFINITY;
    let mut best_mask = 0u32;
    for mask in 0..(1u32 << (n - 1)) {
        acc.copy_from_slice(&vectors[0]);
        for (i, v) in vectors.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                for (a, x) in acc.iter_mut().zip(v) {
                    *a -= x;
                }
            } else {
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += x;
                }
            }
        }
        let sq: f64 = acc.iter().map(|x| x * x).sum();
        if sq > best_sq {
            best_sq = sq;
            best_mask = mask;
        }
    }
    let mut signs = vec![1i8; n];
    for (i, s) in signs.iter_mut().enumerate().skip(1) {
        if best_mask >> (i - 1) & 1 == 1 {
            *s = -1;
        }
    }
    let mut vector = vec![0.0; dim];
    for (v, &s) in vectors.iter().zip(&signs) {
        for (a, x) in vector.iter_mut().zip(v) {
            *a += f64::from(s) * x;
        }
    }
    let value = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
    Ok((value, SignPattern(signs), vector))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circumball::circumradius;

    fn gens(v: &[(f64, f64)]) -> GeneratorSet {
        GeneratorSet::new(v.iter().map(|&(x, y)| Vec2::new(x, y)).collect()).unwrap()
    }

    const SQRT3_2: f64 = 0.866_025_403_784_438_6;

    #[test]
    fn zonotope_of_orthonormal_pair_is_square() {
        let g = gens(&[(1.0, 0.0), (0.0, 1.0)]);
        let z = g.zonotope();
        let expected = ConvexPolygon::from_points(&[
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
        ])
        .unwrap();
        assert!(z.approx_eq(&expected, 1e-12));
        assert!((z.perimeter() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn zonotope_of_hexagonal_generators() {
        let g = gens(&[(1.0, 0.0), (0.5, SQRT3_2), (-0.5, SQRT3_2)]);
        let z = g.zonotope();
        assert_eq!(z.vertex_count(), 6);
        assert!((circumradius(&z) - 2.0).abs() < 1e-9);
        assert!((z.perimeter() - 4.0 * g.total_length()).abs() < 1e-9);
        assert!(z.is_origin_symmetric(1e-12));
    }

    #[test]
    fn zonotope_of_collinear_generators_is_segment() {
        let g = gens(&[(1.0, 0.0), (2.0, 0.0)]);
        let z = g.zonotope();
        assert!(z.is_segment());
        let expected =
            ConvexPolygon::from_points(&[Vec2::new(-3.0, 0.0), Vec2::new(3.0, 0.0)]).unwrap();
        assert!(z.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn zonotope_of_zero_generators_is_origin() {
        let g = gens(&[(0.0, 0.0), (0.0, 0.0)]);
        assert!(g.zonotope().is_singleton());
        assert_eq!(g.max_signed_sum_brute().unwrap().value, 0.0);
        assert_eq!(g.max_signed_sum_sweep().value, 0.0);
    }

    #[test]
    fn sweep_orthonormal_pair() {
        let g = gens(&[(1.0, 0.0), (0.0, 1.0)]);
        let r = g.max_signed_sum_sweep();
        assert!((r.value - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((r.vector.norm() - r.value).abs() < 1e-12);
    }

    #[test]
    fn sweep_hexagonal_generators_reach_two() {
        let g = gens(&[(1.0, 0.0), (0.5, SQRT3_2), (-0.5, SQRT3_2)]);
        assert!((g.max_signed_sum_sweep().value - 2.0).abs() < 1e-12);
        assert!((g.max_signed_sum_brute().unwrap().value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sweep_single_generator() {
        let g = gens(&[(1.0, 0.0)]);
        let r = g.max_signed_sum_sweep();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!((r.vector.x.abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn brute_four_directions() {
        // Unit vectors at angles jπ/4 reach 1/sin(π/8).
        let g = GeneratorSet::new(
            (0..4).map(|j| Vec2::from_angle(j as f64 * PI / 4.0)).collect(),
        )
        .unwrap();
        let r = g.max_signed_sum_brute().unwrap();
        let expect = 1.0 / (PI / 8.0).sin();
        assert!((r.value - expect).abs() < 1e-12, "value {}", r.value);
    }

    #[test]
    fn brute_guard_rejects_large_instances() {
        let g = GeneratorSet::new(vec![Vec2::new(1.0, 0.0); 25]).unwrap();
        assert!(matches!(
            g.max_signed_sum_brute(),
            Err(Error::OracleTooLarge { n: 25, .. })
        ));
    }

    #[test]
    fn pattern_reevaluates_to_reported_vector() {
        let g = gens(&[(0.3, -0.4), (1.2, 0.1), (-0.5, 0.9), (0.0, 0.0)]);
        for r in [g.max_signed_sum_sweep(), g.max_signed_sum_brute().unwrap()] {
            let v = signed_sum(g.generators(), &r.pattern);
            assert_eq!(v, r.vector);
            assert!((v.norm() - r.value).abs() <= 1e-12 * (1.0 + r.value));
        }
    }

    #[test]
    fn lower_bound_closed_forms() {
        assert!((gens(&[(1.0, 0.0)]).lower_bound() - 1.0).abs() < 1e-12);
        let two = gens(&[(1.0, 0.0), (0.0, 1.0)]);
        assert!((two.lower_bound() - 2.0_f64.sqrt()).abs() < 1e-12);
        let three = gens(&[(1.0, 0.0), (0.5, SQRT3_2), (-0.5, SQRT3_2)]);
        assert!((three.lower_bound() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn equality_configuration_cases() {
        let three = GeneratorSet::new(
            (0..3).map(|j| Vec2::from_angle(j as f64 * PI / 3.0)).collect(),
        )
        .unwrap();
        assert!(three.is_equality_configuration(1e-9));
        assert!(gens(&[(1.0, 0.0), (0.0, 1.0)]).is_equality_configuration(1e-9));
        assert!(!gens(&[(1.0, 0.0), (1.0, 0.0)]).is_equality_configuration(1e-6));
        assert!(gens(&[(0.0, 0.0), (0.0, 0.0)]).is_equality_configuration(1e-9));
        // One zero generator among nonzero ones can never be regular.
        assert!(!gens(&[(1.0, 0.0), (0.0, 0.0)]).is_equality_configuration(1e-6));
    }

    #[test]
    fn nd_brute_matches_planar_brute() {
        let g = gens(&[(0.9, -0.2), (0.1, 0.7), (-0.6, 0.3)]);
        let planar = g.max_signed_sum_brute().unwrap();
        let nd: Vec<Vec<f64>> =
            g.generators().iter().map(|u| vec![u.x, u.y]).collect();
        let (value, pattern, vector) = max_signed_sum_brute_nd(&nd).unwrap();
        assert!((value - planar.value).abs() < 1e-12);
        assert_eq!(pattern, planar.pattern);
        assert!((vector[0] - planar.vector.x).abs() < 1e-12);
    }

    #[test]
    fn nd_brute_rejects_mixed_dimensions() {
        let bad = vec![vec![1.0, 0.0], vec![1.0, 0.0, 0.0]];
        assert!(max_signed_sum_brute_nd(&bad).is_err());
    }

    #[test]
    fn generator_set_json_roundtrip() {
        let g = gens(&[(1.0, 0.0), (0.5, SQRT3_2)]);
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.contains("\"generators\""));
        let back: GeneratorSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<GeneratorSet>(r#"{"generators": []}"#).is_err());
    }
}
