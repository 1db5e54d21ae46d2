//! Seeded random instances for the verification suites: convex polygons,
//! generator sets, and symmetric body sets. All samplers take an external
//! RNG so suites and tests stay reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::SymmetricBodySet;
use crate::geom2d::{ConvexPolygon, Vec2};
use crate::zonotope::GeneratorSet;

/// Deterministic RNG for a suite seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Convex hull of 1 to `max_points` uniform points in `[−scale, scale]²`.
/// Degenerate polygons (singletons, segments) occur when few points are
/// drawn.
pub fn convex_polygon(rng: &mut impl Rng, max_points: usize, scale: f64) -> ConvexPolygon {
    let k = rng.gen_range(1..=max_points.max(1));
    let pts: Vec<Vec2> = (0..k)
        .map(|_| Vec2::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale)))
        .collect();
    ConvexPolygon::from_points(&pts).expect("finite sampled points")
}

/// `n` generators with coordinates uniform in `[−1, 1]`.
pub fn generator_set(rng: &mut impl Rng, n: usize) -> GeneratorSet {
    let gens: Vec<Vec2> = (0..n)
        .map(|_| Vec2::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
        .collect();
    GeneratorSet::new(gens).expect("n >= 1 finite generators")
}

/// A set of `n_bodies` random polygons (each from up to `max_points` points),
/// centrally symmetrized on load.
pub fn symmetric_body_set(
    rng: &mut impl Rng,
    n_bodies: usize,
    max_points: usize,
) -> SymmetricBodySet {
    let bodies: Vec<ConvexPolygon> =
        (0..n_bodies).map(|_| convex_polygon(rng, max_points, 1.0)).collect();
    SymmetricBodySet::from_bodies(bodies).expect("non-empty body list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let a = generator_set(&mut rng(7), 5);
        let b = generator_set(&mut rng(7), 5);
        assert_eq!(a, b);
        let p = convex_polygon(&mut rng(7), 12, 1.0);
        let q = convex_polygon(&mut rng(7), 12, 1.0);
        assert_eq!(p, q);
    }

    #[test]
    fn sampled_polygons_respect_bounds() {
        let mut r = rng(3);
        for _ in 0..200 {
            let p = convex_polygon(&mut r, 12, 1.0);
            assert!(p.vertex_count() <= 12);
            assert!(p.vertices().iter().all(|v| v.x.abs() <= 1.0 && v.y.abs() <= 1.0));
        }
    }
}
