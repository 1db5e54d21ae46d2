//! Fixed instances shipped with the repository (`fixtures/` at the root) and
//! embedded here so `verify` needs no filesystem access.

use std::f64::consts::PI;

use sumrad_core::bounds::SymmetricBodySet;
use sumrad_core::geom2d::Vec2;
use sumrad_core::zonotope::GeneratorSet;

pub const EQUALITY_RHOMBI: &str = include_str!("../../../fixtures/equality_rhombi.json");
pub const STRICT_RHOMBI: &str = include_str!("../../../fixtures/strict_rhombi.json");
pub const HEXAGON_GENERATORS: &str = include_str!("../../../fixtures/hexagon_generators.json");
pub const SQUARE_GENERATORS: &str = include_str!("../../../fixtures/square_generators.json");
pub const ZERO_GENERATOR: &str = include_str!("../../../fixtures/zero_generator.json");

/// The two rhombi whose Minkowski sum attains the planar bound with equality.
pub fn equality_rhombi() -> SymmetricBodySet {
    serde_json::from_str(EQUALITY_RHOMBI).expect("bundled fixture parses")
}

/// The two wider rhombi whose sum satisfies the bound strictly even though
/// their longest segments pass the direction condition.
pub fn strict_rhombi() -> SymmetricBodySet {
    serde_json::from_str(STRICT_RHOMBI).expect("bundled fixture parses")
}

pub fn hexagon_generators() -> GeneratorSet {
    serde_json::from_str(HEXAGON_GENERATORS).expect("bundled fixture parses")
}

pub fn square_generators() -> GeneratorSet {
    serde_json::from_str(SQUARE_GENERATORS).expect("bundled fixture parses")
}

pub fn zero_generator() -> GeneratorSet {
    serde_json::from_str(ZERO_GENERATOR).expect("bundled fixture parses")
}

/// Unit generators at angles `jπ/n`, the equality configuration.
pub fn regular_generators(n: usize) -> GeneratorSet {
    let gens: Vec<Vec2> = (0..n).map(|j| Vec2::from_angle(j as f64 * PI / n as f64)).collect();
    GeneratorSet::new(gens).expect("n >= 1")
}

/// Unit segments `[−uʲ, uʲ]` at angles `jπ/n`, the sharpness configuration.
pub fn segment_configuration(n: usize) -> SymmetricBodySet {
    let us: Vec<Vec2> = (1..=n).map(|j| Vec2::from_angle(j as f64 * PI / n as f64)).collect();
    SymmetricBodySet::from_centered_segments(&us).expect("n >= 1")
}
