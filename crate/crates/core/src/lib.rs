//! Planar signed vector sums, zonotopes, and circumradius bounds.
//!
//! The crate is an executable laboratory for a family of sharp planar
//! inequalities connecting three quantities:
//!
//! * the largest Euclidean norm of a signed sum `Σ εᵢ uⁱ` over all sign
//!   choices `εᵢ ∈ {−1, +1}`,
//! * the circumradius and perimeter of convex polygons (a Dowker-type
//!   isoperimetric bound), and
//! * the circumradius of Minkowski sums of symmetric convex bodies.
//!
//! Everything is computed in double precision with explicit tolerances, and
//! every inequality is evaluated twice where possible: by a fast exact
//! algorithm and by an independent brute-force oracle.
//!
//! Modules:
//!
//! * [`geom2d`] — convex polygons, hulls, Minkowski sums, symmetrization.
//! * [`circumball`] — minimal enclosing circles and the Dowker check.
//! * [`zonotope`] — generator sets, exact signed-sum maximizers, equality
//!   characterization.
//! * [`bounds`] — closed-form constants and the Minkowski-sum inequalities.
//! * [`optimizer`] — numerical estimation of the maximin constant `c(d,n,k)`.
//! * [`sample`] — seeded random instances for the verification suites.

pub mod bounds;
pub mod circumball;
pub mod error;
pub mod geom2d;
pub mod optimizer;
pub mod sample;
pub mod zonotope;

pub use bounds::{
    ball_volume, c_exact_2nn, c_lower_bound, c_upper_bound, equality_direction_check,
    minkowski_circumradius_check, quermassintegral_w1, quermassintegral_chain_check, radius_sum_constant,
    zonoid_disc_ratio, CKind, CValue, SymmetricBodySet,
};
pub use circumball::{
    circumcircle, circumradius, dowker_check, is_regular_ngon, min_enclosing_circle, BoundReport,
    Circle,
};
pub use error::{Error, Result};
pub use geom2d::{regular_polygon, ConvexPolygon, Segment, Vec2};
pub use optimizer::{
    estimate_c, objective, sandwich_check, ConfigurationEstimate, OptimizerSettings,
    UnitConfiguration,
};
pub use zonotope::{max_signed_sum_brute_nd, GeneratorSet, SignPattern, SignedSumResult};
