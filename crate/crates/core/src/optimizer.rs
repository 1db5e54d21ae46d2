//! Numerical estimation of the maximin constant
//! `c(d,n,k) = min max ‖Σ ε u‖`: the outer minimum runs over `n` unit
//! vectors, the inner maximum over all `k`-subsets and sign choices.
//!
//! The objective is evaluated exactly (planar sweep for `d = 2, k = n`,
//! guarded enumeration otherwise); the outer minimization is a multi-start
//! coordinate descent on the angle parameterization. Estimates are upper
//! bounds on the true constant and are cross-checked against the closed-form
//! sandwich `1/sin(π/2k) ≤ c(2,n,k) ≤ 1/sin(π/2n)`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{c_lower_bound, c_upper_bound};
use crate::circumball::BoundReport;
use crate::error::{Error, Result};
use crate::geom2d::{normalize_mod_pi, Vec2};
use crate::zonotope::GeneratorSet;

/// Total sign-pattern budget for exact enumeration of the objective.
pub const ENUMERATION_LIMIT: f64 = 1e7;

/// Tolerance for the sandwich check on estimates.
pub const SANDWICH_TOL: f64 = 1e-6;

/// Ties between restarts below this are broken lexicographically.
const TIE_TOL: f64 = 1e-12;

/// Restart budget and stopping parameters for [`estimate_c`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OptimizerSettings {
    /// Independent random restarts.
    pub restarts: u32,
    /// Seed for the restart initializer.
    pub seed: u64,
    /// Maximum coordinate-sweep rounds per restart.
    pub max_iters: u32,
    /// Bracket width at which a restart stops refining.
    pub tol: f64,
}

impl Default for OptimizerSettings {
    fn default() -> Self {
        OptimizerSettings { restarts: 100, seed: 0, max_iters: 80, tol: 1e-8 }
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigData {
    d: u32,
    params: Vec<f64>,
    #[serde(default)]
    vectors: Vec<Vec<f64>>,
}

/// `n` unit vectors on the sphere `S^{d−1}`, stored through their angle
/// parameterization: one angle per vector for `d = 2`, a (polar, azimuthal)
/// pair per vector for `d = 3`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ConfigData", into = "ConfigData")]
pub struct UnitConfiguration {
    d: u32,
    params: Vec<f64>,
}

impl TryFrom<ConfigData> for UnitConfiguration {
    type Error = Error;
    fn try_from(data: ConfigData) -> Result<Self> {
        UnitConfiguration::from_params(data.d, data.params)
    }
}

impl From<UnitConfiguration> for ConfigData {
    fn from(c: UnitConfiguration) -> Self {
        let vectors = c.vectors();
        ConfigData { d: c.d, params: c.params, vectors }
    }
}

impl UnitConfiguration {
    /// Planar configuration from direction angles.
    pub fn from_angles(angles: Vec<f64>) -> Result<Self> {
        Self::from_params(2, angles)
    }

    pub fn from_params(d: u32, params: Vec<f64>) -> Result<Self> {
        if params.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        let valid = match d {
            2 => !params.is_empty(),
            3 => !params.is_empty() && params.len().is_multiple_of(2),
            _ => return Err(Error::invalid("configurations support d = 2 or d = 3")),
        };
        if !valid {
            return Err(Error::invalid("parameter list does not describe n >= 1 vectors"));
        }
        Ok(UnitConfiguration { d, params })
    }

    /// Equally spaced reference configuration: angles `jπ/n` (embedded in the
    /// equator for `d = 3`).
    pub fn equiangular(d: u32, n: u32) -> Result<Self> {
        let step = PI / f64::from(n);
        let params = match d {
            2 => (0..n).map(|j| f64::from(j) * step).collect(),
            3 => (0..n).flat_map(|j| [FRAC_PI_2, f64::from(j) * step]).collect(),
            _ => return Err(Error::invalid("configurations support d = 2 or d = 3")),
        };
        Self::from_params(d, params)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        (match self.d {
            2 => self.params.len(),
            _ => self.params.len() / 2,
        }) as u32
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    /// Direction angles for a planar configuration.
    pub fn angles(&self) -> Option<&[f64]> {
        (self.d == 2).then_some(self.params.as_slice())
    }

    /// Materialized unit vectors (norm 1 up to rounding by construction).
    pub fn vectors(&self) -> Vec<Vec<f64>> {
        match self.d {
            2 => self.params.iter().map(|&t| vec![t.cos(), t.sin()]).collect(),
            _ => self
                .params
                .chunks_exact(2)
                .map(|pa| {
                    let (polar, az) = (pa[0], pa[1]);
                    vec![polar.sin() * az.cos(), polar.sin() * az.sin(), polar.cos()]
                })
                .collect(),
        }
    }

    pub fn planar_vectors(&self) -> Option<Vec<Vec2>> {
        (self.d == 2).then(|| self.params.iter().map(|&t| Vec2::from_angle(t)).collect())
    }

    /// Deterministic tie-breaking key: directions are canonicalized (angles
    /// mod π for `d = 2`, sign-normalized coordinates for `d = 3`) and
    /// sorted, so configurations equal up to relabeling and per-vector sign
    /// share a key.
    pub fn canonical_key(&self) -> Vec<f64> {
        match self.d {
            2 => {
                let mut dirs: Vec<f64> = self.params.iter().map(|&t| normalize_mod_pi(t)).collect();
                dirs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
                dirs
            }
            _ => {
                let mut vs = self.vectors();
                for v in &mut vs {
                    if let Some(&lead) = v.iter().find(|x| x.abs() > 1e-12) {
                        if lead < 0.0 {
                            for x in v.iter_mut() {
                                *x = -*x;
                            }
                        }
                    }
                }
                vs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
                vs.into_iter().flatten().collect()
            }
        }
    }
}

/// A finished run of [`estimate_c`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationEstimate {
    pub d: u32,
    pub n: u32,
    pub k: u32,
    pub best_value: f64,
    pub best_config: UnitConfiguration,
    pub restarts_used: u32,
    pub seed: u64,
    pub converged: bool,
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut c = 1.0f64;
    for i in 0..k.min(n - k) {
        c = c * f64::from(n - i) / f64::from(i + 1);
    }
    c
}

fn enumeration_cost(n: u32, k: u32) -> f64 {
    binomial(n, k) * 2.0f64.powi(k as i32 - 1)
}

/// Exact maximum of `‖Σ_{j∈S} ε_j u^j‖` over all `k`-subsets `S` and sign
/// choices. For `d = 2, k = n` the planar sweep is used; otherwise the
/// enumeration guard `C(n,k)·2^{k−1} ≤ 10⁷` applies.
pub fn objective(config: &UnitConfiguration, k: u32) -> Result<f64> {
    let n = config.n();
    if k == 0 || k > n {
        return Err(Error::invalid("objective needs 1 <= k <= n"));
    }
    if !(config.d == 2 && k == n) {
        let cost = enumeration_cost(n, k);
        if cost > ENUMERATION_LIMIT {
            return Err(Error::EnumerationGuard { patterns: cost, limit: ENUMERATION_LIMIT });
        }
    }
    Ok(objective_on_params(config.d, k, &config.params))
}

/// Unchecked objective core used by the descent loop (the guard is enforced
/// once up front).
fn objective_on_params(d: u32, k: u32, params: &[f64]) -> f64 {
    if d == 2 && k as usize == params.len() {
        let gens: Vec<Vec2> = params.iter().map(|&t| Vec2::from_angle(t)).collect();
        let gens = GeneratorSet::new(gens).expect("n >= 1 unit vectors");
        return gens.max_signed_sum_sweep().value;
    }
    let config = UnitConfiguration { d, params: params.to_vec() };
    subset_sign_max(&config.vectors(), k as usize)
}

/// Enumerate every `k`-subset and sign pattern; the first chosen sign is
/// pinned to +1 by norm symmetry.
fn subset_sign_max(vectors: &[Vec<f64>], k: usize) -> f64 {
    let n = vectors.len();
    let dim = vectors[0].len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut acc = vec![0.0f64; dim];
    let mut best_sq = 0.0f64;
    loop {
        for mask in 0..(1u64 << (k - 1)) {
            acc.copy_from_slice(&vectors[idx[0]]);
            for j in 1..k {
                let v = &vectors[idx[j]];
                if mask >> (j - 1) & 1 == 1 {
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
            }
        }
        // Next k-combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return best_sq.sqrt();
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Multi-start estimate of `c(d,n,k)`.
///
/// Each restart draws a uniform-random configuration (with the first vector
/// pinned, absorbing the rotation symmetry) and refines it by coordinate-wise
/// line search: a coarse probe grid over a bracket followed by golden-section
/// refinement, with the bracket shrinking once a sweep stops improving.
/// Restarts are reduced deterministically: strictly better values win, and
/// ties within 1e-12 go to the lexicographically smallest canonical key.
pub fn estimate_c(
    d: u32,
    n: u32,
    k: u32,
    settings: &OptimizerSettings,
) -> Result<ConfigurationEstimate> {
    if k == 0 || k > n {
        return Err(Error::invalid("estimate needs 1 <= k <= n"));
    }
    if settings.restarts == 0 {
        return Err(Error::invalid("need at least one restart"));
    }
    // Surfaces unsupported d and guard violations before any work happens.
    objective(&UnitConfiguration::equiangular(d, n)?, k)?;

    let mut best: Option<(f64, Vec<f64>, Vec<f64>)> = None;
    let mut last_improvement = 0u32;
    for restart in 0..settings.restarts {
        // Child seed per restart keeps runs independent of each other's
        // internal draw counts.
        let mut rng = ChaCha8Rng::seed_from_u64(
            settings.seed ^ (u64::from(restart) + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        );
        let mut params = random_params(d, n, &mut rng);
        let value = local_descent(d, k, &mut params, settings, &mut rng);
        let key = UnitConfiguration { d, params: params.clone() }.canonical_key();
        let improved_strictly = best.as_ref().is_none_or(|(bv, _, _)| value < bv - 1e-9);
        let take = match &best {
            None => true,
            Some((bv, _, bkey)) => {
                value < bv - TIE_TOL
                    || ((value - bv).abs() <= TIE_TOL
                        && key.partial_cmp(bkey) == Some(std::cmp::Ordering::Less))
            }
        };
        if improved_strictly {
            last_improvement = restart;
        }
        if take {
            best = Some((value, params, key));
        }
    }
    let (best_value, params, _) = best.expect("at least one restart ran");
    let best_config = UnitConfiguration { d, params };
    // Converged: no improvement beyond 1e-9 within the final 20% of restarts.
    let converged = last_improvement < settings.restarts - settings.restarts / 5;
    Ok(ConfigurationEstimate {
        d,
        n,
        k,
        best_value,
        best_config,
        restarts_used: settings.restarts,
        seed: settings.seed,
        converged,
    })
}

/// Uniform random configuration with the first vector pinned to absorb
/// global rotations: angle 0 for `d = 2`, the x-axis pole `(π/2, 0)` for
/// `d = 3`.
fn random_params(d: u32, n: u32, rng: &mut impl Rng) -> Vec<f64> {
    match d {
        2 => {
            let mut params = vec![0.0];
            params.extend((1..n).map(|_| rng.gen_range(0.0..PI)));
            params
        }
        _ => {
            let mut params = vec![FRAC_PI_2, 0.0];
            for _ in 1..n {
                // Uniform on the sphere: polar via acos of a uniform cosine.
                let polar = f64::acos(rng.gen_range(-1.0..=1.0f64));
                let az = rng.gen_range(0.0..TAU);
                params.push(polar);
                params.push(az);
            }
            params
        }
    }
}

fn pinned_params(d: u32) -> usize {
    match d {
        2 => 1,
        _ => 2,
    }
}

/// One restart: coordinate-wise golden-section descent with a shrinking
/// bracket gets into a basin cheaply; Nelder–Mead simplex passes with
/// shrinking initialization radius then handle the polyhedral valley floor
/// of the max-of-norms objective, where single-coordinate moves stall.
fn local_descent(
    d: u32,
    k: u32,
    params: &mut [f64],
    settings: &OptimizerSettings,
    rng: &mut impl Rng,
) -> f64 {
    let first_free = pinned_params(d);
    let mut fbest = objective_on_params(d, k, params);
    let dim = params.len().saturating_sub(first_free);
    if dim == 0 {
        return fbest;
    }
    let mut h = FRAC_PI_2;
    for _ in 0..settings.max_iters {
        let mut improved = false;
        for i in first_free..params.len() {
            let center = params[i];
            let (t, ft) = line_min(
                &mut |t| {
                    params[i] = t;
                    objective_on_params(d, k, params)
                },
                center,
                h,
            );
            if ft < fbest - 1e-14 {
                params[i] = t;
                if fbest - ft > 1e-12 {
                    improved = true;
                }
                fbest = ft;
            } else {
                params[i] = center;
            }
        }
        if !improved {
            // A few random rescue directions before conceding the bracket.
            let base = params.to_vec();
            for _ in 0..dim {
                let dir: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..=1.0f64)).collect();
                let scale = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
                if scale == 0.0 {
                    continue;
                }
                let (t, ft) = line_min(
                    &mut |t| {
                        for (j, x) in dir.iter().enumerate() {
                            params[first_free + j] = base[first_free + j] + t * x / scale;
                        }
                        objective_on_params(d, k, params)
                    },
                    0.0,
                    h,
                );
                if ft < fbest - 1e-12 {
                    for (j, x) in dir.iter().enumerate() {
                        params[first_free + j] = base[first_free + j] + t * x / scale;
                    }
                    fbest = ft;
                    improved = true;
                    break;
                }
            }
            if !improved {
                params[first_free..].copy_from_slice(&base[first_free..]);
                h *= 0.5;
                if h < 1e-3 {
                    break;
                }
            }
        }
    }

    // Simplex polish, re-centered with a shrinking radius.
    let mut radius = 0.25;
    while radius >= settings.tol.max(1e-10) {
        let mut free: Vec<f64> = params[first_free..].to_vec();
        let ft = nelder_mead(
            &mut |free| {
                params[first_free..].copy_from_slice(free);
                objective_on_params(d, k, params)
            },
            &mut free,
            radius,
            400 * dim,
        );
        params[first_free..].copy_from_slice(&free);
        fbest = fbest.min(ft);
        radius *= 0.1;
    }
    fbest
}

/// Minimal Nelder–Mead simplex (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5) on `x`, starting from a simplex of the given radius around it.
/// Returns the best value; `x` is updated in place.
fn nelder_mead(eval: &mut dyn FnMut(&[f64]) -> f64, x: &mut [f64], radius: f64, max_iter: usize) -> f64 {
    let dim = x.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(x.to_vec());
    for i in 0..dim {
        let mut p = x.to_vec();
        p[i] += radius;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| eval(p)).collect();

    for _ in 0..max_iter {
        // Order best..worst.
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite objective"));
        let (best, second_worst, worst) = (order[0], order[dim - 1], order[dim]);
        if values[worst] - values[best] <= 1e-13 * (1.0 + values[best].abs()) {
            break;
        }

        let mut centroid = vec![0.0; dim];
        for (i, p) in simplex.iter().enumerate() {
            if i == worst {
                continue;
            }
            for (c, v) in centroid.iter_mut().zip(p) {
                *c += v / dim as f64;
            }
        }
        let shifted = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let reflected = shifted(1.0);
        let fr = eval(&reflected);
        if fr < values[best] {
            let expanded = shifted(2.0);
            let fe = eval(&expanded);
            if fe < fr {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
        } else if fr < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            let contracted = if fr < values[worst] { shifted(0.5) } else { shifted(-0.5) };
            let fc = eval(&contracted);
            if fc < values[worst].min(fr) {
                simplex[worst] = contracted;
                values[worst] = fc;
            } else {
                // Shrink toward the best vertex.
                let anchor = simplex[best].clone();
                for (i, p) in simplex.iter_mut().enumerate() {
                    if i == best {
                        continue;
                    }
                    for (q, a) in p.iter_mut().zip(&anchor) {
                        *q = a + 0.5 * (*q - a);
                    }
                    values[i] = eval(p);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..=dim {
        if values[i] < values[best] {
            best = i;
        }
    }
    x.copy_from_slice(&simplex[best]);
    values[best]
}

/// Coarse probe grid over `[center−h, center+h]` followed by golden-section
/// refinement around the best probe.
fn line_min(eval: &mut dyn FnMut(f64) -> f64, center: f64, h: f64) -> (f64, f64) {
    const GRID: usize = 8;
    const INVPHI: f64 = 0.618_033_988_749_894_8;

    let mut best_t = center;
    let mut best_f = eval(center);
    for g in 0..=GRID {
        let t = center - h + 2.0 * h * g as f64 / GRID as f64;
        let f = eval(t);
        if f < best_f {
            best_f = f;
            best_t = t;
        }
    }
    let cell = 2.0 * h / GRID as f64;
    let mut a = best_t - cell;
    let mut b = best_t + cell;
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = eval(c);
    let mut fd = eval(d);
    for _ in 0..32 {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = eval(d);
        }
        if fc < best_f {
            best_f = fc;
            best_t = c;
        }
        if fd < best_f {
            best_f = fd;
            best_t = d;
        }
    }
    (best_t, best_f)
}

/// Check an estimate against the closed-form sandwich
/// `1/sin(π/2k) − tol ≤ value ≤ 1/sin(π/2n) + tol` with `tol = 1e-6`.
///
/// The report carries the binding side (the smaller margin); the other side
/// then holds a fortiori. For `d = 3` only the upper bound applies, since
/// the planar lower bound need not survive extra dimensions.
pub fn sandwich_check(estimate: &ConfigurationEstimate) -> BoundReport {
    let upper = c_upper_bound(estimate.n).value;
    let label = format!("c({},{},{})", estimate.d, estimate.n, estimate.k);
    if estimate.d == 2 {
        let lower = c_lower_bound(estimate.k).value;
        let lower_margin = estimate.best_value - lower;
        let upper_margin = upper - estimate.best_value;
        if lower_margin <= upper_margin {
            BoundReport::new(format!("sandwich lower {label}"), estimate.best_value, lower)
        } else {
            BoundReport::new(format!("sandwich upper {label}"), upper, estimate.best_value)
        }
    } else {
        BoundReport::new(format!("sandwich upper {label}"), upper, estimate.best_value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zonotope::max_signed_sum_brute_nd;

    #[test]
    fn objective_orthonormal_pair() {
        let c = UnitConfiguration::from_angles(vec![0.0, FRAC_PI_2]).unwrap();
        assert!((objective(&c, 2).unwrap() - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn objective_equiangular_three_is_two() {
        let c = UnitConfiguration::equiangular(2, 3).unwrap();
        assert!((objective(&c, 3).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn objective_k1_is_one() {
        let c = UnitConfiguration::from_angles(vec![0.3, 1.1, 2.9]).unwrap();
        assert!((objective(&c, 1).unwrap() - 1.0).abs() < 1e-12);
        let c3 = UnitConfiguration::equiangular(3, 4).unwrap();
        assert!((objective(&c3, 1).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn objective_monotone_in_k() {
        let c = UnitConfiguration::from_angles(vec![0.0, 0.7, 1.9, 2.4]).unwrap();
        let mut prev = 0.0;
        for k in 1..=4 {
            let v = objective(&c, k).unwrap();
            assert!(v >= prev - 1e-12, "k={k}");
            prev = v;
        }
    }

    #[test]
    fn objective_matches_nd_oracle_for_k_equals_n() {
        let c = UnitConfiguration::from_angles(vec![0.0, 0.4, 1.3, 2.2, 2.9]).unwrap();
        let sweep = objective(&c, 5).unwrap();
        let (brute, _, _) = max_signed_sum_brute_nd(&c.vectors()).unwrap();
        assert!((sweep - brute).abs() <= 1e-12 * (1.0 + brute));
    }

    #[test]
    fn objective_guard_rejects_huge_enumerations() {
        let c = UnitConfiguration::equiangular(3, 40).unwrap();
        assert!(matches!(objective(&c, 30), Err(Error::EnumerationGuard { .. })));
    }

    #[test]
    fn objective_rejects_bad_k() {
        let c = UnitConfiguration::equiangular(2, 3).unwrap();
        assert!(objective(&c, 0).is_err());
        assert!(objective(&c, 4).is_err());
    }

    #[test]
    fn rotation_and_sign_invariance() {
        let base = vec![0.0, 0.5, 1.7, 2.6];
        let c = UnitConfiguration::from_angles(base.clone()).unwrap();
        let v0 = objective(&c, 4).unwrap();
        let rotated =
            UnitConfiguration::from_angles(base.iter().map(|t| t + 0.83).collect()).unwrap();
        assert!((objective(&rotated, 4).unwrap() - v0).abs() < 1e-12);
        let mut flipped = base;
        flipped[2] += PI; // negate one vector
        let c2 = UnitConfiguration::from_angles(flipped).unwrap();
        assert!((objective(&c2, 4).unwrap() - v0).abs() < 1e-12);
    }

    #[test]
    fn estimate_recovers_c233() {
        let settings = OptimizerSettings { restarts: 40, seed: 11, ..Default::default() };
        let e = estimate_c(2, 3, 3, &settings).unwrap();
        assert!((e.best_value - 2.0).abs() < 1e-4, "value {}", e.best_value);
        let report = sandwich_check(&e);
        assert!(report.holds_within(SANDWICH_TOL));
    }

    #[test]
    fn estimate_k1_is_exact() {
        let settings = OptimizerSettings { restarts: 5, seed: 7, ..Default::default() };
        let e = estimate_c(2, 3, 1, &settings).unwrap();
        assert!((e.best_value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn estimates_are_deterministic() {
        let settings = OptimizerSettings { restarts: 12, seed: 42, ..Default::default() };
        let a = estimate_c(2, 4, 4, &settings).unwrap();
        let b = estimate_c(2, 4, 4, &settings).unwrap();
        assert_eq!(a.best_value.to_bits(), b.best_value.to_bits());
        assert_eq!(a.best_config, b.best_config);
    }

    #[test]
    fn estimate_c242_lands_in_sandwich() {
        let settings = OptimizerSettings { restarts: 30, seed: 3, ..Default::default() };
        let e = estimate_c(2, 4, 2, &settings).unwrap();
        let lo = c_lower_bound(2).value;
        let hi = c_upper_bound(4).value;
        assert!(e.best_value >= lo - SANDWICH_TOL, "{} < {}", e.best_value, lo);
        assert!(e.best_value <= hi + SANDWICH_TOL, "{} > {}", e.best_value, hi);
    }

    #[test]
    fn estimate_d3_respects_upper_bound_only() {
        let settings =
            OptimizerSettings { restarts: 20, seed: 5, max_iters: 40, ..Default::default() };
        let e = estimate_c(3, 4, 4, &settings).unwrap();
        assert!(e.best_value <= c_upper_bound(4).value + SANDWICH_TOL);
        // The regular tetrahedron beats the planar lower bound, so the d=3
        // estimate must be allowed below it.
        let report = sandwich_check(&e);
        assert!(report.context.starts_with("sandwich upper"));
        assert!(report.holds_within(SANDWICH_TOL));
    }

    #[test]
    fn estimate_rejects_invalid_parameters() {
        let settings = OptimizerSettings::default();
        assert!(estimate_c(4, 3, 3, &settings).is_err());
        assert!(estimate_c(2, 3, 5, &settings).is_err());
        assert!(estimate_c(2, 0, 0, &settings).is_err());
    }

    #[test]
    fn config_json_roundtrip_keeps_params() {
        let c = UnitConfiguration::equiangular(3, 2).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"vectors\""));
        let back: UnitConfiguration = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
