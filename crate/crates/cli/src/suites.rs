//! Verification suites: each runs the bundled reference instances plus a
//! batch of seeded random instances, and collects any violated inequality
//! together with the offending instance's JSON.

use std::f64::consts::PI;

use rand::Rng;
use serde::Serialize;

use sumrad_core::bounds::{
    equality_direction_check, minkowski_circumradius_check, quermassintegral_chain_check, radius_sum_constant,
    unique_longest_segment, zonoid_disc_ratio, SymmetricBodySet,
};
use sumrad_core::circumball::{circumradius, dowker_check, BoundReport};
use sumrad_core::geom2d::{regular_polygon, ConvexPolygon, Vec2};
use sumrad_core::sample;
use sumrad_core::zonotope::GeneratorSet;

use crate::fixtures;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dowker,
    Zonotope,
    Minkowski,
    Remark,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Dowker => "dowker",
            Suite::Zonotope => "zonotope",
            Suite::Minkowski => "minkowski",
            Suite::Remark => "remark",
            Suite::All => "all",
        }
    }
}

/// A violated check: what failed, by how much, and on which instance.
#[derive(Debug, Serialize)]
pub struct Violation {
    pub context: String,
    pub detail: String,
    pub instance: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub count: usize,
    pub seed: u64,
    pub checks_run: usize,
    pub fixture_reports: Vec<BoundReport>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    fn new(suite: &'static str, count: usize, seed: u64) -> Self {
        SuiteReport {
            suite,
            count,
            seed,
            checks_run: 0,
            fixture_reports: Vec::new(),
            violations: Vec::new(),
        }
    }

    fn check(
        &mut self,
        ok: bool,
        context: &str,
        detail: String,
        instance: &impl Serialize,
    ) {
        self.checks_run += 1;
        if !ok {
            self.violations.push(Violation {
                context: context.to_string(),
                detail,
                instance: serde_json::to_value(instance).unwrap_or(serde_json::Value::Null),
            });
        }
    }

    fn check_holds(&mut self, report: &BoundReport, instance: &impl Serialize) {
        self.check(
            report.holds(),
            &report.context.clone(),
            format!("slack {} below tolerance", report.slack),
            instance,
        );
    }
}

/// Run the selected suites; `count` random instances each, fixtures always.
pub fn run(suite: Suite, count: usize, seed: u64) -> Vec<SuiteReport> {
    match suite {
        Suite::Dowker => vec![dowker_suite(count, seed)],
        Suite::Zonotope => vec![zonotope_suite(count, seed)],
        Suite::Minkowski => vec![minkowski_suite(count, seed)],
        Suite::Remark => vec![remark_suite(count, seed)],
        Suite::All => vec![
            dowker_suite(count, seed),
            zonotope_suite(count, seed),
            minkowski_suite(count, seed),
            remark_suite(count, seed),
        ],
    }
}

fn dowker_suite(count: usize, seed: u64) -> SuiteReport {
    let mut out = SuiteReport::new(Suite::Dowker.name(), count, seed);
    let mut rng = sample::rng(seed);
    for _ in 0..count {
        let p = sample::convex_polygon(&mut rng, 12, 1.0);
        let n = rng.gen_range(p.vertex_count()..=12);
        let report = dowker_check(&p, n).expect("m <= n by construction");
        out.check_holds(&report, &p);
    }
    // Regular polygons are the equality case at every radius and phase.
    for n in 1..=12usize {
        let p = regular_polygon(n, 1.0 + 0.1 * n as f64, 0.05 * n as f64).expect("valid");
        let report = dowker_check(&p, n).expect("m = n");
        out.check(
            report.equality && report.slack.abs() <= 1e-9 * report.scale(),
            "dowker regular equality",
            format!("n={n} slack {} equality {}", report.slack, report.equality),
            &p,
        );
        out.fixture_reports.push(report);
    }
    // A perturbed hexagon must be strictly inside the inequality.
    let mut pts: Vec<Vec2> = regular_polygon(6, 1.0, 0.0).expect("valid").vertices().to_vec();
    pts[0] = pts[0] * (1.0 + 1e-3);
    let bent = ConvexPolygon::from_points(&pts).expect("finite");
    let report = dowker_check(&bent, 6).expect("m = n");
    out.check(
        report.strict_by(1e-7) && !report.equality,
        "dowker perturbed hexagon strict",
        format!("slack {}", report.slack),
        &bent,
    );
    out.fixture_reports.push(report);
    out
}

fn zonotope_suite(count: usize, seed: u64) -> SuiteReport {
    let mut out = SuiteReport::new(Suite::Zonotope.name(), count, seed);
    let mut rng = sample::rng(seed);
    for _ in 0..count {
        let n = rng.gen_range(1..=14);
        let g = sample::generator_set(&mut rng, n);
        check_generator_set(&mut out, &g);
    }
    for fixture in [
        fixtures::hexagon_generators(),
        fixtures::square_generators(),
        fixtures::zero_generator(),
    ] {
        check_generator_set(&mut out, &fixture);
        let sweep = fixture.max_signed_sum_sweep();
        let report =
            BoundReport::new(format!("signed sum n={}", fixture.len()), sweep.value, fixture.lower_bound());
        out.check(
            report.equality && fixture.is_equality_configuration(1e-9),
            "zonotope fixture equality",
            format!("value {} bound {}", sweep.value, fixture.lower_bound()),
            &fixture,
        );
        out.fixture_reports.push(report);
    }
    // Regular configurations attain the bound exactly.
    for n in 1..=8usize {
        let g = fixtures::regular_generators(n);
        let value = g.max_signed_sum_sweep().value;
        let report = BoundReport::new(format!("signed sum regular n={n}"), value, g.lower_bound());
        out.check(
            report.equality && g.is_equality_configuration(1e-9),
            "zonotope regular equality",
            format!("n={n} slack {}", report.slack),
            &g,
        );
        out.fixture_reports.push(report);
    }
    out
}

fn check_generator_set(out: &mut SuiteReport, g: &GeneratorSet) {
    let sweep = g.max_signed_sum_sweep();
    let brute = g.max_signed_sum_brute().expect("suite keeps n within the oracle cap");
    out.check(
        (sweep.value - brute.value).abs() <= 1e-12 * (1.0 + brute.value),
        "zonotope oracle agreement",
        format!("sweep {} brute {}", sweep.value, brute.value),
        g,
    );
    let z = g.zonotope();
    let per_expect = 4.0 * g.total_length();
    out.check(
        (z.perimeter() - per_expect).abs() <= 1e-9 * (1.0 + per_expect),
        "zonotope perimeter identity",
        format!("per {} expected {}", z.perimeter(), per_expect),
        g,
    );
    let r = circumradius(&z);
    out.check(
        (r - sweep.value).abs() <= 1e-9 * (1.0 + sweep.value),
        "zonotope radius identity",
        format!("R {} max {}", r, sweep.value),
        g,
    );
    let bound = g.lower_bound();
    let report = BoundReport::new("signed sum lower bound", sweep.value, bound);
    out.check_holds(&report, g);
    // Equality soundness in both directions, at the tolerances of the
    // characterization.
    let scale = 1.0 + sweep.value + bound;
    if g.is_equality_configuration(1e-9) {
        out.check(
            (sweep.value - bound).abs() <= 1e-6 * scale,
            "zonotope equality soundness",
            format!("flagged equal but gap {}", sweep.value - bound),
            g,
        );
    }
    if (sweep.value - bound).abs() <= 1e-12 * scale {
        out.check(
            g.is_equality_configuration(1e-4),
            "zonotope equality completeness",
            format!("gap {} but not flagged", sweep.value - bound),
            g,
        );
    }
}

fn minkowski_suite(count: usize, seed: u64) -> SuiteReport {
    let mut out = SuiteReport::new(Suite::Minkowski.name(), count, seed);

    let narrow = fixtures::equality_rhombi();
    let report = minkowski_circumradius_check(&narrow);
    let sqrt2 = 2.0_f64.sqrt();
    out.check(
        report.equality && (report.lhs - sqrt2).abs() <= 1e-9,
        "narrow rhombi equality",
        format!("lhs {} rhs {}", report.lhs, report.rhs),
        &narrow,
    );
    out.fixture_reports.push(report);

    let wide = fixtures::strict_rhombi();
    let report = minkowski_circumradius_check(&wide);
    out.check(
        !report.equality
            && (report.lhs - 1.5).abs() <= 1e-9
            && (report.slack - (1.5 - sqrt2)).abs() <= 1e-9,
        "wide rhombi strict",
        format!("lhs {} slack {}", report.lhs, report.slack),
        &wide,
    );
    out.fixture_reports.push(report);

    // The wide pair's longest segments satisfy the direction condition,
    // yet the bound stays strict: the necessary condition is not sufficient.
    let segments: Vec<ConvexPolygon> = wide
        .bodies()
        .iter()
        .map(|b| {
            unique_longest_segment(b, 1e-6)
                .expect("the rhombi have unique long diagonals")
                .to_polygon()
        })
        .collect();
    let seg_set = SymmetricBodySet::from_bodies(segments).expect("two segments");
    let direction_ok = equality_direction_check(&seg_set, 1e-9).expect("segment bodies");
    out.check(
        direction_ok,
        "wide rhombi direction condition",
        "longest segments should satisfy the direction condition".to_string(),
        &seg_set,
    );

    // Sharpness: the segment configurations attain equality for every n.
    for n in 2..=10usize {
        let s = fixtures::segment_configuration(n);
        let report = minkowski_circumradius_check(&s);
        out.check(
            report.equality && report.slack.abs() <= 1e-9 * report.scale(),
            "segment configuration equality",
            format!("n={n} slack {}", report.slack),
            &s,
        );
        out.check(
            equality_direction_check(&s, 1e-9).expect("segments"),
            "segment configuration directions",
            format!("n={n}"),
            &s,
        );
        out.fixture_reports.push(report);
    }

    let mut rng = sample::rng(seed);
    for _ in 0..count {
        let n_bodies = rng.gen_range(1..=6);
        let s = sample::symmetric_body_set(&mut rng, n_bodies, 10);
        let report = minkowski_circumradius_check(&s);
        out.check_holds(&report, &s);
    }
    out
}

fn remark_suite(count: usize, seed: u64) -> SuiteReport {
    let mut out = SuiteReport::new(Suite::Remark.name(), count, seed);

    let c2 = radius_sum_constant(2);
    out.check(
        (c2 - 2.0 / PI).abs() <= 1e-12,
        "remark constant d=2",
        format!("got {c2}"),
        &"2/pi",
    );
    out.fixture_reports.push(BoundReport::new("remark constant d=2", c2, 2.0 / PI));

    let mut prev = zonoid_disc_ratio(1);
    let mut monotone = true;
    for n in 2..=10_000u32 {
        let r = zonoid_disc_ratio(n);
        if r >= prev {
            monotone = false;
            break;
        }
        prev = r;
    }
    let tail = zonoid_disc_ratio(10_000) - 2.0 / PI;
    out.check(
        monotone && tail > 0.0 && tail < 1e-8,
        "zonoid ratio limit",
        format!("monotone {monotone} tail gap {tail}"),
        &"1/(n sin(pi/2n)) -> 2/pi",
    );

    let mut rng = sample::rng(seed);
    for _ in 0..count {
        let n_bodies = rng.gen_range(1..=6);
        let s = sample::symmetric_body_set(&mut rng, n_bodies, 10);
        let reports = quermassintegral_chain_check(&s);
        for report in &reports {
            out.check_holds(report, &s);
        }
        out.check(
            reports[1].equality,
            "quermassintegral additivity",
            format!("slack {}", reports[1].slack),
            &s,
        );

        // Classical chain instances: per ≤ 2πR always, per ≥ 4R when
        // 0-symmetric.
        let p = sample::convex_polygon(&mut rng, 10, 1.0);
        let upper = BoundReport::new("per <= 2 pi R", 2.0 * PI * circumradius(&p), p.perimeter());
        out.check_holds(&upper, &p);
        let sym = p.symmetrize();
        let lower =
            BoundReport::new("per >= 4 R symmetric", sym.perimeter(), 4.0 * circumradius(&sym));
        out.check_holds(&lower, &sym);
    }
    out
}
