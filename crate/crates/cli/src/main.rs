//! `sumrad` — command-line harness for the signed-sum and circumradius
//! laboratory: load instances, run verification suites, estimate maximin
//! constants, and emit JSON/CSV reports.
//!
//! Exit codes: 0 all checks passed, 2 usage or input error, 3 a mathematical
//! invariant was violated.

mod fixtures;
mod output;
mod suites;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use sumrad_core::bounds::{c_exact_2nn, zonoid_disc_ratio};
use sumrad_core::circumball::{format_sig12, BoundReport};
use sumrad_core::optimizer::{
    estimate_c, sandwich_check, ConfigurationEstimate, OptimizerSettings, SANDWICH_TOL,
};
use sumrad_core::zonotope::{GeneratorSet, SignedSumResult};

use output::{emit, Format, RunManifest};
use suites::Suite;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input: exit code 2.
    Usage(String),
    /// A mathematical invariant failed: exit code 3.
    Violation(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn violation(msg: impl Into<String>) -> Self {
        CliError::Violation(msg.into())
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Violation(msg) => write!(f, "invariant violated: {msg}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Method {
    Sweep,
    Brute,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Sweep => "sweep",
            Method::Brute => "brute",
            Method::Both => "both",
        }
    }
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Parser)]
#[command(name = "sumrad", version, about = "Signed vector sums, zonotopes, and circumradius bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximize ‖Σ εᵢuⁱ‖ over sign patterns for a generator-set file.
    SignedSum {
        /// Path to a JSON file {"generators": [[x, y], ...]}.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Table of the exact constants 1/sin(π/2n) and their 2/π limit.
    CTable {
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite on fixtures plus seeded random instances.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Random instances per suite.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Estimate c(d,n,k) by multi-start minimization.
    Optimize {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 100)]
        restarts: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinate-descent round budget per restart.
        #[arg(long, default_value_t = OptimizerSettings::default().max_iters)]
        max_iters: u32,
        /// Refinement floor for the local search.
        #[arg(long, default_value_t = OptimizerSettings::default().tol)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Re-run a recorded manifest; outputs land in the recorded paths.
    Replay {
        #[arg(long)]
        manifest: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::SignedSum { input, method, out, format } => {
            cmd_signed_sum(&input, method, out.as_deref(), format)
        }
        Command::CTable { n_max, out } => cmd_c_table(n_max, out.as_deref()),
        Command::Verify { suite, count, seed, out, format } => {
            cmd_verify(suite, count, seed, out.as_deref(), format)
        }
        Command::Optimize { d, n, k, restarts, seed, max_iters, tol, out, format } => {
            let settings = OptimizerSettings { restarts, seed, max_iters, tol };
            cmd_optimize(d, n, k, &settings, out.as_deref(), format)
        }
        Command::Replay { manifest } => cmd_replay(&manifest),
    }
}

#[derive(Serialize)]
struct SignedSumReport {
    input: PathBuf,
    method: &'static str,
    generator_count: usize,
    result: SignedSumResult,
    lower_bound: BoundReport,
    equality_configuration: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleAgreement>,
}

#[derive(Serialize)]
struct OracleAgreement {
    brute_value: f64,
    relative_gap: f64,
}

fn cmd_signed_sum(
    input: &Path,
    method: Method,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let text = fs::read_to_string(input)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", input.display())))?;
    let gens: GeneratorSet = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("malformed generator set {}: {e}", input.display())))?;

    let (result, oracle) = match method {
        Method::Sweep => (gens.max_signed_sum_sweep(), None),
        Method::Brute => (
            gens.max_signed_sum_brute().map_err(|e| CliError::usage(e.to_string()))?,
            None,
        ),
        Method::Both => {
            let sweep = gens.max_signed_sum_sweep();
            let brute =
                gens.max_signed_sum_brute().map_err(|e| CliError::usage(e.to_string()))?;
            let gap = (sweep.value - brute.value).abs();
            let relative_gap = gap / (1.0 + brute.value);
            if relative_gap > 1e-12 {
                return Err(CliError::violation(format!(
                    "sweep {} and brute force {} disagree on {}",
                    sweep.value,
                    brute.value,
                    serde_json::to_string(&gens).unwrap_or_default()
                )));
            }
            (sweep, Some(OracleAgreement { brute_value: brute.value, relative_gap }))
        }
    };

    let lower_bound =
        BoundReport::new("signed sum lower bound", result.value, gens.lower_bound());
    let report = SignedSumReport {
        input: input.to_path_buf(),
        method: method.name(),
        generator_count: gens.len(),
        result,
        lower_bound,
        equality_configuration: gens.is_equality_configuration(1e-6),
        oracle,
    };

    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut csv = String::from(BoundReport::csv_header());
            csv.push('\n');
            csv.push_str(&report.lower_bound.to_csv_row());
            csv.push('\n');
            if let Some(oracle) = &report.oracle {
                let row = BoundReport::new(
                    "sweep vs brute oracle",
                    report.result.value,
                    oracle.brute_value,
                );
                csv.push_str(&row.to_csv_row());
                csv.push('\n');
            }
            csv
        }
    };
    let manifest = RunManifest::new("signed-sum", 0)
        .param("input", input.display().to_string())
        .param("method", method.name())
        .param("format", format.name());
    emit(out, &body, manifest)?;
    if !report.lower_bound.holds() {
        return Err(CliError::violation(format!(
            "signed-sum maximum {} fell below the lower bound {}",
            report.lower_bound.lhs, report.lower_bound.rhs
        )));
    }
    Ok(())
}

fn cmd_c_table(n_max: u32, out: Option<&Path>) -> Result<(), CliError> {
    if n_max < 1 {
        return Err(CliError::usage("c-table needs --n-max >= 1"));
    }
    let mut csv = String::from("n,c_exact,sum_ratio,gap_two_over_pi\n");
    for n in 1..=n_max {
        let exact = c_exact_2nn(n).expect("n >= 1").value;
        let ratio = zonoid_disc_ratio(n);
        let gap = ratio - 2.0 / std::f64::consts::PI;
        csv.push_str(&format!(
            "{n},{},{},{}\n",
            format_sig12(exact),
            format_sig12(ratio),
            format_sig12(gap)
        ));
    }
    let manifest = RunManifest::new("c-table", 0).param("n_max", n_max);
    emit(out, &csv, manifest)
}

fn cmd_verify(
    suite: Suite,
    count: usize,
    seed: u64,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    if count < 1 {
        return Err(CliError::usage("verify needs --count >= 1"));
    }
    let reports = suites::run(suite, count, seed);
    let body = match format {
        Format::Json => to_json(&reports)?,
        Format::Csv => {
            let mut csv = String::from(BoundReport::csv_header());
            csv.push('\n');
            for suite_report in &reports {
                for r in &suite_report.fixture_reports {
                    csv.push_str(&r.to_csv_row());
                    csv.push('\n');
                }
            }
            csv
        }
    };
    let manifest = RunManifest::new("verify", seed)
        .param("suite", format!("{:?}", suite).to_lowercase())
        .param("count", count as u64)
        .param("format", format.name());
    emit(out, &body, manifest)?;

    let total_checks: usize = reports.iter().map(|r| r.checks_run).sum();
    let violations: Vec<_> = reports.iter().flat_map(|r| &r.violations).collect();
    eprintln!(
        "verify: {} checks across {} suite(s), {} violation(s)",
        total_checks,
        reports.len(),
        violations.len()
    );
    if !violations.is_empty() {
        for v in &violations {
            eprintln!(
                "violation [{}] {} instance: {}",
                v.context,
                v.detail,
                serde_json::to_string(&v.instance).unwrap_or_default()
            );
        }
        return Err(CliError::violation(format!("{} check(s) failed", violations.len())));
    }
    Ok(())
}

#[derive(Serialize)]
struct OptimizeReport {
    estimate: ConfigurationEstimate,
    sandwich: BoundReport,
}

fn cmd_optimize(
    d: u32,
    n: u32,
    k: u32,
    settings: &OptimizerSettings,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let estimate =
        estimate_c(d, n, k, settings).map_err(|e| CliError::usage(e.to_string()))?;
    let sandwich = sandwich_check(&estimate);
    let report = OptimizeReport { estimate, sandwich };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut csv = String::from(BoundReport::csv_header());
            csv.push('\n');
            csv.push_str(&report.sandwich.to_csv_row());
            csv.push('\n');
            csv
        }
    };
    let manifest = RunManifest::new("optimize", settings.seed)
        .param("d", d)
        .param("n", n)
        .param("k", k)
        .param("restarts", settings.restarts)
        .param("max_iters", settings.max_iters)
        .param("tol", settings.tol)
        .param("format", format.name());
    emit(out, &body, manifest)?;
    if !report.sandwich.holds_within(SANDWICH_TOL) {
        return Err(CliError::violation(format!(
            "estimate for c({d},{n},{k}) escapes the sandwich: {}",
            to_json(&report.sandwich)?
        )));
    }
    Ok(())
}

fn cmd_replay(manifest_path: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(manifest_path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", manifest_path.display())))?;
    let manifest: RunManifest = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("malformed manifest: {e}")))?;
    let out = manifest.outputs.first().cloned();
    let out = out.as_deref();
    match manifest.command.as_str() {
        "signed-sum" => cmd_signed_sum(
            Path::new(manifest.param_str("input")?),
            parse_method(manifest.param_str("method")?)?,
            out,
            parse_format(manifest.param_str("format")?)?,
        ),
        "c-table" => cmd_c_table(manifest.param_u64("n_max")? as u32, out),
        "verify" => cmd_verify(
            parse_suite(manifest.param_str("suite")?)?,
            manifest.param_u64("count")? as usize,
            manifest.seed,
            out,
            parse_format(manifest.param_str("format")?)?,
        ),
        "optimize" => {
            let settings = OptimizerSettings {
                restarts: manifest.param_u64("restarts")? as u32,
                seed: manifest.seed,
                max_iters: manifest.param_u64("max_iters")? as u32,
                tol: manifest
                    .parameters
                    .get("tol")
                    .and_then(|v| v.as_f64())
                    .ok_or_else(|| CliError::usage("manifest lacks parameter `tol`"))?,
            };
            cmd_optimize(
                manifest.param_u64("d")? as u32,
                manifest.param_u64("n")? as u32,
                manifest.param_u64("k")? as u32,
                &settings,
                out,
                parse_format(manifest.param_str("format")?)?,
            )
        }
        other => Err(CliError::usage(format!("manifest names unknown command `{other}`"))),
    }
}

fn parse_method(name: &str) -> Result<Method, CliError> {
    match name {
        "sweep" => Ok(Method::Sweep),
        "brute" => Ok(Method::Brute),
        "both" => Ok(Method::Both),
        _ => Err(CliError::usage(format!("unknown method `{name}`"))),
    }
}

fn parse_format(name: &str) -> Result<Format, CliError> {
    match name {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        _ => Err(CliError::usage(format!("unknown format `{name}`"))),
    }
}

fn parse_suite(name: &str) -> Result<Suite, CliError> {
    match name {
        "dowker" => Ok(Suite::Dowker),
        "zonotope" => Ok(Suite::Zonotope),
        "minkowski" => Ok(Suite::Minkowski),
        "remark" => Ok(Suite::Remark),
        "all" => Ok(Suite::All),
        _ => Err(CliError::usage(format!("unknown suite `{name}`"))),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::usage(format!("cannot encode report: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(CliError::usage("x").code(), 2);
        assert_eq!(CliError::violation("x").code(), 3);
    }

    #[test]
    fn manifest_parameter_lookups() {
        let m = RunManifest::new("verify", 9).param("count", 5u64).param("suite", "all");
        assert_eq!(m.param_u64("count").unwrap(), 5);
        assert_eq!(m.param_str("suite").unwrap(), "all");
        assert!(m.param_u64("missing").is_err());
        assert_eq!(m.seed, 9);
    }

    #[test]
    fn name_parsers_roundtrip() {
        for m in [Method::Sweep, Method::Brute, Method::Both] {
            assert_eq!(parse_method(m.name()).unwrap(), m);
        }
        for f in [Format::Json, Format::Csv] {
            assert_eq!(parse_format(f.name()).unwrap(), f);
        }
        for s in ["dowker", "zonotope", "minkowski", "remark", "all"] {
            assert!(parse_suite(s).is_ok());
        }
        assert!(parse_suite("nope").is_err());
    }
}
