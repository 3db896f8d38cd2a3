//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when an input fails to parse or validate,
//! 2 on usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    attached_foliation_degree_bounds_for, cor_cotaejemplo_bounds_for, cor_expl1_bounds_for,
    empirical_nu, AttachedDegreeBounds, BoundInputs, BoundReport, NConvention,
};
use crate::config::{parse_configuration, Configuration};
use crate::lattice::{DivisorClass, SurfaceModel};
use crate::report::{exact_and_decimal, AnalyzeReport, BoundReportJson, DValueReport, NuReport};
use crate::sufficiency::origin_d_values;
use crate::Rational;

#[derive(Debug, Parser)]
#[command(name = "lwbn", version, about = "Cluster combinatorics and bounded-negativity bounds for rational surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Configuration file.
    pub file: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Write the report to this path instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Override the file's base surface (`p2`, `f3`, `f:3`).
    #[arg(long, value_parser = parse_surface)]
    pub surface: Option<SurfaceModel>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Origins, ends, levels, proximity matrix, multiplicities, E_q² and γ.
    Analyze(CommonArgs),
    /// Per-origin d-values with their certificates, and the total d.
    Dvalue(CommonArgs),
    /// Explicit lower bound on ν_D for the configuration's sky.
    Bounds {
        #[command(flatten)]
        common: CommonArgs,
        /// ε for nef divisors D with D - εG nonnegative on curves (`p/q`).
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, required_unless_present = "pullback")]
        epsilon: Option<Rational>,
        /// Which n enters the invariant-curve terms.
        #[arg(long, default_value = "stated", value_parser = parse_convention)]
        n_convention: NConvention,
        /// Bound for pullbacks D* of nef divisors on the base surface.
        #[arg(long)]
        pullback: bool,
    },
    /// Minimum of C²/(D·C) over a list of classes.
    Nu {
        #[command(flatten)]
        common: CommonArgs,
        /// The nef class D, e.g. `3L - E2`.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// File with one divisor literal per line.
        #[arg(long)]
        curves: PathBuf,
    },
    /// Proximity graph in DOT format.
    Dot(CommonArgs),
}

fn parse_surface(s: &str) -> Result<SurfaceModel, String> {
    s.parse().map_err(|e: crate::LatticeError| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("`{s}` is not a rational number (expected p or p/q)"))
}

fn parse_convention(s: &str) -> Result<NConvention, String> {
    s.parse()
}

/// What a command produced: the report text and any warnings for stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub warnings: Vec<String>,
}

fn load(common: &CommonArgs) -> Result<Configuration> {
    let text = fs::read_to_string(&common.file)
        .with_context(|| format!("cannot read {}", common.file.display()))?;
    let config = parse_configuration(&text).with_context(|| format!("{}", common.file.display()))?;
    Ok(match common.surface {
        Some(s) => config.with_surface(s),
        None => config,
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn run_analyze(config: &Configuration, json: bool) -> Result<String> {
    let report = AnalyzeReport::new(config);
    if json {
        return to_json(&report);
    }
    let pm = config.proximity_matrix();
    let m = config.multiplicity_vector();
    let mut out = String::new();
    writeln!(out, "surface: {}", config.surface())?;
    writeln!(out, "points: {}", config.len())?;
    writeln!(out, "origins: {}", join(&report.origins))?;
    writeln!(out, "ends: {}", join(&report.ends))?;
    writeln!(out, "gamma: {}", report.gamma)?;
    writeln!(out)?;
    writeln!(out, "{:>4} {:>5} {:>9} {:>6} {:>4} {:>5} {:>6}  proximate to", "id", "level", "kind", "origin", "end", "m", "E^2")?;
    for (entry, mult) in report.points.iter().zip(m.values()) {
        writeln!(
            out,
            "{:>4} {:>5} {:>9} {:>6} {:>4} {:>5} {:>6}  {}",
            entry.id,
            entry.level,
            entry.kind,
            if report.origins.contains(&entry.id) { "yes" } else { "" },
            if report.ends.contains(&entry.id) { "yes" } else { "" },
            mult,
            entry.e_sq,
            join(&entry.proximities)
        )?;
    }
    writeln!(out)?;
    writeln!(out, "proximity matrix P:")?;
    write!(out, "{}", pm.matrix())?;
    writeln!(out, "P^-1:")?;
    write!(out, "{}", pm.inverse())?;
    Ok(out)
}

pub fn run_dvalue(config: &Configuration, json: bool) -> Result<String> {
    let values = origin_d_values(config);
    let report = DValueReport::new(config, &values);
    if json {
        return to_json(&report);
    }
    let mut out = String::new();
    let mut q = 0;
    for o in &report.origins {
        writeln!(out, "origin p{}: d = {} (hat configuration: {} points)", o.id, o.d, o.hat_size)?;
        for (new, end) in &o.added {
            q += 1;
            writeln!(out, "  q{q} (local id {new}) added above free end p{end}")?;
        }
        writeln!(out, "  v_d = ({})", join(&o.certificate))?;
    }
    writeln!(out, "total d = {}", report.total_d)?;
    Ok(out)
}

fn render_bound_report(report: &BoundReport, degrees: &AttachedDegreeBounds) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "surface: {}", report.surface)?;
    writeln!(
        out,
        "n = {} (stated), {} (example); convention: {}",
        report.n_stated, report.n_example, report.convention
    )?;
    writeln!(out, "d = {}, gamma = {}", report.d, report.gamma)?;
    if let Some(e) = &report.epsilon {
        writeln!(out, "epsilon = {e}")?;
    }
    match degrees {
        AttachedDegreeBounds::Plane { r_max, first_integral_degree } => writeln!(
            out,
            "attached foliation: r <= {r_max}, first integral of degree {first_integral_degree}"
        )?,
        AttachedDegreeBounds::Hirzebruch {
            r1_max,
            r2_max,
            first_integral_d1_max,
            first_integral_d2,
        } => writeln!(
            out,
            "attached foliation: r1 <= {r1_max}, r2 <= {r2_max}, first integral of bidegree (<= {first_integral_d1_max}, {first_integral_d2})"
        )?,
    }
    writeln!(out, "terms:")?;
    for t in &report.terms {
        writeln!(out, "  {:<20} {}", t.name, exact_and_decimal(&t.value))?;
    }
    writeln!(out, "bound: {}", exact_and_decimal(&report.bound))?;
    Ok(out)
}

pub fn run_bounds(
    config: &Configuration,
    epsilon: Option<&Rational>,
    convention: NConvention,
    pullback: bool,
    json: bool,
) -> Result<Output> {
    let values = origin_d_values(config);
    let inputs = BoundInputs::from_parts(config, &values);
    let report = if pullback {
        cor_cotaejemplo_bounds_for(&inputs, convention)
    } else {
        let epsilon = epsilon.context("--epsilon is required unless --pullback is given")?;
        cor_expl1_bounds_for(&inputs, epsilon, convention)?
    };
    let warnings = report.convention_warning().into_iter().collect();
    let text = if json {
        to_json(&BoundReportJson::from(&report))?
    } else {
        let degrees = attached_foliation_degree_bounds_for(&inputs.d, inputs.surface);
        render_bound_report(&report, &degrees)?
    };
    Ok(Output { text, warnings })
}

pub fn parse_curves(text: &str, surface: SurfaceModel, n: usize) -> Result<Vec<DivisorClass>> {
    let mut curves = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cls = DivisorClass::parse_literal(line, surface, n)
            .with_context(|| format!("curves file line {}", idx + 1))?;
        curves.push(cls);
    }
    Ok(curves)
}

pub fn run_nu(config: &Configuration, divisor: &str, curves_text: &str, json: bool) -> Result<String> {
    let nef = DivisorClass::parse_literal(divisor, config.surface(), config.len())?;
    let curves = parse_curves(curves_text, config.surface(), config.len())?;
    let nu = empirical_nu(&curves, &nef)?;
    let report = NuReport::new(&nef, &curves, &nu);
    if json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "D = {}", report.nef)?;
    for (entry, row) in report.curves.iter().zip(&nu.curves) {
        let ratio = match &row.ratio {
            Some(r) => exact_and_decimal(r),
            None => "-".to_string(),
        };
        writeln!(
            out,
            "  C = {:<30} C^2 = {:<8} D.C = {:<8} ratio = {}",
            entry.curve, entry.self_intersection, entry.nef_dot_curve, ratio
        )?;
    }
    match &nu.value {
        Some(v) => writeln!(out, "nu over listed curves: {}", exact_and_decimal(v))?,
        None => writeln!(out, "nu over listed curves: undefined (no curve with C^2 < 0 and D.C > 0)")?,
    }
    Ok(out)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<(Output, Option<&Path>)> {
    let (common, output) = match &cli.command {
        Command::Analyze(common) => (common, Output {
            text: run_analyze(&load(common)?, common.json)?,
            warnings: Vec::new(),
        }),
        Command::Dvalue(common) => (common, Output {
            text: run_dvalue(&load(common)?, common.json)?,
            warnings: Vec::new(),
        }),
        Command::Bounds {
            common,
            epsilon,
            n_convention,
            pullback,
        } => (
            common,
            run_bounds(&load(common)?, epsilon.as_ref(), *n_convention, *pullback, common.json)?,
        ),
        Command::Nu {
            common,
            divisor,
            curves,
        } => {
            let config = load(common)?;
            let curves_text = fs::read_to_string(curves)
                .with_context(|| format!("cannot read {}", curves.display()))?;
            (common, Output {
                text: run_nu(&config, divisor, &curves_text, common.json)?,
                warnings: Vec::new(),
            })
        }
        Command::Dot(common) => (common, Output {
            text: load(common)?.to_dot(),
            warnings: Vec::new(),
        }),
    };
    Ok((output, common.output.as_deref()))
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok((output, path)) => {
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            match path {
                Some(path) => {
                    if let Err(e) = fs::write(path, &output.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 1;
                    }
                }
                None => print!("{}", output.text),
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
