//! Command-line front end.

pub mod args;
pub mod config;

use clap::Parser;
use std::f64::consts::FRAC_PI_4;
use std::io::Write;
use std::path::Path;

use crate::critical::oval_critical_candidates;
use crate::eigenbasis::{EigenFamily, Parity, PolarMode};
use crate::error::Error;
use crate::experiments::{self, polar::polar_window, OvalSearch, RunOptions, Status, VerificationReport};
use crate::geometry::{Window, WindowProvenance};
use crate::nodal::{analysis_window, curves_to_json, curves_to_svg, AnalysisOptions, GuideLines, SvgOptions};
use crate::specfun::hermite_zeros;
use args::{Claim, Cli, Command, FamilyArg, FormatArg, GridArgs, ParityArg, PlotArgs, ScalingArgs, VerifyArgs};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;

/// Failure of a command, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical instability: {0}")]
    Unstable(String),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) => EXIT_USAGE,
            CliError::Unstable(_) => EXIT_UNSTABLE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFinite { .. }
            | Error::NoBracket { .. }
            | Error::DegenerateHessian { .. }
            | Error::NotCritical { .. } => CliError::Unstable(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn main() -> i32 {
    let args: Vec<String> = std::env::args_os().map(|a| a.to_string_lossy().into_owned()).collect();
    let out = std::io::stdout();
    let err = std::io::stderr();
    run(args, &mut out.lock(), &mut err.lock())
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("NODAL_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("NODAL_THREADS must be a positive integer, got `{v}`")))?;
    // A second call in the same process (tests) keeps the existing pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match config::merge_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_PASS;
        }
    };
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::Plot(a) => cmd_plot(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Scaling(a) => cmd_scaling(a, out, err),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

fn run_options(g: &GridArgs) -> CliResult<RunOptions> {
    if g.resolution < 32 {
        return Err(CliError::Usage(format!("--resolution must be at least 32, got {}", g.resolution)));
    }
    if !(g.margin.is_finite() && g.margin >= 0.0) {
        return Err(CliError::Usage(format!("--margin must be finite and non-negative, got {}", g.margin)));
    }
    let r = g.resolution;
    Ok(RunOptions {
        counts: vec![r / 4, r / 2, r],
        refine: (!g.no_refine).then_some(2 * r),
        margin: g.margin,
        ..RunOptions::default()
    })
}

fn parity(p: ParityArg) -> Parity {
    match p {
        ParityArg::Sine => Parity::Sine,
        ParityArg::Cosine => Parity::Cosine,
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_plot(a: &PlotArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let opts = run_options(&a.grid)?;
    let user_window = a.window.map(|h| Window::centered(h, WindowProvenance::User)).transpose()?;
    let mut guides = Vec::new();
    let (family, window) = match a.family {
        FamilyArg::Stern | FamilyArg::Difference => {
            let n = need(a.n, "n")?;
            let (fam, theta) = if a.family == FamilyArg::Stern {
                let theta = need(a.theta, "theta")?;
                (EigenFamily::stern(n, theta)?, theta)
            } else {
                (EigenFamily::difference(n), 3.0 * FRAC_PI_4)
            };
            guides.push(GuideLines::thin(&hermite_zeros(n).zeros));
            if n >= 1 {
                guides.push(GuideLines::grey(&hermite_zeros(n - 1).zeros));
            }
            let w = match user_window {
                Some(w) => w,
                None => analysis_window(n, theta, opts.margin)?,
            };
            (fam, w)
        }
        FamilyArg::Polar => {
            let mode = PolarMode::new(need(a.ell, "ell")?, need(a.n, "n")?, parity(a.parity))?;
            let w = match user_window {
                Some(w) => w,
                None => polar_window(&mode)?,
            };
            (EigenFamily::Polar(mode), w)
        }
        FamilyArg::Ovals => {
            let k = need(a.k, "k")?;
            let (fa, fb) = if a.auto_ab {
                let search = OvalSearch { epsilon: a.epsilon, run: opts.clone(), ..OvalSearch::default() };
                let o = experiments::build_ovals(k, &search)?;
                match (o.a, o.b) {
                    (Some(x), Some(y)) => (x, y),
                    _ => return Err(CliError::Unstable(format!("no certified (a, b) found for k = {k}"))),
                }
            } else {
                (need(a.a, "a")?, need(a.b, "b")?)
            };
            let fam = EigenFamily::oval(k, a.epsilon, fa, fb)?;
            let w = match user_window {
                Some(w) => w,
                None => {
                    let c = oval_critical_candidates(k, a.epsilon)?;
                    let r_max = c.laguerre_radii.last().copied().unwrap_or(1.0);
                    Window::centered(1.3 * r_max + 1.0, WindowProvenance::User)?
                }
            };
            (fam, w)
        }
        FamilyArg::Square => {
            let fam = EigenFamily::square(need(a.r, "r")?, need(a.theta, "theta")?)?;
            let w = match a.window {
                Some(_) => return Err(CliError::Usage("the square family always uses [0, pi]^2".into())),
                None => Window::new(0.0, std::f64::consts::PI, 0.0, std::f64::consts::PI, WindowProvenance::User)?,
            };
            (fam, w)
        }
    };
    let (sweep, an) = experiments::stable_analysis(&family.nodal(), &window, &opts, AnalysisOptions::default())?;
    let svg = curves_to_svg(&an.curves, &SvgOptions { guides, ..SvgOptions::default() });
    write_output(a.output.as_deref(), &svg, out)?;
    if let Some(p) = &a.json {
        let v = serde_json::json!({
            "family": family.describe(),
            "stats": serde_json::to_value(&an.stats)?,
            "resolution": serde_json::to_value(&sweep)?,
            "curves": curves_to_json(&an.curves),
        });
        let mut s = serde_json::to_string_pretty(&v)?;
        s.push('\n');
        std::fs::write(p, s)?;
    }
    let s = &an.stats;
    let _ = writeln!(
        err,
        "mu={} components={} crossings={} resolution={} {}",
        s.mu,
        s.components,
        s.crossings,
        s.resolution,
        if sweep.stable { "stable" } else { "unstable" }
    );
    Ok(if sweep.stable { EXIT_PASS } else { EXIT_UNSTABLE })
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Inconclusive => EXIT_UNSTABLE,
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let opts = run_options(&a.grid)?;
    let report: VerificationReport = match a.claim {
        Claim::TwoDomains => experiments::verify_two_domains(need(a.n, "n")?, need(a.theta, "theta")?, &opts)?,
        Claim::Diagonal => experiments::verify_diag_structure(need(a.n, "n")?, &opts)?,
        Claim::Checkerboard => experiments::verify_checkerboard(need(a.n, "n")?, need(a.theta, "theta")?, &opts)?,
        Claim::Asymptote => experiments::verify_asymptote(need(a.n, "n")?, need(a.theta, "theta")?, &opts)?,
        Claim::Polar => experiments::verify_polar_count(need(a.ell, "ell")?, need(a.n, "n")?, parity(a.parity), &opts)?,
        Claim::Ovals => {
            let search = OvalSearch { epsilon: a.epsilon, run: opts, ..OvalSearch::default() };
            experiments::build_ovals(need(a.k, "k")?, &search)?.report
        }
        Claim::ThetaSweep => theta_sweep_report(need(a.n, "n")?, a.samples, a.mirror, &opts)?,
        Claim::LowerBound => experiments::lower_bound_certificate(
            need(a.n, "n")?,
            need(a.theta, "theta")?,
            a.delta,
            a.rho,
            a.grid.resolution,
        )?,
        Claim::Bounds => {
            let (n, mu) = (need(a.n, "n")?, need(a.mu, "mu")?);
            let b = experiments::bounds_report(n, mu);
            let mut r = VerificationReport::new("bounds").param("n", n).param("mu", mu);
            for (k, v) in serde_json::to_value(&b)?.as_object().into_iter().flatten() {
                r.computed(k, v.clone());
            }
            r.observe("given", n, mu);
            r.finish(b.pass(), true)
        }
    };
    let text = match a.format {
        FormatArg::Json => report.to_json()?,
        FormatArg::Text => report.to_string(),
    };
    write_output(a.output.as_deref(), &text, out)?;
    Ok(status_code(report.status))
}

fn theta_sweep_report(n: u32, samples: usize, mirror: bool, opts: &RunOptions) -> CliResult<VerificationReport> {
    let p = experiments::sweep_theta(n, samples, mirror, opts)?;
    let unstable = p.samples.iter().filter(|s| !s.stable).count();
    let mut r = VerificationReport::new("theta-sweep").param("n", n).param("samples", samples).param("mirror", mirror);
    r.computed("profile", serde_json::to_value(&p.samples)?)
        .computed("breakpoints", serde_json::to_value(&p.breakpoints)?)
        .computed("critical_values", serde_json::to_value(&p.critical_values)?)
        .computed("breakpoints_explained", p.breakpoints_explained)
        .computed("unstable_samples", unstable);
    r.expected("breakpoints_explained", true);
    if let Some(sym) = p.symmetric {
        r.computed("symmetric", sym).expected("symmetric", true);
    }
    for s in p.samples.iter().filter(|s| s.stable) {
        r.observe("stern", n, s.mu);
    }
    let ok = p.breakpoints_explained && p.symmetric != Some(false);
    Ok(r.finish(ok, unstable < p.samples.len()))
}

fn cmd_scaling(a: &ScalingArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    if a.n_min > a.n_max {
        return Err(CliError::Usage("--n-min must not exceed --n-max".into()));
    }
    if a.resolution < 32 {
        return Err(CliError::Usage(format!("--resolution must be at least 32, got {}", a.resolution)));
    }
    let start = a.n_min | 1;
    let n_list: Vec<u32> = (start..=a.n_max).step_by(2).collect();
    let fit = experiments::length_scaling(a.theta, a.delta, &n_list, a.resolution)?;
    let mut csv = String::from("n,lambda,radius,length,length_coarse,length_fine");
    if a.certificate {
        csv.push_str(",lower_bound,certificate");
    }
    csv.push('\n');
    let mut failed = false;
    for s in &fit.samples {
        csv.push_str(&format!(
            "{},{},{},{},{},{}",
            s.n, s.lambda, s.radius, s.length, s.estimate.coarse, s.estimate.fine
        ));
        if a.certificate {
            match experiments::scaling::lower_bound_value(s.lambda, a.delta, a.rho) {
                Ok(b) => {
                    let pass = s.length >= b;
                    failed |= !pass;
                    csv.push_str(&format!(",{b},{}", if pass { "PASS" } else { "FAIL" }));
                }
                Err(Error::BelowThreshold(_)) => csv.push_str(",,below-threshold"),
                Err(e) => return Err(e.into()),
            }
        }
        csv.push('\n');
    }
    let summary = format!("exponent={} intercept={} residual={}\n", fit.exponent, fit.intercept, fit.residual);
    match &a.output {
        Some(p) => {
            std::fs::write(p, &csv)?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(csv.as_bytes())?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_PASS })
}
