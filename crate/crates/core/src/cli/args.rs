use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Nodal sets, nodal domains and critical zeros of eigenfunctions of the
/// two-dimensional isotropic harmonic oscillator.
///
/// Exit codes: 0 pass, 1 claim failure, 2 usage error, 3 numerical
/// instability. NODAL_THREADS caps the number of worker threads.
#[derive(Debug, Parser)]
#[command(name = "qho-nodal", version)]
pub struct Cli {
    /// File of `key = value` lines giving default flag values (keys are flag
    /// names without dashes); flags on the command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw the nodal set of one eigenfunction as SVG.
    #[command(args_override_self = true)]
    Plot(PlotArgs),
    /// Check one claim and print a JSON (or text) report.
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
    /// Nodal length inside the classically allowed disk against λ, as CSV.
    #[command(args_override_self = true)]
    Scaling(ScalingArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// cosθ H_n(x) + sinθ H_n(y)
    Stern,
    /// H_n(x) - H_n(y)
    Difference,
    /// Laguerre radial part times cos or sin of (ℓ-2n)φ
    Polar,
    /// A + aB + bC in degree 4k
    Ovals,
    /// Dirichlet eigenfunction of the square [0, π]²
    Square,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Sine,
    Cosine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// μ = 2, one regular curve, certified (needs --n, --theta)
    TwoDomains,
    /// Diagonal plus (n-1)/2 closed curves at θ = 3π/4 (needs --n)
    Diagonal,
    /// Nodal set inside the negative boxes of H_n(x)H_n(y) (needs --n, --theta)
    Checkerboard,
    /// Slope of the escaping arcs (needs --n, --theta)
    Asymptote,
    /// μ = 2(n+1)(ℓ-2n) (needs --ell, --n)
    Polar,
    /// Certified ovals with 2k(k+1) components (needs --k)
    Ovals,
    /// μ over θ in (0, π/4) against the critical values (needs --n)
    ThetaSweep,
    /// Explicit lower bound on nodal length (needs --n, --theta)
    LowerBound,
    /// Courant, Leydold and Pleijel bounds for a given μ (needs --n, --mu)
    Bounds,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Finest grid size per axis; the sweep also uses size/4 and size/2.
    #[arg(long, default_value_t = 512)]
    pub resolution: usize,
    /// Do not retry at twice the resolution when the sweep is unstable.
    #[arg(long)]
    pub no_refine: bool,
    /// Margin added around barrier-derived windows.
    #[arg(long, default_value_t = 1.0)]
    pub margin: f64,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long, value_enum, default_value_t = ParityArg::Sine)]
    pub parity: ParityArg,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    /// Choose a and b with the certified oval search.
    #[arg(long)]
    pub auto_ab: bool,
    /// Square family index: sin x sin(2ry) and sin(2rx) sin y.
    #[arg(long)]
    pub r: Option<u32>,
    /// Half-width of a square window centered at the origin.
    #[arg(long)]
    pub window: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// SVG output path (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also write the curves and statistics as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub claim: Claim,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long, value_enum, default_value_t = ParityArg::Sine)]
    pub parity: ParityArg,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// Number of θ samples for theta-sweep.
    #[arg(long, default_value_t = 16)]
    pub samples: usize,
    /// Also sample π/2 - θ and π - θ in theta-sweep.
    #[arg(long)]
    pub mirror: bool,
    /// Observed domain count for the bounds claim.
    #[arg(long)]
    pub mu: Option<usize>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Report output path (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    #[arg(long, default_value_t = 0.3)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.9)]
    pub delta: f64,
    /// Smallest odd degree.
    #[arg(long, default_value_t = 3)]
    pub n_min: u32,
    /// Largest odd degree.
    #[arg(long, default_value_t = 41)]
    pub n_max: u32,
    /// Coarse grid size; lengths are extrapolated from it and twice it.
    #[arg(long, default_value_t = 512)]
    pub resolution: usize,
    /// Add the explicit lower-bound check as a column.
    #[arg(long)]
    pub certificate: bool,
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// CSV output path; when absent the CSV goes to stdout and the fitted
    /// exponent to stderr.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
