//! Verifiers for the structural claims and the quantitative studies.

pub mod bounds;
pub mod ovals;
pub mod polar;
pub mod report;
pub mod scaling;
pub mod stern;

pub use bounds::{bounds_report, BoundsReport};
pub use ovals::{build_ovals, OvalSearch, OvalsOutcome};
pub use polar::{polar_max_count, verify_polar_count};
pub use report::{to_sorted_json, MuObservation, Status, VerificationReport};
pub use scaling::{length_scaling, lower_bound_certificate, lower_bound_constant, ScalingFit, ScalingSample};
pub use stern::{
    sweep_theta, verify_asymptote, verify_checkerboard, verify_diag_structure, verify_two_domains, ThetaProfile,
    ThetaSample,
};

use crate::critical::CertifyOptions;
use crate::error::Result;
use crate::field::Field;
use crate::geometry::Window;
use crate::nodal::{sweep_and_analyze, AnalysisOptions, NodalAnalysis, SweepReport};

/// Grid resolutions and certificate settings shared by the verifiers.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    /// Increasing sample counts per axis; the last three decide stability.
    pub counts: Vec<usize>,
    /// Extra count tried once when the sweep is unstable.
    pub refine: Option<usize>,
    /// Margin added around barrier-derived windows.
    pub margin: f64,
    pub certify: CertifyOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { counts: vec![128, 256, 512], refine: Some(1024), margin: 1.0, certify: CertifyOptions::default() }
    }
}

impl RunOptions {
    /// Small grids for quick runs and tests.
    pub fn quick() -> Self {
        RunOptions { counts: vec![64, 128, 256], refine: Some(512), ..Default::default() }
    }
}

/// Runs the sweep; if unstable and a refinement count is set, sweeps again
/// over the last two counts plus the refinement.
pub fn stable_analysis<F: Field>(
    f: &F,
    window: &Window,
    opts: &RunOptions,
    analysis: AnalysisOptions,
) -> Result<(SweepReport, NodalAnalysis)> {
    let first = sweep_and_analyze(f, window, &opts.counts, analysis)?;
    match opts.refine {
        Some(r) if !first.0.stable && opts.counts.last().is_some_and(|&l| r > l) => {
            let mut counts: Vec<usize> = opts.counts.iter().rev().take(2).rev().copied().collect();
            counts.push(r);
            sweep_and_analyze(f, window, &counts, analysis)
        }
        _ => Ok(first),
    }
}
