use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::report::VerificationReport;
use super::{stable_analysis, RunOptions};
use crate::critical::{critical_values, theta_c};
use crate::eigenbasis::EigenFamily;
use crate::error::{invalid, Result};
use crate::geometry::{Point, Window, WindowProvenance};
use crate::nodal::{analysis_window, asymptote_check, checkerboard_check, AnalysisOptions};
use crate::specfun::hermite_zeros;

fn require_odd(n: u32) -> Result<()> {
    if n % 2 == 1 {
        Ok(())
    } else {
        Err(invalid(format!("n must be odd, got {n}")))
    }
}

fn regime(n: u32, theta: f64) -> Result<&'static str> {
    let tc = theta_c(n)?;
    Ok(if theta < tc {
        "below-theta-c"
    } else if (theta - FRAC_PI_4).abs() <= 0.1 {
        "near-quarter-pi"
    } else if (theta - 3.0 * FRAC_PI_4).abs() <= 0.1 {
        "near-three-quarter-pi"
    } else {
        "other"
    })
}

/// Two nodal domains, one regular nodal curve, no critical zero.
pub fn verify_two_domains(n: u32, theta: f64, opts: &RunOptions) -> Result<VerificationReport> {
    require_odd(n)?;
    if !(theta > 0.0 && theta < PI) {
        return Err(invalid(format!("theta must lie in (0, pi), got {theta}")));
    }
    if n >= 3 {
        critical_values(n)?.check_regular(theta)?;
    }
    let fam = EigenFamily::stern(n, theta)?;
    let window = analysis_window(n, theta, opts.margin)?;
    let (sweep, a) = stable_analysis(
        &fam.nodal(),
        &window,
        opts,
        AnalysisOptions { certify: Some(opts.certify), length_disk: None },
    )?;
    let s = &a.stats;
    let certified = s.certification.as_ref().is_some_and(|c| c.passed());
    let mut r = VerificationReport::new("two-domains")
        .param("n", n)
        .param("theta", theta)
        .param("regime", if n >= 3 { regime(n, theta)? } else { "other" })
        .param("window_half_width", window.x_max);
    r.computed("mu", s.mu)
        .computed("components", s.components)
        .computed("crossings", s.crossings)
        .computed("certificate", serde_json::to_value(&s.certification)?)
        .computed("certified", certified);
    r.expected("mu", 2).expected("components", 1).expected("crossings", 0).expected("certified", true);
    r.observe("stern", n, s.mu);
    let ok = s.mu == 2 && s.components == 1 && s.crossings == 0 && certified;
    let stable = sweep.stable;
    r.resolution = Some(sweep);
    Ok(r.finish(ok, stable))
}

/// At `θ = 3π/4` the nodal set is the diagonal plus `(n-1)/2` closed curves
/// crossing it at `(t_{n-1,i}, t_{n-1,i})` and meeting the anti-diagonal at
/// `(t_{n,i}, -t_{n,i})`.
pub fn verify_diag_structure(n: u32, opts: &RunOptions) -> Result<VerificationReport> {
    require_odd(n)?;
    if n < 3 {
        return Err(invalid("diagonal structure needs n >= 3"));
    }
    let theta = 3.0 * FRAC_PI_4;
    let fam = EigenFamily::stern(n, theta)?;
    let window = analysis_window(n, theta, opts.margin)?;
    let (sweep, a) = stable_analysis(&fam.nodal(), &window, opts, AnalysisOptions::default())?;
    let c = &a.curves;
    let d = c.cell_diagonal;
    let diag_pts: Vec<Point> = hermite_zeros(n - 1).zeros.iter().map(|&t| Point::new(t, t)).collect();
    let anti_pts: Vec<Point> =
        hermite_zeros(n).zeros.iter().filter(|t| t.abs() > 1e-9).map(|&t| Point::new(t, -t)).collect();
    let diag_err = diag_pts
        .iter()
        .map(|&p| c.crossings.iter().map(|&q| q.dist(p)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    let anti_err = anti_pts.iter().map(|&p| c.distance_to(p)).fold(0.0, f64::max);
    let closed = (n as usize - 1) / 2;
    let s = &a.stats;
    let mut r = VerificationReport::new("diagonal-structure").param("n", n).param("theta", theta);
    r.computed("mu", s.mu)
        .computed("components_joined", s.components)
        .computed("components", s.arc_components)
        .computed("crossings", s.crossings)
        .computed("diagonal_crossing_error", diag_err)
        .computed("antidiagonal_error", anti_err)
        .computed("cell_diagonal", d);
    r.expected("mu", n + 1)
        .expected("components_joined", 1)
        .expected("components", 1 + closed)
        .expected("crossings", n - 1);
    r.note("components counts the diagonal and the closed curves separately");
    r.observe("stern", n, s.mu);
    let ok = s.mu == n as usize + 1
        && s.components == 1
        && s.arc_components == 1 + closed
        && s.crossings == n as usize - 1
        && diag_err <= d
        && anti_err <= d;
    let stable = sweep.stable;
    r.resolution = Some(sweep);
    Ok(r.finish(ok, stable))
}

pub fn verify_checkerboard(n: u32, theta: f64, opts: &RunOptions) -> Result<VerificationReport> {
    let fam = EigenFamily::stern(n, theta)?;
    let window = analysis_window(n, theta, opts.margin)?;
    let (sweep, a) = stable_analysis(&fam.nodal(), &window, opts, AnalysisOptions::default())?;
    let check = checkerboard_check(n, theta, &a.curves)?;
    let mut r = VerificationReport::new("checkerboard").param("n", n).param("theta", theta);
    r.computed("lattice_points", check.lattice_points)
        .computed("vertices_checked", check.vertices_checked)
        .computed("violations", check.violations.len());
    r.expected("violations", 0);
    for v in check.violations.iter().take(10) {
        r.note(format!("{:?} at ({:.6}, {:.6})", v.kind, v.location.x, v.location.y));
    }
    r.observe("stern", n, a.stats.mu);
    let stable = sweep.stable;
    r.resolution = Some(sweep);
    Ok(r.finish(check.pass, stable))
}

/// Slope of the two escaping arcs, on a window several times wider than
/// the barrier window.
pub fn verify_asymptote(n: u32, theta: f64, opts: &RunOptions) -> Result<VerificationReport> {
    let fam = EigenFamily::stern(n, theta)?;
    let inner = analysis_window(n, theta, opts.margin)?;
    let window = Window::centered((4.0 * inner.x_max).max(30.0), WindowProvenance::User)?;
    // Keep the inner spacing of `opts` on the wider window.
    let factor = (window.x_max / inner.x_max).ceil();
    let scale = |c: usize| ((c as f64 * factor) as usize).min(4096);
    let wide = RunOptions {
        counts: opts.counts.iter().map(|&c| scale(c)).collect(),
        refine: opts.refine.map(scale),
        ..opts.clone()
    };
    let (sweep, a) = stable_analysis(&fam.nodal(), &window, &wide, AnalysisOptions::default())?;
    let rep = asymptote_check(n, theta, &a.curves)?;
    let mut r = VerificationReport::new("asymptote")
        .param("n", n)
        .param("theta", theta)
        .param("window_half_width", window.x_max);
    r.computed("slope_right", rep.slopes[0])
        .computed("slope_left", rep.slopes[1])
        .computed("symmetry_error", rep.symmetry_error);
    r.expected("slope", rep.expected_slope).expected("relative_tolerance", rep.tolerance);
    if let Some(reason) = &rep.reason {
        r.note(reason.clone());
    }
    let stable = sweep.stable;
    r.resolution = Some(sweep);
    Ok(r.finish(rep.pass, stable))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaSample {
    pub theta: f64,
    pub mu: usize,
    pub components: usize,
    pub stable: bool,
    /// μ at `π/2 - θ` and `π - θ`, when requested.
    pub mirrored: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaProfile {
    pub n: u32,
    pub samples: Vec<ThetaSample>,
    /// Distinct critical values in `(0, π/4]`.
    pub critical_values: Vec<f64>,
    /// Consecutive stable samples between which `(μ, components)` changes.
    pub breakpoints: Vec<(f64, f64)>,
    /// Every breakpoint interval, widened by two sample spacings, contains a critical value.
    pub breakpoints_explained: bool,
    pub symmetric: Option<bool>,
}

/// μ and component count at `samples` midpoints of `(0, π/4)`.
pub fn sweep_theta(n: u32, samples: usize, mirror: bool, opts: &RunOptions) -> Result<ThetaProfile> {
    require_odd(n)?;
    if n < 3 {
        return Err(invalid("theta sweep needs n >= 3"));
    }
    if samples < 8 {
        return Err(invalid(format!("need at least 8 samples, got {samples}")));
    }
    let table = critical_values(n)?;
    let step = FRAC_PI_4 / samples as f64;
    let count_at = |theta: f64| -> Result<(usize, usize, bool)> {
        let fam = EigenFamily::stern(n, theta)?;
        let window = analysis_window(n, theta, opts.margin)?;
        let (sw, a) = stable_analysis(&fam.nodal(), &window, opts, AnalysisOptions::default())?;
        Ok((a.stats.mu, a.stats.components, sw.stable))
    };
    let mut out = Vec::with_capacity(samples);
    for k in 0..samples {
        let theta = (k as f64 + 0.5) * step;
        let (mu, components, stable) = count_at(theta)?;
        let mirrored = if mirror { Some([count_at(FRAC_PI_2 - theta)?.0, count_at(PI - theta)?.0]) } else { None };
        out.push(ThetaSample { theta, mu, components, stable, mirrored });
    }
    let critical: Vec<f64> = table.distinct_sorted().into_iter().filter(|&t| t <= FRAC_PI_4 + 1e-12).collect();
    let stable: Vec<&ThetaSample> = out.iter().filter(|s| s.stable).collect();
    let breakpoints: Vec<(f64, f64)> = stable
        .windows(2)
        .filter(|w| (w[0].mu, w[0].components) != (w[1].mu, w[1].components))
        .map(|w| (w[0].theta, w[1].theta))
        .collect();
    let breakpoints_explained =
        breakpoints.iter().all(|&(lo, hi)| critical.iter().any(|&c| c >= lo - 2.0 * step && c <= hi + 2.0 * step));
    let symmetric = mirror.then(|| out.iter().all(|s| s.mirrored.is_some_and(|m| m == [s.mu, s.mu])));
    Ok(ThetaProfile { n, samples: out, critical_values: critical, breakpoints, breakpoints_explained, symmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn two_domains_small_cases() {
        let o = RunOptions::quick();
        let r = verify_two_domains(3, 0.1, &o).unwrap();
        assert!(r.pass, "{r}");
        let r = verify_two_domains(7, FRAC_PI_4 - 0.02, &o).unwrap();
        assert!(r.pass, "{r}");
        assert!(matches!(verify_two_domains(7, 3.0 * FRAC_PI_4, &o), Err(Error::CriticalTheta { .. })));
        assert!(verify_two_domains(4, 0.1, &o).is_err());
    }

    #[test]
    fn diagonal_structure_three() {
        let r = verify_diag_structure(3, &RunOptions::quick()).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.computed["mu"], 4);
    }

    #[test]
    fn checkerboard_and_asymptote() {
        let o = RunOptions::quick();
        let r = verify_checkerboard(7, 0.3, &o).unwrap();
        assert!(r.pass, "{r}");
        let r = verify_asymptote(7, 0.3, &o).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn theta_profile_for_three_is_flat() {
        let p = sweep_theta(3, 8, true, &RunOptions::quick()).unwrap();
        assert!(p.samples.iter().all(|s| s.mu == 2 && s.components == 1), "{p:?}");
        assert!(p.breakpoints.is_empty());
        assert_eq!(p.symmetric, Some(true));
        assert!(sweep_theta(3, 4, false, &RunOptions::quick()).is_err());
    }
}
