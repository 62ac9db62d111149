use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::report::VerificationReport;
use crate::critical::critical_values;
use crate::eigenbasis::EigenFamily;
use crate::error::{invalid, Error, Result};
use crate::geometry::{Window, WindowProvenance};
use crate::nodal::{richardson_length, Disk, LengthEstimate};
use crate::specfun::J0_FIRST_ZERO;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingSample {
    pub n: u32,
    pub lambda: f64,
    /// `√(δλ)`
    pub radius: f64,
    pub length: f64,
    pub estimate: LengthEstimate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingFit {
    pub family: String,
    pub theta: f64,
    pub delta: f64,
    pub samples: Vec<ScalingSample>,
    /// Slope of `log length` against `log λ`.
    pub exponent: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the log-log fit.
    pub residual: f64,
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("delta must lie in (0, 1), got {delta}")))
    }
}

fn fit_loglog(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let k = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = lx.iter().zip(&ly).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    (slope, intercept, (rss / k).sqrt())
}

/// Length of the zero set of `Φ^θ_n` inside the disk of radius `√(δλ)`,
/// `λ = 2(n+1)`, Richardson-extrapolated from `count²` and `(2count)²` grids.
pub fn nodal_length_in_allowed_disk(n: u32, theta: f64, delta: f64, count: usize) -> Result<ScalingSample> {
    check_delta(delta)?;
    let lambda = 2.0 * f64::from(n + 1);
    let radius = (delta * lambda).sqrt();
    let fam = EigenFamily::stern(n, theta)?;
    let window = Window::centered(1.05 * radius + 0.25, WindowProvenance::DiskClip { radius })?;
    let estimate = richardson_length(&fam.nodal(), &window, count, Some(Disk::centered(radius)))?;
    Ok(ScalingSample { n, lambda, radius, length: estimate.extrapolated, estimate })
}

/// Log-log fit of nodal length against `λ` over `n_list`.
pub fn length_scaling(theta: f64, delta: f64, n_list: &[u32], count: usize) -> Result<ScalingFit> {
    check_delta(delta)?;
    if n_list.len() < 2 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("n_list needs at least two strictly increasing degrees"));
    }
    for &n in n_list.iter().filter(|&&n| n >= 2) {
        critical_values(n)?.check_regular(theta)?;
    }
    let samples =
        n_list.iter().map(|&n| nodal_length_in_allowed_disk(n, theta, delta, count)).collect::<Result<Vec<_>>>()?;
    if let Some(s) = samples.iter().find(|s| s.length <= 0.0) {
        return Err(invalid(format!("non-positive length at n = {}", s.n)));
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.lambda).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.length).collect();
    let (exponent, intercept, residual) = fit_loglog(&xs, &ys);
    Ok(ScalingFit { family: format!("stern(theta={theta})"), theta, delta, samples, exponent, intercept, residual })
}

/// `2(1-δ) / (9π² j_{0,1})`
pub fn lower_bound_constant(delta: f64) -> f64 {
    2.0 * (1.0 - delta) / (9.0 * PI * PI * J0_FIRST_ZERO)
}

/// `λ` must exceed `(ρ_δ/ρ)²` with `ρ_δ = j_{0,1}/√(1-δ)`.
pub fn lower_bound_threshold(delta: f64, rho: f64) -> f64 {
    let rho_delta = J0_FIRST_ZERO / (1.0 - delta).sqrt();
    (rho_delta / rho).powi(2)
}

/// `C_δ √λ · π (√(δλ) - 2ρ)²₊`
pub fn lower_bound_value(lambda: f64, delta: f64, rho: f64) -> Result<f64> {
    check_delta(delta)?;
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(invalid(format!("rho must lie in (0, 1], got {rho}")));
    }
    let threshold = lower_bound_threshold(delta, rho);
    if lambda <= threshold {
        return Err(Error::BelowThreshold(format!(
            "lambda = {lambda} is not above (rho_delta/rho)^2 = {threshold:.6}"
        )));
    }
    let r = ((delta * lambda).sqrt() - 2.0 * rho).max(0.0);
    Ok(lower_bound_constant(delta) * lambda.sqrt() * PI * r * r)
}

/// Measured length against the explicit lower bound.
pub fn lower_bound_certificate(n: u32, theta: f64, delta: f64, rho: f64, count: usize) -> Result<VerificationReport> {
    let lambda = 2.0 * f64::from(n + 1);
    let bound = lower_bound_value(lambda, delta, rho)?;
    let s = nodal_length_in_allowed_disk(n, theta, delta, count)?;
    let settled = (s.estimate.fine - s.estimate.coarse).abs() <= 0.01 * s.estimate.fine;
    let mut r = VerificationReport::new("length-lower-bound")
        .param("n", n)
        .param("theta", theta)
        .param("delta", delta)
        .param("rho", rho)
        .param("lambda", lambda);
    r.computed("length", s.length).computed("radius", s.radius).computed("ratio", s.length / bound);
    r.expected("length_at_least", bound);
    if !settled {
        r.note("coarse and fine lengths differ by more than 1%");
    }
    Ok(r.finish(s.length >= bound, settled))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_area() {
        assert!((lower_bound_constant(0.5) - 4.68e-3).abs() < 1e-5);
        // λ = 40, δ = 1/2: radius √20, area π(√20 - 2)²
        let v = lower_bound_value(40.0, 0.5, 1.0).unwrap();
        let want = lower_bound_constant(0.5) * 40f64.sqrt() * PI * (20f64.sqrt() - 2.0).powi(2);
        assert!((v - want).abs() < 1e-12);
        assert!(matches!(lower_bound_value(10.0, 0.5, 1.0), Err(Error::BelowThreshold(_))));
    }

    #[test]
    fn line_length_for_degree_one() {
        // Zero set of cosθ x + sinθ y: a diameter of length 2R.
        let s = nodal_length_in_allowed_disk(1, 0.4, 0.5, 128).unwrap();
        assert!((s.length - 2.0 * s.radius).abs() < 0.01 * s.radius);
    }

    #[test]
    fn quick_fit_grows() {
        let f = length_scaling(0.3, 0.9, &[3, 5, 7, 9, 11], 128).unwrap();
        assert!(f.samples.windows(2).all(|w| w[1].length > w[0].length));
        assert!(f.exponent > 1.0 && f.exponent < 2.0, "{}", f.exponent);
    }

    #[test]
    fn certificate_nineteen() {
        let r = lower_bound_certificate(19, 0.3, 0.5, 1.0, 256).unwrap();
        assert!(r.pass, "{r}");
    }
}
