use super::report::VerificationReport;
use super::{stable_analysis, RunOptions};
use crate::critical::{certify_no_critical_zero, oval_a_bounds, oval_critical_candidates, CertifyOptions};
use crate::eigenbasis::EigenFamily;
use crate::error::{invalid, Result};
use crate::geometry::{Point, Window, WindowProvenance};
use crate::nodal::{analyze, AnalysisOptions, NodalAnalysis, NodalCurveSet};

/// Parameter grids for the oval construction.
#[derive(Clone, Debug, PartialEq)]
pub struct OvalSearch {
    pub epsilon: f64,
    /// Candidate values of `a`, tried from the largest admissible one down.
    pub a_grid: Vec<f64>,
    /// Candidate magnitudes of `b`, tried from the largest down, each with
    /// both signs.
    pub b_grid: Vec<f64>,
    pub run: RunOptions,
}

impl Default for OvalSearch {
    fn default() -> Self {
        OvalSearch {
            epsilon: 0.5,
            a_grid: (1..=30).map(|m| 0.5f64.powi(m)).collect(),
            b_grid: (-20..=2).rev().map(|m| 2f64.powi(m)).collect(),
            run: RunOptions::default(),
        }
    }
}

pub struct OvalsOutcome {
    pub k: u32,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub report: VerificationReport,
    pub analysis: Option<NodalAnalysis>,
}

fn min_radius(points: &[Point]) -> f64 {
    points.iter().map(|p| p.norm()).fold(f64::INFINITY, f64::min)
}

/// Closed curves reaching within `radius` of the origin.
fn closed_near_origin(c: &NodalCurveSet, radius: f64) -> usize {
    c.polylines.iter().filter(|l| l.closed && min_radius(&l.points) < radius).count()
}

/// Closed curves staying at least `radius` away from the origin.
fn closed_away_from_origin(c: &NodalCurveSet, radius: f64) -> usize {
    c.polylines.iter().filter(|l| l.closed && min_radius(&l.points) >= radius).count()
}

/// Picks `a` below the first critical value and the explicit bounds with
/// `F_a = A + aB` certified away from the origin, then `b` so that `bC`
/// opens the singular point at the origin into `2k` ovals with `G_{a,b}`
/// certified; reports components `2k(k+1)` and `μ = 2k(k+1) + 1`.
pub fn build_ovals(k: u32, search: &OvalSearch) -> Result<OvalsOutcome> {
    let eps = search.epsilon;
    let cands = oval_critical_candidates(k, eps)?;
    let bounds = oval_a_bounds(k, eps);
    let r_in = cands.laguerre_radii[0];
    let r_max = *cands.laguerre_radii.last().expect("k >= 2 has radii");
    let window = Window::centered(1.3 * r_max + 1.0, WindowProvenance::User)?;
    let finest = *search.run.counts.last().ok_or_else(|| invalid("no grid counts"))?;
    let want_components = (2 * k * (k + 1)) as usize;
    let kk = k as usize;

    let mut report = VerificationReport::new("ovals")
        .param("k", k)
        .param("ell", 4 * k)
        .param("epsilon", eps)
        .param("window_half_width", window.x_max);
    report
        .computed("a0", cands.a0)
        .computed("a_bound_infinity", bounds.infinity)
        .computed("a_bound_origin", bounds.origin);

    let mut admissible: Vec<f64> =
        search.a_grid.iter().copied().filter(|&a| a > 0.0 && a < cands.a0 && a < bounds.min()).collect();
    admissible.sort_by(|x, y| y.total_cmp(x));

    let exclude = CertifyOptions { exclude: Some((Point::ORIGIN, 0.5 * r_in)), ..search.run.certify };
    let mut chosen_a = None;
    for &a in admissible.iter().take(4) {
        let fa = EigenFamily::oval(k, eps, a, 0.0)?;
        let cert = certify_no_critical_zero(&fa.nodal(), &window, finest, exclude);
        if cert.passed() {
            chosen_a = Some(a);
            break;
        }
        report.note(format!("a = {a:e}: F_a not certified ({cert:?})"));
    }
    let Some(a) = chosen_a else {
        report.note("no admissible a certified");
        return Ok(OvalsOutcome { k, a: None, b: None, report: report.finish(false, false), analysis: None });
    };
    report.computed("a", a);

    let fa = EigenFamily::oval(k, eps, a, 0.0)?;
    let fa_an = analyze(&fa.nodal(), &window, finest, AnalysisOptions::default())?;
    // Loops through the singular origin are traced as closed polylines too;
    // only the curves avoiding it are the ovals of F_a.
    let fa_closed = closed_away_from_origin(&fa_an.curves, 2.0 * fa_an.curves.cell_diagonal);
    let fa_open = fa_an.curves.polylines.iter().filter(|l| !l.closed).count();
    report
        .computed("f_a_closed_curves", fa_closed)
        .computed("f_a_unbounded_arcs", fa_open)
        .expected("f_a_closed_curves", 2 * kk * (kk - 1));

    for &mag in &search.b_grid {
        for sign in [1.0, -1.0] {
            let b = sign * mag;
            let g = EigenFamily::oval(k, eps, a, b)?;
            let (sweep, an) = stable_analysis(
                &g.nodal(),
                &window,
                &search.run,
                AnalysisOptions { certify: Some(search.run.certify), length_disk: None },
            )?;
            let certified = an.stats.certification.as_ref().is_some_and(|c| c.passed());
            // With the wrong sign of b the lobes at the origin merge into
            // a single curve around it instead of 2k ovals.
            let ovals = closed_near_origin(&an.curves, 0.5 * r_in);
            if !(sweep.stable && certified && an.stats.crossings == 0 && ovals == 2 * kk) {
                continue;
            }
            let s = &an.stats;
            report
                .computed("b", b)
                .computed("components", s.components)
                .computed("mu", s.mu)
                .computed("origin_ovals", ovals)
                .computed("certificate", serde_json::to_value(&s.certification)?)
                .expected("components", want_components)
                .expected("mu", want_components + 1)
                .expected("origin_ovals", 2 * kk);
            report.observe("ovals", 4 * k, s.mu);
            let ok = s.components == want_components && s.mu == want_components + 1 && fa_closed == 2 * kk * (kk - 1);
            report.resolution = Some(sweep);
            return Ok(OvalsOutcome { k, a: Some(a), b: Some(b), report: report.finish(ok, true), analysis: Some(an) });
        }
    }
    report.note("no b gave a certified, stable G_{a,b} with 2k ovals at the origin");
    Ok(OvalsOutcome { k, a: Some(a), b: None, report: report.finish(false, false), analysis: None })
}
