use super::report::VerificationReport;
use super::{stable_analysis, RunOptions};
use crate::eigenbasis::{EigenFamily, Parity, PolarMode};
use crate::error::{invalid, Result};
use crate::geometry::{Window, WindowProvenance};
use crate::nodal::AnalysisOptions;
use crate::specfun::laguerre_zeros;

/// Square window reaching 1.3 times the outermost nodal circle, plus one.
pub fn polar_window(mode: &PolarMode) -> Result<Window> {
    let r_max = if mode.n == 0 {
        0.0
    } else {
        laguerre_zeros(mode.n, mode.angular_order()).zeros.last().map_or(0.0, |t| t.sqrt())
    };
    Window::centered(1.3 * r_max + 1.0, WindowProvenance::User)
}

fn count(mode: PolarMode, opts: &RunOptions) -> Result<(usize, bool, crate::nodal::SweepReport)> {
    let fam = EigenFamily::Polar(mode);
    let window = polar_window(&mode)?;
    let (sweep, a) = stable_analysis(&fam.nodal(), &window, opts, AnalysisOptions::default())?;
    Ok((a.stats.mu, sweep.stable, sweep))
}

/// `μ(ω_{ℓ,n}) = 2(n+1)(ℓ-2n)` for `ℓ - 2n ≥ 1`.
pub fn verify_polar_count(ell: u32, n: u32, parity: Parity, opts: &RunOptions) -> Result<VerificationReport> {
    let mode = PolarMode::new(ell, n, parity)?;
    if mode.angular_order() == 0 {
        return Err(invalid("the domain formula needs ell - 2n >= 1"));
    }
    let (mu, stable, sweep) = count(mode, opts)?;
    let want = mode.expected_domains() as usize;
    let mut r = VerificationReport::new("polar-count")
        .param("ell", ell)
        .param("n", n)
        .param("parity", format!("{parity:?}").to_lowercase());
    r.computed("mu", mu);
    r.expected("mu", want);
    r.observe("polar", ell, mu);
    r.resolution = Some(sweep);
    Ok(r.finish(mu == want, stable))
}

/// Domain counts of `ω_{ℓ,n}` over all `n` with `ℓ - 2n ≥ 1`; for `ℓ = 4k`
/// the maximum `4k(k+1)` is expected at `n = k`.
pub fn polar_max_count(ell: u32, opts: &RunOptions) -> Result<VerificationReport> {
    if ell == 0 {
        return Err(invalid("ell must be positive"));
    }
    let mut counts = Vec::new();
    let mut stable = true;
    let mut r = VerificationReport::new("polar-maximum").param("ell", ell);
    for n in 0..=(ell - 1) / 2 {
        let (mu, st, _) = count(PolarMode::new(ell, n, Parity::Sine)?, opts)?;
        stable &= st;
        r.observe("polar", ell, mu);
        counts.push(mu);
    }
    let best = counts.iter().copied().max().unwrap_or(0);
    // The formula ties at n = k - 1 and n = k, so every maximizer is listed.
    let argmax: Vec<usize> = (0..counts.len()).filter(|&i| counts[i] == best).collect();
    r.computed("counts", counts.clone()).computed("max_mu", best).computed("argmax_n", argmax.clone());
    let ok = if ell.is_multiple_of(4) {
        let k = (ell / 4) as usize;
        r.expected("max_mu", 4 * k * (k + 1)).expected("mu_at_n_k", 4 * k * (k + 1));
        r.computed("mu_at_n_k", counts[k]);
        best == 4 * k * (k + 1) && counts[k] == best
    } else {
        let want: Vec<usize> = (0..=(ell - 1) / 2).map(|n| 2 * (n as usize + 1) * (ell - 2 * n) as usize).collect();
        let ok = counts == want;
        r.expected("counts", want);
        ok
    };
    Ok(r.finish(ok, stable))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polar_counts() {
        let o = RunOptions::quick();
        for (ell, n) in [(1, 0), (3, 1), (5, 1), (6, 2)] {
            let r = verify_polar_count(ell, n, Parity::Sine, &o).unwrap();
            assert!(r.pass, "{r}");
        }
        assert!(verify_polar_count(4, 2, Parity::Cosine, &o).is_err());
    }

    #[test]
    fn maximum_for_ell_four() {
        let r = polar_max_count(4, &RunOptions::quick()).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.computed["max_mu"], 8);
    }
}
