use serde::{Deserialize, Serialize};

use crate::specfun::pleijel_gamma;

/// Slack on the Pleijel/Charron ratio check.
pub const CHARRON_SLACK: f64 = 0.05;

/// Observed domain count against the classical upper bounds for the
/// eigenvalue `2(n+1)`, which has multiplicity `n+1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: u32,
    pub mu: usize,
    /// `n(n+1)/2 + 1`
    pub first_index: usize,
    /// `(n+1)(n+2)/2`, the Courant bound used here.
    pub last_index: usize,
    /// `n²/2 + 2`
    pub leydold: f64,
    /// Smallest possible μ: 1 for `n = 0`, 3 for `n ≡ 0 (mod 4)`, else 2.
    pub minimum: usize,
    /// `μ / last_index`
    pub charron_ratio: f64,
    /// `4 / j_{0,1}²`
    pub pleijel_gamma: f64,
    pub courant_ok: bool,
    /// Also true when `n < 2`, where the Leydold bound is not stated.
    pub leydold_ok: bool,
    pub charron_ok: bool,
    /// `μ ≤ first_index`, Courant's bound in its strong form.
    pub courant_first_ok: bool,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        self.courant_ok && self.leydold_ok && self.charron_ok
    }
}

pub fn bounds_report(n: u32, mu: usize) -> BoundsReport {
    let nn = n as usize;
    let first_index = nn * (nn + 1) / 2 + 1;
    let last_index = (nn + 1) * (nn + 2) / 2;
    let leydold = f64::from(n).powi(2) / 2.0 + 2.0;
    let minimum = match n {
        0 => 1,
        _ if n.is_multiple_of(4) => 3,
        _ => 2,
    };
    let gamma = pleijel_gamma();
    let ratio = mu as f64 / last_index as f64;
    BoundsReport {
        n,
        mu,
        first_index,
        last_index,
        leydold,
        minimum,
        charron_ratio: ratio,
        pleijel_gamma: gamma,
        courant_ok: mu <= last_index,
        leydold_ok: n < 2 || mu as f64 <= leydold,
        charron_ok: ratio <= gamma + CHARRON_SLACK,
        courant_first_ok: mu <= first_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Σ_{k<n} (k+1) + 1 and Σ_{k≤n} (k+1) by direct counting.
    fn index_range(n: u32) -> (usize, usize) {
        let below: usize = (0..n).map(|k| k as usize + 1).sum();
        (below + 1, below + n as usize + 1)
    }

    #[test]
    fn three() {
        let r = bounds_report(3, 2);
        assert_eq!((r.first_index, r.last_index), (7, 10));
        assert_eq!(r.leydold, 6.5);
        assert_eq!(r.minimum, 2);
        assert!(r.pass());
    }

    #[test]
    fn index_formulas_match_counting() {
        for n in 0..40 {
            let r = bounds_report(n, 1);
            assert_eq!((r.first_index, r.last_index), index_range(n));
        }
        assert_eq!(bounds_report(4, 3).minimum, 3);
        assert_eq!(bounds_report(0, 1).minimum, 1);
    }

    #[test]
    fn violations_flagged() {
        assert!(!bounds_report(3, 7).leydold_ok);
        assert!(!bounds_report(3, 11).courant_ok);
        assert!(!bounds_report(1, 3).charron_ok);
    }
}
