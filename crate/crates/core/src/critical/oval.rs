use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::eigenbasis::OvalFamily;
use crate::error::{invalid, Result};
use crate::geometry::Point;
use crate::roots::bisect;
use crate::specfun::{laguerre_deriv, laguerre_eval, laguerre_zeros};

/// Radii and angles at which the singular curves of `A` can meet those of
/// `B`, with the values of `a` for which `F_a = A + aB` acquires a
/// critical zero there.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OvalCriticalCandidates {
    pub k: u32,
    pub epsilon: f64,
    /// `r_i = √t_i` for the zeros `t_i` of `L_k^{(2k)}`.
    pub laguerre_radii: Vec<f64>,
    /// `r'_i = √t'_i` for the zeros of the derivative of `L_k^{(2k)}`.
    pub derivative_radii: Vec<f64>,
    /// `r_{c,i} ∈ (r_i, r'_i)`, `k-1` of them.
    pub radii: Vec<f64>,
    /// `φ_{c,j} ∈ (jπ/(2k), ψ_{2j+1})`, `4k` of them.
    pub angles: Vec<f64>,
    /// `-A/B` at each `(r_{c,i}, φ_{c,j})`.
    pub critical_a: Vec<f64>,
    /// Smallest positive entry of `critical_a`.
    pub a0: f64,
}

pub fn oval_critical_candidates(k: u32, epsilon: f64) -> Result<OvalCriticalCandidates> {
    let fam = OvalFamily::new(k, epsilon, 0.0, 0.0)?;
    let alpha = 2 * k;
    let kf = f64::from(k);
    let t = laguerre_zeros(k, alpha).zeros;
    let tp = laguerre_zeros(k - 1, alpha + 1).zeros;
    let laguerre_radii: Vec<f64> = t.iter().map(|v| v.sqrt()).collect();
    let derivative_radii: Vec<f64> = tp.iter().map(|v| v.sqrt()).collect();

    let radial = |r: f64| {
        let s = r * r;
        kf * laguerre_eval(k, alpha, s) - s * laguerre_deriv(k, alpha, s)
    };
    let radii = (0..(k - 1) as usize)
        .map(|i| bisect(radial, laguerre_radii[i], derivative_radii[i], 1e-13))
        .collect::<Result<Vec<_>>>()?;

    let ep = epsilon * PI;
    let angular = |phi: f64| {
        2.0 * (2.0 * kf * phi).sin() * (4.0 * kf * phi - ep).cos()
            - (2.0 * kf * phi).cos() * (4.0 * kf * phi - ep).sin()
    };
    let angles = (0..4 * k)
        .map(|j| {
            let lo = f64::from(j) * PI / (2.0 * kf);
            let hi = (f64::from(2 * j + 1) + epsilon) * PI / (4.0 * kf);
            bisect(angular, lo, hi, 1e-13)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut critical_a = Vec::with_capacity(radii.len() * angles.len());
    for &r in &radii {
        for &phi in &angles {
            let p = Point::from_polar(r, phi);
            critical_a.push(-fam.part_a(p).0 / fam.part_b(p).0);
        }
    }
    let a0 = critical_a.iter().copied().filter(|&a| a > 0.0).fold(f64::INFINITY, f64::min);
    if !a0.is_finite() {
        return Err(invalid("no positive critical value of a"));
    }
    Ok(OvalCriticalCandidates { k, epsilon, laguerre_radii, derivative_radii, radii, angles, critical_a, a0 })
}

/// Explicit sufficient upper bounds on `a`: one controlling the behaviour at
/// infinity, one controlling the origin after adding `bC`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OvalABounds {
    /// `(1/k!) min{sin(επ/2), cos(επ/2)}`
    pub infinity: f64,
    /// `(1/(2 k!)) cos(επ/2)`
    pub origin: f64,
}

impl OvalABounds {
    pub fn min(&self) -> f64 {
        self.infinity.min(self.origin)
    }
}

pub fn oval_a_bounds(k: u32, epsilon: f64) -> OvalABounds {
    let fact: f64 = (1..=k).map(f64::from).product();
    let h = 0.5 * epsilon * PI;
    OvalABounds { infinity: h.sin().min(h.cos()) / fact, origin: h.cos() / (2.0 * fact) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_counts_and_intervals() {
        let c = oval_critical_candidates(2, 0.5).unwrap();
        assert_eq!(c.radii.len(), 1);
        assert_eq!(c.angles.len(), 8);
        for i in 0..c.radii.len() {
            assert!(c.laguerre_radii[i] < c.radii[i] && c.radii[i] < c.derivative_radii[i]);
        }
        for (j, &phi) in c.angles.iter().enumerate() {
            let lo = j as f64 * PI / 4.0;
            let hi = (2.0 * j as f64 + 1.5) * PI / 8.0;
            assert!(lo < phi && phi < hi);
        }
        // Reference values from an independent scipy computation.
        assert!((c.radii[0] - 2.236_07).abs() < 1e-5);
        assert!((c.laguerre_radii[0] - 1.884_28).abs() < 1e-5);
        assert!((c.derivative_radii[0] - 2.449_49).abs() < 1e-5);
        assert!((c.angles[0] - PI / 8.0).abs() < 1e-10);
        assert!((c.a0 - 0.1).abs() < 1e-6, "{}", c.a0);
    }

    #[test]
    fn k4_reference() {
        let c = oval_critical_candidates(4, 0.5).unwrap();
        assert_eq!((c.radii.len(), c.angles.len()), (3, 16));
        let want = [2.371_36, 3.213_09, 4.129_49];
        for (r, w) in c.radii.iter().zip(want) {
            assert!((r - w).abs() < 1e-5);
        }
        assert!((c.a0 - 0.000_646_193).abs() < 1e-8, "{}", c.a0);
    }

    #[test]
    fn critical_a_creates_a_critical_zero() {
        for k in [2, 4] {
            let c = oval_critical_candidates(k, 0.5).unwrap();
            let mut checked = 0;
            for (idx, &a) in c.critical_a.iter().enumerate() {
                if a <= 0.0 {
                    continue;
                }
                let p = Point::from_polar(c.radii[idx / c.angles.len()], c.angles[idx % c.angles.len()]);
                let f = OvalFamily::new(k, 0.5, a, 0.0).unwrap();
                let ga = f.part_a(p).1;
                let scale = ga[0].abs() + ga[1].abs();
                let g = f.gradient(p);
                assert!(f.value(p).abs() < 1e-9 * scale);
                assert!(g[0].abs() < 1e-8 * scale && g[1].abs() < 1e-8 * scale, "k={k} {g:?}");
                checked += 1;
            }
            assert!(checked > 0);
        }
    }

    #[test]
    fn explicit_bounds() {
        let b = oval_a_bounds(2, 0.5);
        assert!((b.infinity - 0.353_553).abs() < 1e-6);
        assert!((b.origin - 0.176_777).abs() < 1e-6);
        assert!((oval_a_bounds(4, 0.5).min() - 0.014_731_4).abs() < 1e-6);
    }
}
