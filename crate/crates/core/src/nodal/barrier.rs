//! Windows outside of which the nodal set of `Φ^θ_n` is two regular arcs.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{invalid, Error, Result};
use crate::geometry::{Window, WindowProvenance};
use crate::roots::bisect;
use crate::specfun::{hermite, hermite_zeros};

/// `t_{n-1,0}`: the unique `t < t_{n,1}` with `H_n(t) = -H_n(t_{n-1,1})`.
pub fn lower_barrier(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(invalid(format!("barrier needs n >= 2, got {n}")));
    }
    let target = -hermite(n, hermite_zeros(n - 1).t(1));
    let t1 = hermite_zeros(n).t(1);
    let g = |t: f64| hermite(n, t) - target;
    let mut lo = t1 - 1.0;
    while g(lo).signum() == g(t1).signum() {
        lo -= 1.0;
        if lo < -1e3 {
            return Err(Error::NoBracket { lo, hi: t1 });
        }
    }
    bisect(g, lo, t1, 1e-14)
}

/// `t^θ_{n-1,n}`: the unique `t > t_{n,n}` with
/// `tanθ H_n(t) = H_n(t_{n-1,1})`.
pub fn upper_barrier(n: u32, theta: f64) -> Result<f64> {
    if n < 2 {
        return Err(invalid(format!("barrier needs n >= 2, got {n}")));
    }
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(invalid(format!("upper barrier needs theta in (0, pi/2), got {theta}")));
    }
    let target = hermite(n, hermite_zeros(n - 1).t(1));
    let tn = hermite_zeros(n).t(n as usize);
    let tan = theta.tan();
    let g = |t: f64| tan * hermite(n, t) - target;
    let mut hi = tn + 1.0;
    while g(hi).signum() == g(tn).signum() {
        hi += 1.0;
        if hi > 1e3 {
            return Err(Error::NoBracket { lo: tn, hi });
        }
    }
    bisect(g, tn, hi, 1e-14)
}

/// The barrier rectangle
/// `[t_{n-1,0} - m, |t_{n-1,0}| + m] × [-t^θ - m, t^θ + m]`.
pub fn barrier_window(n: u32, theta: f64, margin: f64) -> Result<Window> {
    if !(theta > 0.0 && theta <= FRAC_PI_4) {
        return Err(Error::ThetaOutOfRange { theta });
    }
    let t0 = lower_barrier(n)?;
    let tt = upper_barrier(n, theta)?;
    Window::new(t0 - margin, -t0 + margin, -tt - margin, tt + margin, WindowProvenance::BarrierDerived)
}

/// Maps `theta` into `(0, π/4]` with the reflections and the swap that
/// preserve the shape of the nodal set of `Φ^θ_n` for odd `n`.
pub fn canonical_theta(theta: f64) -> Result<f64> {
    let mut t = theta.rem_euclid(PI);
    if t > FRAC_PI_2 {
        t = PI - t;
    }
    if t > FRAC_PI_4 {
        t = FRAC_PI_2 - t;
    }
    if t <= 0.0 || !t.is_finite() {
        return Err(invalid(format!("theta = {theta} maps to a product state; no barrier window")));
    }
    Ok(t)
}

/// A square window containing the barrier rectangle of the canonical angle
/// in both orientations, so it is valid for every image of `theta` under
/// the symmetries.
pub fn analysis_window(n: u32, theta: f64, margin: f64) -> Result<Window> {
    let w = barrier_window(n, canonical_theta(theta)?, margin)?;
    let half = w.x_max.max(w.y_max);
    Window::centered(half, WindowProvenance::BarrierDerived)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // Independent scipy bisection.
        let refs = [(3, -std::f64::consts::SQRT_2), (5, -2.143_45), (7, -2.748_49), (9, -3.272_45)];
        for (n, want) in refs {
            assert!((lower_barrier(n).unwrap() - want).abs() < 1e-5);
        }
        assert!((lower_barrier(3).unwrap() + 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn lower_barrier_below_first_zero() {
        for n in [3, 5, 7, 9, 11] {
            assert!(lower_barrier(n).unwrap() < hermite_zeros(n).t(1));
        }
    }

    #[test]
    fn upper_barrier_decreasing_in_theta() {
        for n in [3, 5, 7] {
            let mut prev = f64::INFINITY;
            for k in 1..=20 {
                let th = FRAC_PI_4 * k as f64 / 20.0;
                let t = upper_barrier(n, th).unwrap();
                assert!(t < prev);
                prev = t;
            }
            // at π/4 the two barriers agree
            assert!((upper_barrier(n, FRAC_PI_4).unwrap() + lower_barrier(n).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn n3_residuals() {
        let th = PI / 8.0;
        let t = upper_barrier(3, th).unwrap();
        let target = hermite(3, hermite_zeros(2).t(1));
        assert!((th.tan() * hermite(3, t) - target).abs() <= 1e-12 * target.abs());
        let t0 = lower_barrier(3).unwrap();
        assert!((hermite(3, t0) + target).abs() <= 1e-12 * target.abs());
    }

    #[test]
    fn window_validation() {
        assert!(matches!(barrier_window(5, 1.0, 0.5), Err(Error::ThetaOutOfRange { .. })));
        assert!(barrier_window(5, 0.0, 0.5).is_err());
        let w = barrier_window(5, 0.2, 0.5).unwrap();
        assert!(w.x_min < w.x_max && w.y_max > w.x_max);
    }

    #[test]
    fn canonical_angles() {
        let eps = 1e-12;
        assert!((canonical_theta(3.0 * FRAC_PI_4 + 0.01).unwrap() - (FRAC_PI_4 - 0.01)).abs() < eps);
        assert!((canonical_theta(0.3).unwrap() - 0.3).abs() < eps);
        assert!((canonical_theta(FRAC_PI_2 - 0.1).unwrap() - 0.1).abs() < eps);
        assert!(canonical_theta(FRAC_PI_2).is_err());
    }
}
