use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{tridiagonal_eigenvalues, LadderFamily, ZeroLadder};

/// `H_n(t)` stored as sign and logarithm of the magnitude, plus the
/// Gaussian-damped value `H_n(t) e^{-t²/2}`, which stays finite for the
/// degrees and arguments where `H_n` itself overflows.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaledHermiteValue {
    pub raw_sign: i8,
    pub log_magnitude: f64,
    pub gaussian_scaled: f64,
}

impl ScaledHermiteValue {
    fn from_parts(mantissa: f64, log_scale: f64, t: f64) -> Self {
        if mantissa == 0.0 {
            return ScaledHermiteValue { raw_sign: 0, log_magnitude: f64::NEG_INFINITY, gaussian_scaled: 0.0 };
        }
        let log_magnitude = mantissa.abs().ln() + log_scale;
        let sign = mantissa.signum();
        ScaledHermiteValue {
            raw_sign: sign as i8,
            log_magnitude,
            gaussian_scaled: sign * (log_magnitude - 0.5 * t * t).exp(),
        }
    }

    /// The plain value `H_n(t)`; may overflow to infinity.
    pub fn value(&self) -> f64 {
        f64::from(self.raw_sign) * self.log_magnitude.exp()
    }
}

const RESCALE_ABOVE: f64 = 1e150;

/// Runs the recurrence up to degree `n` and returns mantissas of
/// `(H_n, H_{n-1})` with a shared scale: `H_k = mantissa · exp(log_scale)`.
fn scaled_pair(n: u32, t: f64) -> (f64, f64, f64) {
    if n == 0 {
        return (1.0, 0.0, 0.0);
    }
    let (mut prev, mut cur, mut log_scale) = (1.0, 2.0 * t, 0.0);
    for k in 2..=n {
        let next = 2.0 * t * cur - 2.0 * f64::from(k - 1) * prev;
        prev = cur;
        cur = next;
        if cur.abs().max(prev.abs()) > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            prev /= RESCALE_ABOVE;
            log_scale += RESCALE_ABOVE.ln();
        }
    }
    (cur, prev, log_scale)
}

/// `H_n(t)` in overflow-safe form.
pub fn hermite_eval(n: u32, t: f64) -> ScaledHermiteValue {
    let (h, _, s) = scaled_pair(n, t);
    ScaledHermiteValue::from_parts(h, s, t)
}

/// `H'_n(t) = 2n H_{n-1}(t)`; the derivative of `H_0` is zero.
pub fn hermite_deriv(n: u32, t: f64) -> ScaledHermiteValue {
    if n == 0 {
        return ScaledHermiteValue::from_parts(0.0, 0.0, t);
    }
    let (_, h1, s) = scaled_pair(n, t);
    ScaledHermiteValue::from_parts(h1, s + (2.0 * f64::from(n)).ln(), t)
}

/// Plain `H_n(t)` by the three-term recurrence.
pub fn hermite(n: u32, t: f64) -> f64 {
    hermite_pair(n, t).0
}

/// Plain `(H_n(t), H_{n-1}(t))`, with `H_{-1} = 0`.
pub fn hermite_pair(n: u32, t: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut prev, mut cur) = (1.0, 2.0 * t);
    for k in 2..=n {
        let next = 2.0 * t * cur - 2.0 * f64::from(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// `H_0(t), …, H_n(t)`.
pub fn hermite_table(n: u32, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(1.0);
    if n >= 1 {
        out.push(2.0 * t);
    }
    for k in 2..=n as usize {
        let v = 2.0 * t * out[k - 1] - 2.0 * (k - 1) as f64 * out[k - 2];
        out.push(v);
    }
    out
}

/// `H''_n(t) = 4n(n-1) H_{n-2}(t)`.
pub fn hermite_second_deriv(n: u32, t: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    4.0 * f64::from(n) * f64::from(n - 1) * hermite(n - 2, t)
}

/// The orthonormal Hermite function `H_n(t) e^{-t²/2} / sqrt(2ⁿ n! √π)`.
pub fn hermite_function(n: u32, t: f64) -> f64 {
    let v = hermite_eval(n, t);
    if v.raw_sign == 0 {
        return 0.0;
    }
    let log_norm = 0.5 * (f64::from(n) * 2f64.ln() + ln_factorial(n) + 0.5 * PI.ln());
    f64::from(v.raw_sign) * (v.log_magnitude - 0.5 * t * t - log_norm).exp()
}

pub(crate) fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| f64::from(k).ln()).sum()
}

/// The `n` zeros of `H_n`: Golub–Welsch eigenvalues polished by Newton's
/// method with `H'_n = 2n H_{n-1}`, then symmetrized.
pub fn hermite_zeros(n: u32) -> ZeroLadder {
    let zeros = if n == 0 {
        Vec::new()
    } else {
        let diag = vec![0.0; n as usize];
        let off: Vec<f64> = (1..n).map(|k| (f64::from(k) / 2.0).sqrt()).collect();
        let mut z = tridiagonal_eigenvalues(&diag, &off);
        for t in z.iter_mut() {
            for _ in 0..50 {
                let (h, h1, _) = scaled_pair(n, *t);
                let step = h / (2.0 * f64::from(n) * h1);
                *t -= step;
                if step.abs() <= 1e-16 * t.abs().max(1.0) {
                    break;
                }
            }
        }
        let m = z.len();
        let sym: Vec<f64> = (0..m).map(|i| 0.5 * (z[i] - z[m - 1 - i])).collect();
        sym
    };
    ZeroLadder { degree: n, family: LadderFamily::Hermite, zeros }
}
