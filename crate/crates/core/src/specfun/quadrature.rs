use std::f64::consts::PI;

use super::hermite::{hermite_eval, hermite_zeros, ln_factorial};

/// Gauss–Hermite rule of order `m` for the weight `e^{-t²}`: nodes and the
/// natural logarithms of the weights,
/// `w_i = 2^{m-1} m! √π / (m² H_{m-1}(x_i)²)`.
pub fn gauss_hermite(m: u32) -> (Vec<f64>, Vec<f64>) {
    let nodes = hermite_zeros(m).zeros;
    let mf = f64::from(m);
    let base = (mf - 1.0) * 2f64.ln() + ln_factorial(m) + 0.5 * PI.ln() - 2.0 * mf.ln();
    let logw = nodes.iter().map(|&x| base - 2.0 * hermite_eval(m - 1, x).log_magnitude).collect();
    (nodes, logw)
}

/// `∫ e^{-t²} H_n(t)² dt` by a Gauss–Hermite rule that is exact for the
/// integrand's degree.
pub fn hermite_weighted_norm(n: u32) -> f64 {
    let (nodes, logw) = gauss_hermite(n + 2);
    nodes
        .iter()
        .zip(&logw)
        .map(|(&x, &lw)| {
            let h = hermite_eval(n, x);
            if h.raw_sign == 0 {
                0.0
            } else {
                (lw + 2.0 * h.log_magnitude).exp()
            }
        })
        .sum()
}
