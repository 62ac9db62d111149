/// First positive zero of the Bessel function `J_0`.
pub const J0_FIRST_ZERO: f64 = 2.404_825_557_695_773;

pub fn bessel_j0_first_zero() -> f64 {
    J0_FIRST_ZERO
}

/// Pleijel's constant `γ(2) = 4 / j_{0,1}²`.
pub fn pleijel_gamma() -> f64 {
    4.0 / (J0_FIRST_ZERO * J0_FIRST_ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::bisect;

    fn j0_series(x: f64) -> f64 {
        // Σ (-1)^k (x/2)^{2k} / (k!)², converges quickly for x < 4.
        let q = -(x * x) / 4.0;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..60 {
            term *= q / f64::from(k * k);
            sum += term;
        }
        sum
    }

    #[test]
    fn constant_matches_bisection_oracle() {
        let z = bisect(j0_series, 2.0, 3.0, 1e-15).unwrap();
        assert!((z - J0_FIRST_ZERO).abs() < 1e-13, "{z}");
    }

    #[test]
    fn pleijel_constant() {
        assert!((pleijel_gamma() - 0.6916).abs() < 1e-4);
        // ρ_δ = j / sqrt(1-δ) at δ = 3/4
        assert!((J0_FIRST_ZERO / 0.25f64.sqrt() - 4.80965).abs() < 1e-5);
    }
}
