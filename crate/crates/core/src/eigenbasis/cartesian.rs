use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{check_theta, gaussian_full};
use crate::error::{invalid, Result};
use crate::geometry::{Point, Vec2};
use crate::specfun::{hermite_deriv, hermite_eval, hermite_pair, hermite_table};

/// `Φ^θ_n = (cosθ H_n(x) + sinθ H_n(y)) e^{-(x²+y²)/2}`, eigenvalue `2(n+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartesianStern {
    pub n: u32,
    pub theta: f64,
}

impl CartesianStern {
    pub fn new(n: u32, theta: f64) -> Result<Self> {
        check_theta(theta, 0.0, PI, "stern family")?;
        Ok(CartesianStern { n, theta })
    }

    pub fn nodal_value(&self, p: Point) -> f64 {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        c * hermite_pair(self.n, p.x).0 + s * hermite_pair(self.n, p.y).0
    }

    pub fn nodal_gradient(&self, p: Point) -> Vec2 {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        let d = 2.0 * f64::from(self.n);
        [c * d * hermite_pair(self.n, p.x).1, s * d * hermite_pair(self.n, p.y).1]
    }

    pub(super) fn full(&self, p: Point) -> (f64, Vec2) {
        pair_full(self.n, self.theta.cos(), self.theta.sin(), p)
    }
}

/// `Ψ_n = H_n(x) - H_n(y)` (Gaussian factor in the full form).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermiteDifference {
    pub n: u32,
}

impl HermiteDifference {
    pub fn nodal_value(&self, p: Point) -> f64 {
        hermite_pair(self.n, p.x).0 - hermite_pair(self.n, p.y).0
    }

    pub fn nodal_gradient(&self, p: Point) -> Vec2 {
        let d = 2.0 * f64::from(self.n);
        [d * hermite_pair(self.n, p.x).1, -d * hermite_pair(self.n, p.y).1]
    }

    pub(super) fn full(&self, p: Point) -> (f64, Vec2) {
        pair_full(self.n, 1.0, -1.0, p)
    }
}

/// `(c H_n(x) + s H_n(y)) e^{-r²/2}` and its gradient from Gaussian-scaled
/// Hermite values, so large degrees do not overflow.
fn pair_full(n: u32, c: f64, s: f64, p: Point) -> (f64, Vec2) {
    let hx = hermite_eval(n, p.x).gaussian_scaled;
    let hy = hermite_eval(n, p.y).gaussian_scaled;
    let dx = hermite_deriv(n, p.x).gaussian_scaled;
    let dy = hermite_deriv(n, p.y).gaussian_scaled;
    let ex = (-0.5 * p.x * p.x).exp();
    let ey = (-0.5 * p.y * p.y).exp();
    let v = c * hx * ey + s * hy * ex;
    let gx = c * (dx - p.x * hx) * ey - p.x * s * hy * ex;
    let gy = -p.y * c * hx * ey + s * (dy - p.y * hy) * ex;
    (v, [gx, gy])
}

/// `Σ_m c_m H_m(x) H_{d-m}(y)` (times the Gaussian), a general element of
/// the degree-`d` eigenspace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermiteCombination {
    pub degree: u32,
    pub coefficients: Vec<f64>,
}

impl HermiteCombination {
    pub fn new(degree: u32, coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() != degree as usize + 1 {
            return Err(invalid(format!(
                "combination of degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coefficients.len()
            )));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(invalid("combination coefficients must be finite"));
        }
        Ok(HermiteCombination { degree, coefficients })
    }

    fn terms(&self, p: Point) -> (f64, Vec2) {
        let d = self.degree as usize;
        let hx = hermite_table(self.degree, p.x);
        let hy = hermite_table(self.degree, p.y);
        let (mut v, mut gx, mut gy) = (0.0, 0.0, 0.0);
        for (m, &c) in self.coefficients.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let k = d - m;
            v += c * hx[m] * hy[k];
            if m > 0 {
                gx += c * 2.0 * m as f64 * hx[m - 1] * hy[k];
            }
            if k > 0 {
                gy += c * 2.0 * k as f64 * hx[m] * hy[k - 1];
            }
        }
        (v, [gx, gy])
    }

    pub fn nodal_value(&self, p: Point) -> f64 {
        self.terms(p).0
    }

    pub fn nodal_gradient(&self, p: Point) -> Vec2 {
        self.terms(p).1
    }

    pub(super) fn full(&self, p: Point) -> (f64, Vec2) {
        let (v, g) = self.terms(p);
        gaussian_full(p, v, g)
    }
}
