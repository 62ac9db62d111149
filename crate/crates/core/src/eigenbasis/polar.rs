use serde::{Deserialize, Serialize};

use super::zpow;
use crate::error::{invalid, Result};
use crate::geometry::{Point, Vec2};
use crate::specfun::{laguerre_deriv, laguerre_eval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Cosine,
    Sine,
}

/// `e^{-r²/2} r^m L_n^{(m)}(r²) {cos, sin}(mφ)` with `m = ℓ - 2n`,
/// eigenvalue `2(ℓ+1)`.
///
/// `r^m cos(mφ)` and `r^m sin(mφ)` are `Re z^m` and `Im z^m`, so the mode is
/// a polynomial in `x, y` and needs no angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarMode {
    pub ell: u32,
    pub n: u32,
    pub parity: Parity,
}

impl PolarMode {
    pub fn new(ell: u32, n: u32, parity: Parity) -> Result<Self> {
        if 2 * n > ell {
            return Err(invalid(format!("polar mode needs 2n <= ell, got ell={ell}, n={n}")));
        }
        if parity == Parity::Sine && 2 * n == ell {
            return Err(invalid("sine parity needs ell - 2n >= 1"));
        }
        Ok(PolarMode { ell, n, parity })
    }

    pub fn angular_order(&self) -> u32 {
        self.ell - 2 * self.n
    }

    fn angular(&self, p: Point) -> (f64, Vec2) {
        let m = self.angular_order();
        if m == 0 {
            return (1.0, [0.0, 0.0]);
        }
        let (re, im) = zpow(p.x, p.y, m);
        let (re1, im1) = zpow(p.x, p.y, m - 1);
        let mf = f64::from(m);
        match self.parity {
            // d/dx z^m = m z^{m-1}, d/dy z^m = i m z^{m-1}
            Parity::Cosine => (re, [mf * re1, -mf * im1]),
            Parity::Sine => (im, [mf * im1, mf * re1]),
        }
    }

    pub fn nodal_value(&self, p: Point) -> f64 {
        let m = self.angular_order();
        laguerre_eval(self.n, m, p.x * p.x + p.y * p.y) * self.angular(p).0
    }

    pub fn nodal_gradient(&self, p: Point) -> Vec2 {
        let m = self.angular_order();
        let s = p.x * p.x + p.y * p.y;
        let radial = laguerre_eval(self.n, m, s);
        let dradial = laguerre_deriv(self.n, m, s);
        let (ang, dang) = self.angular(p);
        [radial * dang[0] + 2.0 * p.x * dradial * ang, radial * dang[1] + 2.0 * p.y * dradial * ang]
    }

    /// Expected domain count `2(n+1)(ℓ-2n)` for the sine mode (and the
    /// cosine mode with `ℓ-2n ≥ 1`); `n+1` rings for `ℓ = 2n`.
    pub fn expected_domains(&self) -> u32 {
        let m = self.angular_order();
        if m == 0 {
            self.n + 1
        } else {
            2 * (self.n + 1) * m
        }
    }
}
