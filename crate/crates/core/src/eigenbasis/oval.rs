use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::zpow;
use crate::error::{invalid, Result};
use crate::geometry::{Point, Vec2};
use crate::specfun::{laguerre_deriv, laguerre_eval};

/// `G_{a,b} = A + a B + b C` in `E_{4k}` with the exponential factor dropped:
///
/// * `A = r^{2k} L_k^{(2k)}(r²) sin(2kφ)`
/// * `B = r^{4k} sin(4kφ - επ)`
/// * `C = L_{2k}(r²)`
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OvalFamily {
    pub k: u32,
    pub epsilon: f64,
    pub a: f64,
    pub b: f64,
}

impl OvalFamily {
    pub fn new(k: u32, epsilon: f64, a: f64, b: f64) -> Result<Self> {
        if k < 2 || !k.is_multiple_of(2) {
            return Err(invalid(format!("oval family needs an even k >= 2, got {k}")));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(invalid(format!("epsilon must lie in (0, 1), got {epsilon}")));
        }
        if !(a >= 0.0 && a.is_finite() && b.is_finite()) {
            return Err(invalid(format!("need finite a >= 0 and finite b, got a={a}, b={b}")));
        }
        Ok(OvalFamily { k, epsilon, a, b })
    }

    pub fn part_a(&self, p: Point) -> (f64, Vec2) {
        let k = self.k;
        let s = p.x * p.x + p.y * p.y;
        let l = laguerre_eval(k, 2 * k, s);
        let dl = laguerre_deriv(k, 2 * k, s);
        let m = f64::from(2 * k);
        let (_, im) = zpow(p.x, p.y, 2 * k);
        let (re1, im1) = zpow(p.x, p.y, 2 * k - 1);
        (l * im, [l * m * im1 + 2.0 * p.x * dl * im, l * m * re1 + 2.0 * p.y * dl * im])
    }

    pub fn part_b(&self, p: Point) -> (f64, Vec2) {
        // Im(e^{-iεπ} z^{4k}) = Im z^{4k} cos(επ) - Re z^{4k} sin(επ)
        let (c, s) = ((self.epsilon * PI).cos(), (self.epsilon * PI).sin());
        let m = f64::from(4 * self.k);
        let (re, im) = zpow(p.x, p.y, 4 * self.k);
        let (re1, im1) = zpow(p.x, p.y, 4 * self.k - 1);
        let v = im * c - re * s;
        let gx = m * (im1 * c - re1 * s);
        let gy = m * (re1 * c + im1 * s);
        (v, [gx, gy])
    }

    pub fn part_c(&self, p: Point) -> (f64, Vec2) {
        let s = p.x * p.x + p.y * p.y;
        let l = laguerre_eval(2 * self.k, 0, s);
        let dl = laguerre_deriv(2 * self.k, 0, s);
        (l, [2.0 * p.x * dl, 2.0 * p.y * dl])
    }

    pub fn value(&self, p: Point) -> f64 {
        let mut v = self.part_a(p).0;
        if self.a != 0.0 {
            v += self.a * self.part_b(p).0;
        }
        if self.b != 0.0 {
            v += self.b * self.part_c(p).0;
        }
        v
    }

    pub fn gradient(&self, p: Point) -> Vec2 {
        let mut g = self.part_a(p).1;
        if self.a != 0.0 {
            let gb = self.part_b(p).1;
            g[0] += self.a * gb[0];
            g[1] += self.a * gb[1];
        }
        if self.b != 0.0 {
            let gc = self.part_c(p).1;
            g[0] += self.b * gc[0];
            g[1] += self.b * gc[1];
        }
        g
    }

    /// Nodal components expected after full desingularization: `2k(k+1)`.
    pub fn expected_components(&self) -> u32 {
        2 * self.k * (self.k + 1)
    }
}
