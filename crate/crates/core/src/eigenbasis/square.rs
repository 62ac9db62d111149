use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_4;

use super::{check_theta, EigenParams};
use crate::error::{invalid, Result};
use crate::geometry::{Point, Vec2};

/// Dirichlet eigenfunction `cosθ sin x sin(2ry) + sinθ sin(2rx) sin y` of
/// the square `[0, π]²`, eigenvalue `1 + 4r²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquareReference {
    pub r: u32,
    pub theta: f64,
}

impl SquareReference {
    pub fn new(r: u32, theta: f64) -> Result<Self> {
        if r == 0 {
            return Err(invalid("square reference needs r >= 1"));
        }
        check_theta(theta, 0.0, FRAC_PI_4, "square reference")?;
        Ok(SquareReference { r, theta })
    }

    pub fn value(&self, p: Point) -> f64 {
        let q = 2.0 * f64::from(self.r);
        self.theta.cos() * p.x.sin() * (q * p.y).sin() + self.theta.sin() * (q * p.x).sin() * p.y.sin()
    }

    pub fn gradient(&self, p: Point) -> Vec2 {
        let q = 2.0 * f64::from(self.r);
        let (c, s) = (self.theta.cos(), self.theta.sin());
        [
            c * p.x.cos() * (q * p.y).sin() + q * s * (q * p.x).cos() * p.y.sin(),
            q * c * p.x.sin() * (q * p.y).cos() + s * (q * p.x).sin() * p.y.cos(),
        ]
    }

    pub fn eigen_params(&self) -> EigenParams {
        let lambda = 1 + 4 * self.r * self.r;
        let mut dim = 0;
        let mut p = 1;
        while p * p < lambda {
            let q2 = lambda - p * p;
            let q = (f64::from(q2)).sqrt().round() as u32;
            if q >= 1 && q * q == q2 {
                dim += 1;
            }
            p += 1;
        }
        EigenParams { eigenvalue: f64::from(lambda), degree: 2 * self.r, dimension: dim }
    }
}
