use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

use super::CartesianStern;
use crate::error::{invalid, Result};
use crate::geometry::Point;
use crate::specfun::hermite;

/// Largest relative deviation seen for each of the three reflection
/// identities of `Φ^θ_n` (n odd):
///
/// 0. `Φ^θ(-x, y) = Φ^{π-θ}(x, y)`
/// 1. `Φ^θ(x, -y) = -Φ^{π-θ}(x, y)`
/// 2. `Φ^θ(y, x) = Φ^{π/2-θ}(x, y)`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub n: u32,
    pub theta: f64,
    pub max_deviation: [f64; 3],
    pub samples: usize,
}

impl SymmetryReport {
    pub fn max(&self) -> f64 {
        self.max_deviation.iter().copied().fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

pub fn symmetry_check(n: u32, theta: f64, sample: &[Point]) -> Result<SymmetryReport> {
    if n.is_multiple_of(2) {
        return Err(invalid(format!("symmetry identities need odd n, got {n}")));
    }
    let phi = |t: f64, p: Point| CartesianStern { n, theta: t }.nodal_value(p);
    let mut dev = [0.0f64; 3];
    for &p in sample {
        let scale = hermite(n, p.x).abs() + hermite(n, p.y).abs();
        let swapped = Point::new(p.y, p.x);
        let pairs = [
            (phi(theta, Point::new(-p.x, p.y)), phi(PI - theta, p)),
            (phi(theta, Point::new(p.x, -p.y)), -phi(PI - theta, p)),
            (phi(theta, swapped), phi(FRAC_PI_2 - theta, p)),
        ];
        for (k, (a, b)) in pairs.iter().enumerate() {
            if scale > 0.0 {
                dev[k] = dev[k].max((a - b).abs() / scale);
            }
        }
    }
    Ok(SymmetryReport { n, theta, max_deviation: dev, samples: sample.len() })
}
