use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{invalid, Error, Result};
use crate::geometry::Point;
use crate::specfun::{hermite, hermite_second_deriv, hermite_zeros};

/// Angles within this distance (mod π) of a table entry count as critical.
pub const CRITICAL_THETA_TOL: f64 = 1e-9;

/// The angles `θ(i,j) ∈ (0, π)` at which `Φ^θ_n` vanishes at the lattice
/// point `(t_{n-1,i}, t_{n-1,j})`, where its gradient always vanishes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalValueTable {
    pub n: u32,
    /// `values[i-1][j-1] = θ(i,j)`.
    pub values: Vec<Vec<f64>>,
    pub theta_c: f64,
    /// Zeros of `H_{n-1}`.
    pub lattice: Vec<f64>,
    /// `H_n` at each lattice coordinate.
    pub hn_at_lattice: Vec<f64>,
}

impl CriticalValueTable {
    /// `θ(i,j)` with one-based indices.
    pub fn theta(&self, i: usize, j: usize) -> f64 {
        self.values[i - 1][j - 1]
    }

    /// Relative residual of `cosθ H_n(t_i) + sinθ H_n(t_j) = 0` at `θ(i,j)`.
    pub fn residual(&self, i: usize, j: usize) -> f64 {
        let th = self.theta(i, j);
        let (a, b) = (self.hn_at_lattice[i - 1], self.hn_at_lattice[j - 1]);
        (th.cos() * a + th.sin() * b).abs() / (th.cos().abs() * a.abs() + th.sin().abs() * b.abs())
    }

    pub fn max_residual(&self) -> f64 {
        let m = self.lattice.len();
        let mut worst: f64 = 0.0;
        for i in 1..=m {
            for j in 1..=m {
                worst = worst.max(self.residual(i, j));
            }
        }
        worst
    }

    /// Closest entry to `theta` measured modulo π: `(distance, i, j)`.
    pub fn nearest(&self, theta: f64) -> Option<(f64, usize, usize)> {
        let mut best: Option<(f64, usize, usize)> = None;
        for (i, row) in self.values.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let d = (theta - v).rem_euclid(PI);
                let d = d.min(PI - d);
                if best.is_none_or(|b| d < b.0) {
                    best = Some((d, i + 1, j + 1));
                }
            }
        }
        best
    }

    pub fn is_critical(&self, theta: f64) -> bool {
        self.nearest(theta).is_some_and(|(d, _, _)| d <= CRITICAL_THETA_TOL)
    }

    /// `Ok(())` when `theta` is regular, otherwise the offending entry.
    pub fn check_regular(&self, theta: f64) -> Result<()> {
        match self.nearest(theta) {
            Some((d, i, j)) if d <= CRITICAL_THETA_TOL => {
                Err(Error::CriticalTheta { theta, closest: self.theta(i, j), i, j })
            }
            _ => Ok(()),
        }
    }

    /// Distinct table values in increasing order (entries closer than
    /// `1e-12` merged).
    pub fn distinct_sorted(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.values.iter().flatten().copied().collect();
        all.sort_by(f64::total_cmp);
        all.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        all
    }
}

/// The full `(n-1)×(n-1)` table of critical values.
pub fn critical_values(n: u32) -> Result<CriticalValueTable> {
    if n < 2 {
        return Err(invalid(format!("critical values need n >= 2, got {n}")));
    }
    let lattice = hermite_zeros(n - 1).zeros;
    let hn: Vec<f64> = lattice.iter().map(|&t| hermite(n, t)).collect();
    let values: Vec<Vec<f64>> = hn
        .iter()
        .map(|&a| {
            hn.iter()
                .map(|&b| {
                    let th = (-a).atan2(b);
                    if th <= 0.0 {
                        th + PI
                    } else {
                        th
                    }
                })
                .collect()
        })
        .collect();
    let theta_c = values.iter().flatten().copied().fold(f64::INFINITY, f64::min);
    Ok(CriticalValueTable { n, values, theta_c, lattice, hn_at_lattice: hn })
}

pub fn theta_c(n: u32) -> Result<f64> {
    Ok(critical_values(n)?.theta_c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HessianSignature {
    /// Opposite-sign eigenvalues: two nodal arcs crossing transversally.
    DoubleCrossing,
    /// Same-sign eigenvalues: an isolated zero.
    Extremum,
    Degenerate,
}

/// A lattice point where `Φ^θ_n` and its gradient both vanish.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalZero {
    pub location: Point,
    /// One-based indices into the zeros of `H_{n-1}`.
    pub indices: (usize, usize),
    /// Diagonal Hessian entries `cosθ H''_n(x) e^{-r²/2}`, `sinθ H''_n(y) e^{-r²/2}`.
    pub hessian: [f64; 2],
    pub hessian_signature: HessianSignature,
}

fn hessian_entries(n: u32, theta: f64, p: Point) -> ([f64; 2], f64) {
    let g = (-0.5 * (p.x * p.x + p.y * p.y)).exp();
    let hx = hermite_second_deriv(n, p.x);
    let hy = hermite_second_deriv(n, p.y);
    ([theta.cos() * hx * g, theta.sin() * hy * g], hx.abs().max(hy.abs()) * g)
}

fn signature_of(e: [f64; 2], scale: f64) -> HessianSignature {
    if e[0].abs() <= 1e-12 * scale || e[1].abs() <= 1e-12 * scale {
        HessianSignature::Degenerate
    } else if e[0].signum() != e[1].signum() {
        HessianSignature::DoubleCrossing
    } else {
        HessianSignature::Extremum
    }
}

/// Lattice points that are zeros of `Φ^θ_n` up to relative tolerance `tol`.
pub fn critical_zeros_at(n: u32, theta: f64, tol: f64) -> Result<Vec<CriticalZero>> {
    let table = critical_values(n)?;
    let (c, s) = (theta.cos(), theta.sin());
    let m = table.lattice.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (table.hn_at_lattice[i], table.hn_at_lattice[j]);
            if (c * a + s * b).abs() <= tol * (c.abs() * a.abs() + s.abs() * b.abs()) {
                let p = Point::new(table.lattice[i], table.lattice[j]);
                let (hessian, scale) = hessian_entries(n, theta, p);
                out.push(CriticalZero {
                    location: p,
                    indices: (i + 1, j + 1),
                    hessian,
                    hessian_signature: signature_of(hessian, scale),
                });
            }
        }
    }
    Ok(out)
}

/// Recomputes the Hessian of a claimed critical zero and classifies it.
/// A degenerate Hessian is reported as an error, never classified.
pub fn hessian_classify(n: u32, theta: f64, cz: &CriticalZero) -> Result<(HessianSignature, [f64; 2])> {
    let p = cz.location;
    let (c, s) = (theta.cos(), theta.sin());
    let (a, b) = (hermite(n, p.x), hermite(n, p.y));
    let residual = (c * a + s * b).abs() / (c.abs() * a.abs() + s.abs() * b.abs()).max(f64::MIN_POSITIVE);
    let d = 2.0 * f64::from(n);
    let grad = (c * d * hermite(n - 1, p.x)).abs() + (s * d * hermite(n - 1, p.y)).abs();
    let grad_scale = d * (hermite(n - 1, p.x).abs() + hermite(n - 1, p.y).abs()) + a.abs() + b.abs();
    if residual > 1e-9 || grad > 1e-9 * grad_scale {
        return Err(Error::NotCritical { x: p.x, y: p.y, residual });
    }
    let (e, scale) = hessian_entries(n, theta, p);
    match signature_of(e, scale) {
        HessianSignature::Degenerate => Err(Error::DegenerateHessian { x: p.x, y: p.y, h11: e[0], h22: e[1] }),
        sig => Ok((sig, e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn n3_table_by_hand() {
        let t = critical_values(3).unwrap();
        let q = 3.0 * FRAC_PI_4;
        let want = [[q, FRAC_PI_4], [FRAC_PI_4, q]];
        for (row, want_row) in t.values.iter().zip(&want) {
            for (v, w) in row.iter().zip(want_row) {
                assert!((v - w).abs() < 1e-12);
            }
        }
        assert!((t.theta_c - FRAC_PI_4).abs() < 1e-12);
        // H_3(∓1/√2) = ±4√2
        assert!((t.hn_at_lattice[0] - 4.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn theta_c_reference_values() {
        // Independent evaluation with numpy/scipy Hermite zeros.
        let refs = [(5, 0.307_739_854_335_193_46), (7, 0.078_902_177_615_995_5), (9, 0.017_373_686_438_932_89)];
        for (n, want) in refs {
            let got = theta_c(n).unwrap();
            assert!((got - want).abs() < 1e-12, "n={n}: {got}");
            assert!(got > 0.0 && got <= FRAC_PI_4);
        }
    }

    #[test]
    fn residuals_and_table_symmetries() {
        for n in [5, 7, 9, 12] {
            let t = critical_values(n).unwrap();
            assert!(t.max_residual() <= 1e-12, "n={n}");
            let m = (n - 1) as usize;
            for i in 1..=m {
                for j in 1..=m {
                    let th = t.theta(i, j);
                    assert!(th > 0.0 && th < PI);
                    // θ(j,i) solves the equation with roles swapped: π/2 - θ(i,j) mod π
                    let sw = (FRAC_PI_4 * 2.0 - th).rem_euclid(PI);
                    let (a, b) = (t.hn_at_lattice[j - 1], t.hn_at_lattice[i - 1]);
                    assert!((sw.cos() * a + sw.sin() * b).abs() <= 1e-12 * (a.abs() + b.abs()));
                    if n % 2 == 1 {
                        // H_n is odd: negating both coordinates keeps θ,
                        // negating one sends θ to π - θ
                        assert!((t.theta(m + 1 - i, m + 1 - j) - th).abs() < 1e-12);
                        assert!((t.theta(m + 1 - i, j) - (PI - th)).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_entries_are_three_quarters_pi() {
        let t = critical_values(7).unwrap();
        assert_eq!(t.values.len(), 6);
        for i in 1..=6 {
            assert!((t.theta(i, i) - 3.0 * FRAC_PI_4).abs() < 1e-12);
        }
    }

    #[test]
    fn critical_zeros_examples() {
        let z = critical_zeros_at(3, FRAC_PI_4, 1e-10).unwrap();
        let idx: Vec<_> = z.iter().map(|c| c.indices).collect();
        assert_eq!(idx, vec![(1, 2), (2, 1)]);
        let z = critical_zeros_at(3, 3.0 * FRAC_PI_4, 1e-10).unwrap();
        assert!(z.iter().all(|c| c.location.x == c.location.y) && z.len() == 2);
        assert!(critical_zeros_at(7, 0.2, 1e-10).unwrap().is_empty());
        let t = critical_values(7).unwrap();
        for i in 1..=6 {
            for j in 1..=6 {
                let z = critical_zeros_at(7, t.theta(i, j), 1e-10).unwrap();
                assert!(z.iter().any(|c| c.indices == (i, j)));
                for c in &z {
                    assert_eq!(c.hessian_signature, HessianSignature::DoubleCrossing);
                }
            }
        }
    }

    #[test]
    fn hessian_classification() {
        let z = critical_zeros_at(3, 3.0 * FRAC_PI_4, 1e-10).unwrap();
        let (sig, e) = hessian_classify(3, 3.0 * FRAC_PI_4, &z[0]).unwrap();
        assert_eq!(sig, HessianSignature::DoubleCrossing);
        assert!(e[0] * e[1] < 0.0);
        assert!(matches!(hessian_classify(3, 0.3, &z[0]), Err(Error::NotCritical { .. })));
    }

    #[test]
    fn regularity_checks() {
        let t = critical_values(7).unwrap();
        assert!(t.check_regular(0.2).is_ok());
        assert!(matches!(t.check_regular(3.0 * FRAC_PI_4), Err(Error::CriticalTheta { .. })));
        assert!(t.is_critical(t.theta_c + 1e-10));
        assert!(critical_values(1).is_err());
    }
}
