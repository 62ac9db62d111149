//! Closed-form eigenfunctions with analytic gradients.
//!
//! Every family is evaluable two ways:
//!
//! * as the full eigenfunction through the [`Field`] impl on [`EigenFamily`]
//!   (Gaussian factor included where the family has one), and
//! * through [`NodalFactor`], which drops the Gaussian. Both share the zero
//!   set. Nodal topology is computed on the factor; lengths use either.

mod cartesian;
mod oval;
mod polar;
mod square;
mod symmetry;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::field::Field;
use crate::geometry::{Point, Vec2};

pub use cartesian::{CartesianStern, HermiteCombination, HermiteDifference};
pub use oval::OvalFamily;
pub use polar::{Parity, PolarMode};
pub use square::SquareReference;
pub use symmetry::{symmetry_check, SymmetryReport};

/// One of the supported closed-form families.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum EigenFamily {
    Stern(CartesianStern),
    Difference(HermiteDifference),
    Combination(HermiteCombination),
    Polar(PolarMode),
    Oval(OvalFamily),
    Square(SquareReference),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenParams {
    pub eigenvalue: f64,
    /// Polynomial degree for oscillator families; `2r` for the square.
    pub degree: u32,
    /// Dimension of the eigenspace.
    pub dimension: u32,
}

impl EigenFamily {
    pub fn stern(n: u32, theta: f64) -> Result<Self> {
        Ok(EigenFamily::Stern(CartesianStern::new(n, theta)?))
    }

    pub fn difference(n: u32) -> Self {
        EigenFamily::Difference(HermiteDifference { n })
    }

    pub fn polar(ell: u32, n: u32, parity: Parity) -> Result<Self> {
        Ok(EigenFamily::Polar(PolarMode::new(ell, n, parity)?))
    }

    pub fn oval(k: u32, epsilon: f64, a: f64, b: f64) -> Result<Self> {
        Ok(EigenFamily::Oval(OvalFamily::new(k, epsilon, a, b)?))
    }

    pub fn square(r: u32, theta: f64) -> Result<Self> {
        Ok(EigenFamily::Square(SquareReference::new(r, theta)?))
    }

    pub fn combination(degree: u32, coefficients: Vec<f64>) -> Result<Self> {
        Ok(EigenFamily::Combination(HermiteCombination::new(degree, coefficients)?))
    }

    /// Whether the full eigenfunction carries the factor `e^{-r²/2}`.
    pub fn has_gaussian(&self) -> bool {
        !matches!(self, EigenFamily::Oval(_) | EigenFamily::Square(_))
    }

    pub fn eigen_params(&self) -> EigenParams {
        let osc = |deg: u32| EigenParams { eigenvalue: 2.0 * f64::from(deg + 1), degree: deg, dimension: deg + 1 };
        match self {
            EigenFamily::Stern(s) => osc(s.n),
            EigenFamily::Difference(d) => osc(d.n),
            EigenFamily::Combination(c) => osc(c.degree),
            EigenFamily::Polar(p) => osc(p.ell),
            EigenFamily::Oval(o) => osc(4 * o.k),
            EigenFamily::Square(s) => s.eigen_params(),
        }
    }

    /// Value of the polynomial (or trigonometric) factor.
    pub fn nodal_value(&self, p: Point) -> f64 {
        match self {
            EigenFamily::Stern(s) => s.nodal_value(p),
            EigenFamily::Difference(d) => d.nodal_value(p),
            EigenFamily::Combination(c) => c.nodal_value(p),
            EigenFamily::Polar(m) => m.nodal_value(p),
            EigenFamily::Oval(o) => o.value(p),
            EigenFamily::Square(s) => s.value(p),
        }
    }

    pub fn nodal_gradient(&self, p: Point) -> Vec2 {
        match self {
            EigenFamily::Stern(s) => s.nodal_gradient(p),
            EigenFamily::Difference(d) => d.nodal_gradient(p),
            EigenFamily::Combination(c) => c.nodal_gradient(p),
            EigenFamily::Polar(m) => m.nodal_gradient(p),
            EigenFamily::Oval(o) => o.gradient(p),
            EigenFamily::Square(s) => s.gradient(p),
        }
    }

    /// The full eigenfunction at a point given in polar coordinates.
    pub fn eval_polar(&self, r: f64, phi: f64) -> f64 {
        self.value(Point::from_polar(r, phi))
    }

    pub fn nodal(&self) -> NodalFactor<'_> {
        NodalFactor(self)
    }

    /// Short machine-readable descriptor, used in reports.
    pub fn describe(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap_or(serde_json::Value::Null)
    }
}

fn gaussian_full(p: Point, value: f64, grad: Vec2) -> (f64, Vec2) {
    let g = (-0.5 * (p.x * p.x + p.y * p.y)).exp();
    (g * value, [g * (grad[0] - p.x * value), g * (grad[1] - p.y * value)])
}

impl Field for EigenFamily {
    fn value(&self, p: Point) -> f64 {
        match self {
            EigenFamily::Stern(s) => s.full(p).0,
            EigenFamily::Difference(d) => d.full(p).0,
            EigenFamily::Combination(c) => c.full(p).0,
            EigenFamily::Polar(m) => gaussian_full(p, m.nodal_value(p), [0.0, 0.0]).0,
            EigenFamily::Oval(o) => o.value(p),
            EigenFamily::Square(s) => s.value(p),
        }
    }

    fn gradient(&self, p: Point) -> Vec2 {
        match self {
            EigenFamily::Stern(s) => s.full(p).1,
            EigenFamily::Difference(d) => d.full(p).1,
            EigenFamily::Combination(c) => c.full(p).1,
            EigenFamily::Polar(m) => gaussian_full(p, m.nodal_value(p), m.nodal_gradient(p)).1,
            EigenFamily::Oval(o) => o.gradient(p),
            EigenFamily::Square(s) => s.gradient(p),
        }
    }
}

/// The family with its Gaussian factor removed.
#[derive(Clone, Copy, Debug)]
pub struct NodalFactor<'a>(pub &'a EigenFamily);

impl Field for NodalFactor<'_> {
    fn value(&self, p: Point) -> f64 {
        self.0.nodal_value(p)
    }
    fn gradient(&self, p: Point) -> Vec2 {
        self.0.nodal_gradient(p)
    }
}

/// `(Re z^m, Im z^m)` for `z = x + iy`.
pub(crate) fn zpow(x: f64, y: f64, m: u32) -> (f64, f64) {
    let (mut re, mut im) = (1.0, 0.0);
    let (mut bx, mut by) = (x, y);
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            let t = re * bx - im * by;
            im = re * by + im * bx;
            re = t;
        }
        let t = bx * bx - by * by;
        by *= 2.0 * bx;
        bx = t;
        e >>= 1;
    }
    (re, im)
}

pub(crate) fn check_theta(theta: f64, lo: f64, hi: f64, what: &str) -> Result<()> {
    if theta.is_finite() && theta >= lo && theta <= hi {
        Ok(())
    } else {
        Err(invalid(format!("{what}: theta = {theta} not in [{lo}, {hi}]")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    /// `(-Δ + |x|²) f - λ f` by a five-point stencil, relative to max |f|.
    fn oscillator_residual(f: &EigenFamily, half: f64) -> f64 {
        let lambda = f.eigen_params().eigenvalue;
        let h = 1e-3;
        let mut worst: f64 = 0.0;
        let mut fmax: f64 = 0.0;
        let n = 21;
        for i in 0..n {
            for j in 0..n {
                let p = Point::new(
                    -half + 2.0 * half * (i as f64 + 0.37) / n as f64,
                    -half + 2.0 * half * (j as f64 + 0.61) / n as f64,
                );
                let c = f.value(p);
                let lap = (f.value(p.offset(h, 0.0))
                    + f.value(p.offset(-h, 0.0))
                    + f.value(p.offset(0.0, h))
                    + f.value(p.offset(0.0, -h))
                    - 4.0 * c)
                    / (h * h);
                let r = -lap + (p.x * p.x + p.y * p.y) * c - lambda * c;
                worst = worst.max(r.abs());
                fmax = fmax.max(c.abs());
            }
        }
        worst / fmax
    }

    #[test]
    fn eigen_equation_residuals() {
        let fams = vec![
            EigenFamily::stern(5, 0.3).unwrap(),
            EigenFamily::stern(0, 0.3).unwrap(),
            EigenFamily::difference(4),
            EigenFamily::combination(6, vec![0.3, -1.0, 0.0, 2.0, 0.5, 0.0, 1.0]).unwrap(),
            EigenFamily::polar(8, 2, Parity::Sine).unwrap(),
            EigenFamily::polar(7, 1, Parity::Cosine).unwrap(),
            EigenFamily::polar(6, 3, Parity::Cosine).unwrap(),
        ];
        for f in &fams {
            let r = oscillator_residual(f, 3.5);
            assert!(r < 1e-4, "{f:?}: {r}");
        }
    }

    #[test]
    fn oval_pieces_solve_oscillator_with_gaussian() {
        // A, B and C are all in E_{4k}: multiply by the Gaussian and check.
        let k = 2;
        for (a, b) in [(0.0, 0.0), (0.3, 0.0), (0.3, -0.7)] {
            let o = OvalFamily::new(k, 0.5, a, b).unwrap();
            let lambda = 2.0 * f64::from(4 * k + 1);
            let g = |p: Point| o.value(p) * (-0.5 * (p.x * p.x + p.y * p.y)).exp();
            let h = 1e-3;
            let mut worst: f64 = 0.0;
            let mut fmax: f64 = 0.0;
            for i in 0..15 {
                for j in 0..15 {
                    let p = Point::new(-3.0 + 0.41 * i as f64, -3.0 + 0.43 * j as f64);
                    let c = g(p);
                    let lap = (g(p.offset(h, 0.0)) + g(p.offset(-h, 0.0)) + g(p.offset(0.0, h)) + g(p.offset(0.0, -h))
                        - 4.0 * c)
                        / (h * h);
                    worst = worst.max((-lap + (p.x * p.x + p.y * p.y) * c - lambda * c).abs());
                    fmax = fmax.max(c.abs());
                }
            }
            assert!(worst / fmax < 1e-4, "{a} {b}: {}", worst / fmax);
        }
    }

    #[test]
    fn square_residual() {
        let s = EigenFamily::square(3, 0.2).unwrap();
        let lambda = s.eigen_params().eigenvalue;
        let h = 1e-3;
        for i in 1..10 {
            for j in 1..10 {
                let p = Point::new(0.31 * i as f64, 0.29 * j as f64);
                let c = s.value(p);
                let lap = (s.value(p.offset(h, 0.0))
                    + s.value(p.offset(-h, 0.0))
                    + s.value(p.offset(0.0, h))
                    + s.value(p.offset(0.0, -h))
                    - 4.0 * c)
                    / (h * h);
                assert!((-lap - lambda * c).abs() < 1e-4 * 2.0);
            }
        }
    }

    fn assert_fd_gradient<F: Field>(f: &F, p: Point, label: &str) {
        let h = 1e-6;
        let fd = [
            (f.value(p.offset(h, 0.0)) - f.value(p.offset(-h, 0.0))) / (2.0 * h),
            (f.value(p.offset(0.0, h)) - f.value(p.offset(0.0, -h))) / (2.0 * h),
        ];
        let g = f.gradient(p);
        let scale = g[0].abs().max(g[1].abs());
        assert!(
            (fd[0] - g[0]).abs() <= 1e-6 * scale && (fd[1] - g[1]).abs() <= 1e-6 * scale,
            "{label} at {p:?}: {g:?} vs {fd:?}"
        );
    }

    #[test]
    fn gradients_match_finite_differences() {
        let fams = vec![
            EigenFamily::stern(7, 0.35).unwrap(),
            EigenFamily::difference(5),
            EigenFamily::combination(4, vec![1.0, 0.2, -0.3, 0.0, 0.7]).unwrap(),
            EigenFamily::polar(9, 2, Parity::Sine).unwrap(),
            EigenFamily::polar(6, 1, Parity::Cosine).unwrap(),
            EigenFamily::oval(2, 0.5, 0.06, 0.01).unwrap(),
            EigenFamily::square(4, 0.2).unwrap(),
        ];
        let pts = [Point::new(0.31, -1.27), Point::new(1.9, 0.77), Point::new(-0.6, 2.2)];
        for f in &fams {
            for &p in &pts {
                let label = format!("{f:?}");
                assert_fd_gradient(f, p, &label);
                assert_fd_gradient(&f.nodal(), p, &label);
            }
        }
    }

    #[test]
    fn eigen_params_examples() {
        let p = EigenFamily::stern(0, 0.1).unwrap().eigen_params();
        assert_eq!((p.eigenvalue, p.dimension), (2.0, 1));
        let p = EigenFamily::stern(7, 0.1).unwrap().eigen_params();
        assert_eq!((p.eigenvalue, p.dimension), (16.0, 8));
        let p = EigenFamily::polar(8, 2, Parity::Sine).unwrap().eigen_params();
        assert_eq!(p.eigenvalue, 18.0);
    }

    #[test]
    fn stern_on_diagonals() {
        let f = EigenFamily::stern(5, FRAC_PI_4).unwrap();
        for &t in &[0.3, -1.1, 2.4] {
            assert!(f.value(Point::new(t, -t)).abs() < 1e-14);
            let want = crate::specfun::hermite(5, t) * 2f64.sqrt() * (-t * t).exp();
            assert!((f.value(Point::new(t, t)) - want).abs() < 1e-12 * want.abs());
        }
        let d = EigenFamily::difference(6);
        assert_eq!(d.value(Point::new(1.3, 1.3)), 0.0);
        let g = d.gradient(Point::new(0.4, 0.4));
        assert!((g[0] + g[1]).abs() < 1e-14 * g[0].abs());
    }

    #[test]
    fn stern_gradient_vanishes_on_lattice() {
        let n = 7;
        let z = crate::specfun::hermite_zeros(n - 1).zeros;
        let f = EigenFamily::stern(n, 0.4).unwrap();
        for &x in &z {
            for &y in &z {
                let g = f.nodal_gradient(Point::new(x, y));
                assert!(g[0].abs() < 1e-9 && g[1].abs() < 1e-9);
            }
        }
    }

    #[test]
    fn zpow_matches_polar_form() {
        let (re, im) = zpow(0.8, -0.3, 7);
        let (r, phi) = Point::new(0.8, -0.3).polar();
        assert!((re - r.powi(7) * (7.0 * phi).cos()).abs() < 1e-14);
        assert!((im - r.powi(7) * (7.0 * phi).sin()).abs() < 1e-14);
        assert_eq!(zpow(2.0, 3.0, 0), (1.0, 0.0));
        let _ = PI;
    }

    #[test]
    fn oval_vanishes_on_laguerre_circles() {
        let k = 2;
        let o = EigenFamily::oval(k, 0.5, 0.0, 0.0).unwrap();
        for &t in &crate::specfun::laguerre_zeros(k, 2 * k).zeros {
            for &phi in &[0.1, 1.3, 4.0] {
                let v = o.eval_polar(t.sqrt(), phi);
                assert!(v.abs() < 1e-10, "{v}");
            }
        }
    }
}
