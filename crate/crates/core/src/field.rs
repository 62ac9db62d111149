//! A scalar field with a gradient, and the local analysis shared by the
//! sampling, singular-point and certification code.

use crate::geometry::{Point, Vec2};

/// A real function on the plane with an analytic (or at least accurate)
/// gradient.
pub trait Field: Sync {
    fn value(&self, p: Point) -> f64;
    fn gradient(&self, p: Point) -> Vec2;
}

impl<F: Field + ?Sized> Field for &F {
    fn value(&self, p: Point) -> f64 {
        (**self).value(p)
    }
    fn gradient(&self, p: Point) -> Vec2 {
        (**self).gradient(p)
    }
}

/// A field built from two closures.
pub struct FnField<V, G> {
    pub value: V,
    pub gradient: G,
}

impl<V, G> Field for FnField<V, G>
where
    V: Fn(Point) -> f64 + Sync,
    G: Fn(Point) -> Vec2 + Sync,
{
    fn value(&self, p: Point) -> f64 {
        (self.value)(p)
    }
    fn gradient(&self, p: Point) -> Vec2 {
        (self.gradient)(p)
    }
}

/// A field given by a value closure only; the gradient is a central
/// difference with step `step`.
pub struct FdField<V> {
    pub value: V,
    pub step: f64,
}

impl<V> Field for FdField<V>
where
    V: Fn(Point) -> f64 + Sync,
{
    fn value(&self, p: Point) -> f64 {
        (self.value)(p)
    }
    fn gradient(&self, p: Point) -> Vec2 {
        let h = self.step;
        [
            ((self.value)(p.offset(h, 0.0)) - (self.value)(p.offset(-h, 0.0))) / (2.0 * h),
            ((self.value)(p.offset(0.0, h)) - (self.value)(p.offset(0.0, -h))) / (2.0 * h),
        ]
    }
}

/// Symmetrized central-difference Hessian of `f` built from its gradient.
pub fn hessian_fd<F: Field + ?Sized>(f: &F, p: Point, eps: f64) -> [[f64; 2]; 2] {
    let gxp = f.gradient(p.offset(eps, 0.0));
    let gxm = f.gradient(p.offset(-eps, 0.0));
    let gyp = f.gradient(p.offset(0.0, eps));
    let gym = f.gradient(p.offset(0.0, -eps));
    let hxx = (gxp[0] - gxm[0]) / (2.0 * eps);
    let hyy = (gyp[1] - gym[1]) / (2.0 * eps);
    let hxy = 0.5 * ((gxp[1] - gxm[1]) + (gyp[0] - gym[0])) / (2.0 * eps);
    [[hxx, hxy], [hxy, hyy]]
}

/// Frobenius norm of a 2x2 matrix.
pub fn matrix_norm(h: &[[f64; 2]; 2]) -> f64 {
    (h[0][0] * h[0][0] + 2.0 * h[0][1] * h[0][1] + h[1][1] * h[1][1]).sqrt()
}

/// Newton iteration on `∇f = 0` started at `start`.
///
/// `scale` is a length (typically the grid spacing) used for the trust
/// region and the finite-difference step. Degenerate critical points only
/// converge linearly, hence the generous iteration budget. Returns `None`
/// when the iterate leaves the disk of radius `max_travel` around `start`
/// or the Hessian becomes singular.
pub fn newton_critical_point<F: Field + ?Sized>(f: &F, start: Point, scale: f64, max_travel: f64) -> Option<Point> {
    const MAX_ITER: usize = 2000;
    let mut p = start;
    let mut last_step = scale;
    for _ in 0..MAX_ITER {
        let g = f.gradient(p);
        if g[0] == 0.0 && g[1] == 0.0 {
            return Some(p);
        }
        let eps = (1e-3 * last_step).clamp(1e-9 * scale, 1e-4 * scale);
        let mut h = hessian_fd(f, p, eps);
        // Normalize so the determinant cannot underflow near degenerate points.
        let s = h[0][0].abs().max(h[0][1].abs()).max(h[1][1].abs());
        if !s.is_finite() || s == 0.0 {
            return None;
        }
        for row in h.iter_mut() {
            for v in row.iter_mut() {
                *v /= s;
            }
        }
        let g = [g[0] / s, g[1] / s];
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        if !det.is_finite() || det == 0.0 {
            return None;
        }
        let mut sx = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
        let mut sy = -(-h[1][0] * g[0] + h[0][0] * g[1]) / det;
        let len = sx.hypot(sy);
        if !len.is_finite() {
            return None;
        }
        if len > scale {
            sx *= scale / len;
            sy *= scale / len;
        }
        p = p.offset(sx, sy);
        if p.dist(start) > max_travel {
            return None;
        }
        last_step = len.min(scale);
        if len <= 1e-13 * scale.max(p.norm()) {
            return Some(p);
        }
    }
    // Slowly converging iterates near a highly degenerate point are still
    // accurate to far below the grid scale.
    (last_step <= 1e-9 * scale).then_some(p)
}

/// Number of sign changes of `f` on a circle of radius `radius` about `c`,
/// sampled at `samples` equally spaced angles. Exact zeros are skipped.
pub fn sign_changes_on_circle<F: Field + ?Sized>(f: &F, c: Point, radius: f64, samples: usize) -> usize {
    // A fixed irrational phase keeps samples off symmetry axes.
    const PHASE: f64 = 0.123_456_789;
    let signs: Vec<i8> = (0..samples)
        .map(|k| {
            let a = PHASE + std::f64::consts::TAU * k as f64 / samples as f64;
            let v = f.value(Point::from_polar(radius, a).offset(c.x, c.y));
            if v > 0.0 {
                1
            } else if v < 0.0 {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    if signs.is_empty() {
        return 0;
    }
    let n = signs.len();
    (0..n).filter(|&k| signs[k] != signs[(k + 1) % n]).count()
}
