//! Numerical certificate that a field has no critical zero in a window.
//!
//! For each grid cell whose corners change sign, with center `c`, spacing
//! diagonal `d` and Hessian estimate `H`, the cell passes when
//! `|∇f(c)| - 1.5 ‖H‖ d/2 > margin · S`, with `S = max |f(corner)| / d` a
//! local gradient scale. A cell that fails is refined 4×4 and re-tested.
//! If it still fails, Newton's method looks for a critical point: a zero
//! of `f` there makes the result inconclusive. Otherwise the cell is judged
//! by the smallest `|∇f|` along its refined zero set. This is a careful
//! numerical check, not a proof.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::{hessian_fd, matrix_norm, newton_critical_point, sign_changes_on_circle, Field};
use crate::geometry::{Point, Window};
use crate::nodal::grid::GridAxes;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifyOptions {
    /// Relative margin on the gradient bound.
    pub margin: f64,
    /// Subdivision per axis for cells failing the first test.
    pub refine: usize,
    /// Disk `(center, radius)` to leave out, e.g. a known singular point.
    pub exclude: Option<(Point, f64)>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { margin: 1e-6, refine: 4, exclude: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Certificate {
    Pass {
        /// Smallest gradient norm over the zero set, as sampled.
        min_gradient: f64,
        cells_checked: usize,
        cells_refined: usize,
    },
    Inconclusive {
        cell: (usize, usize),
        location: Point,
        reason: String,
    },
}

impl Certificate {
    pub fn passed(&self) -> bool {
        matches!(self, Certificate::Pass { .. })
    }
}

enum CellResult {
    Pass { min_gradient: f64, refined: bool },
    Fail { location: Point, reason: String },
}

fn bound_ok<F: Field>(f: &F, x0: f64, y0: f64, dx: f64, dy: f64, margin: f64) -> Option<f64> {
    let c = Point::new(x0 + 0.5 * dx, y0 + 0.5 * dy);
    let diag = dx.hypot(dy);
    let g = f.gradient(c);
    let gn = g[0].hypot(g[1]);
    let h = hessian_fd(f, c, 1e-3 * dx.min(dy));
    let scale = [(x0, y0), (x0 + dx, y0), (x0, y0 + dy), (x0 + dx, y0 + dy)]
        .iter()
        .map(|&(x, y)| f.value(Point::new(x, y)).abs())
        .fold(0.0, f64::max)
        / diag;
    (gn - 1.5 * matrix_norm(&h) * 0.5 * diag > margin * scale).then_some(gn)
}

fn changes_sign(v: [f64; 4]) -> bool {
    !(v.iter().all(|&x| x > 0.0) || v.iter().all(|&x| x < 0.0))
}

fn check_cell<F: Field>(
    f: &F,
    window: &Window,
    x0: f64,
    y0: f64,
    dx: f64,
    dy: f64,
    opts: &CertifyOptions,
) -> CellResult {
    if let Some(g) = bound_ok(f, x0, y0, dx, dy, opts.margin) {
        return CellResult::Pass { min_gradient: g, refined: false };
    }
    let m = opts.refine.max(1);
    let (sx, sy) = (dx / m as f64, dy / m as f64);
    let val = |a: usize, b: usize| f.value(Point::new(x0 + a as f64 * sx, y0 + b as f64 * sy));
    let vals: Vec<Vec<f64>> = (0..=m).map(|b| (0..=m).map(|a| val(a, b)).collect()).collect();
    let mut min_g = f64::INFINITY;
    let mut all_ok = true;
    for b in 0..m {
        for a in 0..m {
            if !changes_sign([vals[b][a], vals[b][a + 1], vals[b + 1][a], vals[b + 1][a + 1]]) {
                continue;
            }
            match bound_ok(f, x0 + a as f64 * sx, y0 + b as f64 * sy, sx, sy, opts.margin) {
                Some(g) => min_g = min_g.min(g),
                None => all_ok = false,
            }
        }
    }
    if all_ok {
        return CellResult::Pass { min_gradient: min_g, refined: true };
    }

    let center = Point::new(x0 + 0.5 * dx, y0 + 0.5 * dy);
    let diag = dx.hypot(dy);
    if let Some(p) = newton_critical_point(f, center, dx.max(dy), 2.0 * diag) {
        let near = (p.x - center.x).abs() <= dx && (p.y - center.y).abs() <= dy;
        if near && sign_changes_on_circle(f, p, 1e-6 * window.diagonal(), 256) >= 4 {
            return CellResult::Fail { location: p, reason: "critical zero".into() };
        }
    }

    // Smallest gradient along the zero set of a fine subdivision.
    let fine = 4 * m;
    let (fx, fy) = (dx / fine as f64, dy / fine as f64);
    let pt = |a: usize, b: usize| Point::new(x0 + a as f64 * fx, y0 + b as f64 * fy);
    let fv: Vec<Vec<f64>> = (0..=fine).map(|b| (0..=fine).map(|a| f.value(pt(a, b))).collect()).collect();
    let scale = [fv[0][0], fv[0][fine], fv[fine][0], fv[fine][fine]].iter().map(|v| v.abs()).fold(0.0, f64::max) / diag;
    let mut min_g = f64::INFINITY;
    let mut probe = |p: Point| {
        let g = f.gradient(p);
        min_g = min_g.min(g[0].hypot(g[1]));
    };
    for b in 0..=fine {
        for a in 0..=fine {
            if a < fine && (fv[b][a] > 0.0) != (fv[b][a + 1] > 0.0) {
                let t = fv[b][a] / (fv[b][a] - fv[b][a + 1]);
                let p = pt(a, b);
                probe(Point::new(p.x + t * fx, p.y));
            }
            if b < fine && (fv[b][a] > 0.0) != (fv[b + 1][a] > 0.0) {
                let t = fv[b][a] / (fv[b][a] - fv[b + 1][a]);
                let p = pt(a, b);
                probe(Point::new(p.x, p.y + t * fy));
            }
        }
    }
    if min_g.is_finite() && min_g > opts.margin * scale {
        CellResult::Pass { min_gradient: min_g, refined: true }
    } else {
        CellResult::Fail { location: center, reason: "gradient too small on the zero set".into() }
    }
}

/// Certifies that `f` has no critical zero in `window`, sampled at
/// `grid_res²` cells.
pub fn certify_no_critical_zero<F: Field>(
    f: &F,
    window: &Window,
    grid_res: usize,
    opts: CertifyOptions,
) -> Certificate {
    let axes = match GridAxes::new(window, grid_res, grid_res) {
        Ok(a) => a,
        Err(e) => return Certificate::Inconclusive { cell: (0, 0), location: window.center(), reason: e.to_string() },
    };
    let n = axes.nx;
    let mut values = vec![0.0; n * axes.ny];
    values.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
        for (i, v) in row.iter_mut().enumerate() {
            *v = f.value(axes.point(i, j));
        }
    });
    let mut cells = Vec::new();
    for j in 0..axes.ny - 1 {
        for i in 0..n - 1 {
            let k = axes.idx(i, j);
            if !changes_sign([values[k], values[k + 1], values[k + n], values[k + n + 1]]) {
                continue;
            }
            if let Some((c, r)) = opts.exclude {
                let nx = c.x.clamp(axes.x(i), axes.x(i + 1));
                let ny = c.y.clamp(axes.y(j), axes.y(j + 1));
                if Point::new(nx, ny).dist(c) <= r {
                    continue;
                }
            }
            cells.push((i, j));
        }
    }
    let results: Vec<CellResult> =
        cells.par_iter().map(|&(i, j)| check_cell(f, window, axes.x(i), axes.y(j), axes.dx, axes.dy, &opts)).collect();
    let mut min_gradient = f64::INFINITY;
    let mut refined = 0;
    for (r, &cell) in results.into_iter().zip(&cells) {
        match r {
            CellResult::Pass { min_gradient: g, refined: rf } => {
                min_gradient = min_gradient.min(g);
                refined += usize::from(rf);
            }
            CellResult::Fail { location, reason } => return Certificate::Inconclusive { cell, location, reason },
        }
    }
    Certificate::Pass { min_gradient, cells_checked: cells.len(), cells_refined: refined }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenbasis::EigenFamily;
    use crate::field::FnField;
    use crate::geometry::WindowProvenance;
    use crate::nodal::barrier::analysis_window;

    #[test]
    fn smooth_circle_passes() {
        let f = FnField { value: |p: Point| p.x * p.x + p.y * p.y - 1.0, gradient: |p: Point| [2.0 * p.x, 2.0 * p.y] };
        let w = Window::centered(2.0, WindowProvenance::User).unwrap();
        let c = certify_no_critical_zero(&f, &w, 64, CertifyOptions::default());
        assert!(c.passed(), "{c:?}");
    }

    #[test]
    fn crossing_is_inconclusive() {
        let f = FnField { value: |p: Point| (p.x - 0.1) * (p.y - 0.2), gradient: |p: Point| [p.y - 0.2, p.x - 0.1] };
        let w = Window::centered(1.0, WindowProvenance::User).unwrap();
        match certify_no_critical_zero(&f, &w, 64, CertifyOptions::default()) {
            Certificate::Inconclusive { location, .. } => assert!(location.dist(Point::new(0.1, 0.2)) < 0.05),
            c => panic!("{c:?}"),
        }
        let excl = CertifyOptions { exclude: Some((Point::new(0.1, 0.2), 0.1)), ..Default::default() };
        assert!(certify_no_critical_zero(&f, &w, 64, excl).passed());
    }

    #[test]
    fn stern_regular_passes_and_diagonal_case_fails() {
        let f = EigenFamily::stern(5, 0.1).unwrap();
        let w = analysis_window(5, 0.1, 1.0).unwrap();
        assert!(certify_no_critical_zero(&f.nodal(), &w, 256, CertifyOptions::default()).passed());
        let f = EigenFamily::stern(5, 3.0 * std::f64::consts::FRAC_PI_4).unwrap();
        let z = crate::specfun::hermite_zeros(4).zeros;
        match certify_no_critical_zero(&f.nodal(), &w, 256, CertifyOptions::default()) {
            Certificate::Inconclusive { location, .. } => {
                assert!(z.iter().any(|&t| location.dist(Point::new(t, t)) < 0.1), "{location:?}")
            }
            c => panic!("{c:?}"),
        }
    }
}
