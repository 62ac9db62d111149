use serde::{Deserialize, Serialize};

use super::grid::{sample_grid_with, GridAxes, SampleOptions};
use super::march::{extract_nodal, NodalCurveSet};
use crate::error::Result;
use crate::field::Field;
use crate::geometry::{Point, Window};

/// Order assumed for the grid error of the length, `L(h) = L + C h^p`.
/// Measured on smooth closed curves and on oscillator nodal sets, see the
/// tests below.
pub const RICHARDSON_ORDER: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn centered(radius: f64) -> Self {
        Disk { center: Point::ORIGIN, radius }
    }
}

/// Length of the part of segment `[a, b]` inside `disk`.
pub fn clipped_length(a: Point, b: Point, disk: Disk) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len = dx.hypot(dy);
    if len == 0.0 {
        return 0.0;
    }
    let (fx, fy) = (a.x - disk.center.x, a.y - disk.center.y);
    // |f + t d|² = R², t ∈ [0, 1]
    let qa = dx * dx + dy * dy;
    let qb = 2.0 * (fx * dx + fy * dy);
    let qc = fx * fx + fy * fy - disk.radius * disk.radius;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc <= 0.0 {
        return 0.0;
    }
    let sq = disc.sqrt();
    let t0 = ((-qb - sq) / (2.0 * qa)).max(0.0);
    let t1 = ((-qb + sq) / (2.0 * qa)).min(1.0);
    if t1 <= t0 {
        0.0
    } else {
        (t1 - t0) * len
    }
}

/// Total length of the extracted curve, optionally clipped to a disk.
pub fn nodal_length(c: &NodalCurveSet, clip: Option<Disk>) -> f64 {
    match clip {
        None => c.segments.iter().map(|s| s[0].dist(s[1])).sum(),
        Some(d) => c.segments.iter().map(|s| clipped_length(s[0], s[1], d)).sum(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LengthEstimate {
    pub coarse_count: usize,
    pub fine_count: usize,
    pub coarse: f64,
    pub fine: f64,
    pub extrapolated: f64,
    /// Ratio of coarse to fine spacing.
    pub ratio: f64,
    pub order: f64,
}

/// Plain marching-squares length at `count²` samples (no singular surgery:
/// it does not change lengths).
pub fn grid_length<F: Field>(f: &F, window: &Window, count: usize, clip: Option<Disk>) -> Result<f64> {
    let g = sample_grid_with(f, window, count, count, SampleOptions { detect_singular: false })?;
    Ok(nodal_length(&extract_nodal(&g), clip))
}

/// Length at `count` and `2 count` samples per axis combined by Richardson
/// extrapolation with [`RICHARDSON_ORDER`].
pub fn richardson_length<F: Field>(f: &F, window: &Window, count: usize, clip: Option<Disk>) -> Result<LengthEstimate> {
    let fine_count = 2 * count;
    let coarse = grid_length(f, window, count, clip)?;
    let fine = grid_length(f, window, fine_count, clip)?;
    let hc = GridAxes::new(window, count, count)?.spacing();
    let hf = GridAxes::new(window, fine_count, fine_count)?.spacing();
    let ratio = hc / hf;
    let p = RICHARDSON_ORDER;
    let extrapolated = fine + (fine - coarse) / (ratio.powf(p) - 1.0);
    Ok(LengthEstimate { coarse_count: count, fine_count, coarse, fine, extrapolated, ratio, order: p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FnField;
    use crate::geometry::WindowProvenance;
    use std::f64::consts::PI;

    fn unit_circle() -> FnField<impl Fn(Point) -> f64 + Sync, impl Fn(Point) -> [f64; 2] + Sync> {
        FnField { value: |p: Point| p.x * p.x + p.y * p.y - 1.0, gradient: |p: Point| [2.0 * p.x, 2.0 * p.y] }
    }

    #[test]
    fn clipping_geometry() {
        let d = Disk::centered(1.0);
        let a = Point::new(-3.0, 0.0);
        let b = Point::new(3.0, 0.0);
        assert!((clipped_length(a, b, d) - 2.0).abs() < 1e-14);
        assert_eq!(clipped_length(Point::new(2.0, 2.0), Point::new(3.0, 2.0), d), 0.0);
        assert!((clipped_length(Point::new(0.0, 0.0), Point::new(0.5, 0.0), d) - 0.5).abs() < 1e-15);
        assert!((clipped_length(Point::new(0.0, 0.0), Point::new(2.0, 0.0), d) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn circle_length_at_512() {
        let w = Window::centered(1.5, WindowProvenance::User).unwrap();
        let l = grid_length(&unit_circle(), &w, 512, None).unwrap();
        assert!((l / (2.0 * PI) - 1.0).abs() < 0.01, "{l}");
    }

    #[test]
    fn circle_convergence_order() {
        let w = Window::centered(1.5, WindowProvenance::User).unwrap();
        let errs: Vec<f64> = [64, 128, 256]
            .iter()
            .map(|&n| (grid_length(&unit_circle(), &w, n, None).unwrap() - 2.0 * PI).abs())
            .collect();
        let p1 = (errs[0] / errs[1]).log2();
        let p2 = (errs[1] / errs[2]).log2();
        assert!(p1 > 1.0 && p2 > 1.0, "orders {p1} {p2}");
    }

    #[test]
    fn richardson_improves_circle() {
        let w = Window::centered(1.5, WindowProvenance::User).unwrap();
        let e = richardson_length(&unit_circle(), &w, 64, None).unwrap();
        let exact = 2.0 * PI;
        assert!((e.extrapolated - exact).abs() < (e.fine - exact).abs());
    }

    #[test]
    fn diameter_chord() {
        let f = FnField { value: |p: Point| p.x - p.y, gradient: |_p: Point| [1.0, -1.0] };
        let w = Window::centered(3.0, WindowProvenance::User).unwrap();
        let l = grid_length(&f, &w, 200, Some(Disk::centered(2.0))).unwrap();
        assert!((l - 4.0).abs() < 0.04, "{l}");
    }
}
