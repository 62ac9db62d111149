//! Structural checks of an extracted zero set of `cosθ H_n(x) + sinθ H_n(y)`
//! against the sign pattern of `H_n(x) H_n(y)`.

use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_4;

use super::march::NodalCurveSet;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::specfun::{hermite_pair, hermite_zeros};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A lattice point `(t_{n,i}, t_{n,j})` is farther than one cell from the curve.
    LatticeMissed,
    /// A vertex sits where `H_n(x) H_n(y) > 0`, away from the lattice.
    PositiveRegion,
    /// Near a lattice point the curve enters a positive quadrant or misses a
    /// negative one (tangent parallel to an axis).
    Tangent,
    /// A segment crosses a line `x = t_{n,i}` or `y = t_{n,j}` away from the lattice.
    LineCrossing,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Point,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub pass: bool,
    pub lattice_points: usize,
    pub vertices_checked: usize,
    pub violations: Vec<Violation>,
}

fn check_range(theta: f64) -> Result<()> {
    if theta > 0.0 && theta <= FRAC_PI_4 + 1e-15 {
        Ok(())
    } else {
        Err(Error::ThetaOutOfRange { theta })
    }
}

/// Runs the lattice, sign, tangent and line-crossing checks.
pub fn checkerboard_check(n: u32, theta: f64, c: &NodalCurveSet) -> Result<CheckReport> {
    check_range(theta)?;
    if n == 0 {
        return Err(crate::error::invalid("checkerboard needs n >= 1"));
    }
    let t = hermite_zeros(n).zeros;
    let d = c.cell_diagonal;
    let w = &c.window;
    let mut violations = Vec::new();

    let lattice: Vec<Point> = t
        .iter()
        .flat_map(|&x| t.iter().map(move |&y| Point::new(x, y)))
        .filter(|p| p.x > w.x_min + d && p.x < w.x_max - d && p.y > w.y_min + d && p.y < w.y_max - d)
        .collect();
    let near_lattice = |p: Point| t.iter().any(|&x| (p.x - x).abs() <= d) && t.iter().any(|&y| (p.y - y).abs() <= d);

    for &p in &lattice {
        if c.distance_to(p) > d {
            violations.push(Violation { kind: ViolationKind::LatticeMissed, location: p });
        }
    }

    let scale = 2.0 * f64::from(n);
    let mut vertices = 0;
    for v in c.vertices() {
        vertices += 1;
        let (hx, hx1) = hermite_pair(n, v.x);
        let (hy, hy1) = hermite_pair(n, v.y);
        let q = hx * hy;
        let gq = (scale * hx1 * hy).hypot(scale * hx * hy1);
        if q > gq * d && !near_lattice(v) {
            violations.push(Violation { kind: ViolationKind::PositiveRegion, location: v });
        }
    }

    // Quadrants around each lattice point: the curve must pass through the
    // two where the product is negative and stay out of the other two.
    let h = d / std::f64::consts::SQRT_2;
    for &p in &lattice {
        let sx = hermite_pair(n, p.x).1.signum();
        let sy = hermite_pair(n, p.y).1.signum();
        let mut white = [false; 2];
        let mut bad = None;
        for v in c.vertices() {
            let (dx, dy) = (v.x - p.x, v.y - p.y);
            if dx.hypot(dy) > 2.0 * d || dx == 0.0 || dy == 0.0 {
                continue;
            }
            if sx * sy * dx * dy < 0.0 {
                white[usize::from(dx > 0.0)] = true;
            } else if dx.abs() > 0.1 * h && dy.abs() > 0.1 * h {
                bad = Some(v);
            }
        }
        if let Some(v) = bad {
            violations.push(Violation { kind: ViolationKind::Tangent, location: v });
        } else if !(white[0] && white[1]) {
            violations.push(Violation { kind: ViolationKind::Tangent, location: p });
        }
    }

    // Where the curve is nearly parallel to a line, the crossing point
    // along the line moves by the slope times the interpolation error, so
    // the lattice neighbourhood is stretched by that factor.
    let (cs, sn) = (theta.cos(), theta.sin());
    let slope = |x: f64, y: f64| (cs * hermite_pair(n, x).1 / (sn * hermite_pair(n, y).1)).abs();
    let nearest = |v: f64| t.iter().copied().min_by(|a, b| (a - v).abs().total_cmp(&(b - v).abs())).unwrap_or(0.0);
    for s in &c.segments {
        let [a, b] = *s;
        for &z in &t {
            if (a.x - z) * (b.x - z) < 0.0 {
                let y = a.y + (b.y - a.y) * (z - a.x) / (b.x - a.x);
                let tj = nearest(y);
                if (y - tj).abs() > d * (1.0 + slope(z, tj)) {
                    violations.push(Violation { kind: ViolationKind::LineCrossing, location: Point::new(z, y) });
                }
            }
            if (a.y - z) * (b.y - z) < 0.0 {
                let x = a.x + (b.x - a.x) * (z - a.y) / (b.y - a.y);
                let ti = nearest(x);
                if (x - ti).abs() > d * (1.0 + 1.0 / slope(ti, z)) {
                    violations.push(Violation { kind: ViolationKind::LineCrossing, location: Point::new(x, z) });
                }
            }
        }
    }

    Ok(CheckReport {
        pass: violations.is_empty(),
        lattice_points: lattice.len(),
        vertices_checked: vertices,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoteReport {
    pub pass: bool,
    pub expected_slope: f64,
    /// Fitted slopes of the arc leaving to the right and to the left.
    pub slopes: [Option<f64>; 2],
    /// Largest distance from a reflected right-arc vertex to the curve.
    pub symmetry_error: f64,
    pub tolerance: f64,
    pub reason: Option<String>,
}

fn ls_slope(pts: &[Point]) -> Option<f64> {
    if pts.len() < 3 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.x).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.y).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.x - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.x - mx) * (p.y - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Fits the slope of the escaping arcs over the outer 20% of the window
/// (by max-norm radius) and compares with `-(cot θ)^{1/n}`.
pub fn asymptote_check(n: u32, theta: f64, c: &NodalCurveSet) -> Result<AsymptoteReport> {
    check_range(theta)?;
    if n.is_multiple_of(2) {
        return Err(crate::error::invalid("asymptote check needs odd n"));
    }
    let expected = -(1.0 / theta.tan()).powf(1.0 / f64::from(n));
    let w = &c.window;
    let half = (w.width().min(w.height())) / 2.0;
    let ctr = w.center();
    let outer = |p: &Point| (p.x - ctr.x).abs().max((p.y - ctr.y).abs()) >= 0.8 * half;
    let (right, left): (Vec<Point>, Vec<Point>) = c.vertices().filter(outer).partition(|p| p.x > ctr.x);
    let slopes = [ls_slope(&right), ls_slope(&left)];
    let tolerance = 0.05;
    let symmetry_error =
        right.iter().map(|&p| c.distance_to(Point::new(2.0 * ctr.x - p.x, 2.0 * ctr.y - p.y))).fold(0.0, f64::max);
    let mut reason = None;
    for (s, side) in slopes.iter().zip(["right", "left"]) {
        match s {
            None => reason = Some(format!("no escaping arc on the {side}")),
            Some(m) if ((m - expected) / expected).abs() > tolerance => {
                reason = Some(format!("{side} slope {m:.6} differs from {expected:.6}"))
            }
            _ => {}
        }
    }
    if reason.is_none() && symmetry_error > 2.0 * c.cell_diagonal {
        reason = Some(format!("arcs not point symmetric (error {symmetry_error:.3e})"));
    }
    Ok(AsymptoteReport { pass: reason.is_none(), expected_slope: expected, slopes, symmetry_error, tolerance, reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenbasis::EigenFamily;
    use crate::geometry::{Window, WindowProvenance};
    use crate::nodal::barrier::analysis_window;
    use crate::nodal::grid::sample_grid;
    use crate::nodal::march::extract_nodal;

    fn curves(n: u32, theta: f64, window: &Window, count: usize) -> NodalCurveSet {
        let f = EigenFamily::stern(n, theta).unwrap();
        extract_nodal(&sample_grid(&f.nodal(), window, count, count).unwrap())
    }

    #[test]
    fn stern_seven_passes() {
        for theta in [0.2, 0.3] {
            let w = analysis_window(7, theta, 1.0).unwrap();
            let r = checkerboard_check(7, theta, &curves(7, theta, &w, 512)).unwrap();
            assert!(r.pass, "{theta}: {:?}", &r.violations[..r.violations.len().min(5)]);
            assert_eq!(r.lattice_points, 49);
        }
    }

    #[test]
    fn stern_three_passes_across_range() {
        for k in 1..=12 {
            let theta = FRAC_PI_4 * k as f64 / 13.0;
            let w = analysis_window(3, theta, 1.0).unwrap();
            let r = checkerboard_check(3, theta, &curves(3, theta, &w, 256)).unwrap();
            assert!(r.pass, "{theta}: {:?}", r.violations);
        }
    }

    #[test]
    fn corrupted_curve_fails_at_reported_cell() {
        let theta = 0.3;
        let w = analysis_window(5, theta, 1.0).unwrap();
        let mut c = curves(5, theta, &w, 256);
        let bogus = Point::new(0.3, 0.3);
        // H_5 is positive on (0, t_{5,3}) so the product is positive there.
        assert!(hermite_pair(5, 0.3).0 * hermite_pair(5, 0.3).0 > 0.0);
        c.polylines[0].points.push(bogus);
        let r = checkerboard_check(5, theta, &c).unwrap();
        assert!(!r.pass);
        assert!(r.violations.iter().any(|v| v.kind == ViolationKind::PositiveRegion && v.location == bogus));
    }

    #[test]
    fn rejects_theta_outside_range() {
        let w = Window::centered(3.0, WindowProvenance::User).unwrap();
        let c = curves(3, 1.0, &w, 32);
        assert!(checkerboard_check(3, 1.0, &c).is_err());
        assert!(asymptote_check(3, 0.0, &c).is_err());
    }

    #[test]
    fn asymptote_slopes() {
        for (n, theta) in [(7, 0.3), (3, FRAC_PI_4), (5, 0.1)] {
            let w = Window::centered(30.0, WindowProvenance::User).unwrap();
            let r = asymptote_check(n, theta, &curves(n, theta, &w, 512)).unwrap();
            assert!(r.pass, "{n} {theta}: {r:?}");
        }
        let w = Window::centered(30.0, WindowProvenance::User).unwrap();
        let r = asymptote_check(3, FRAC_PI_4, &curves(3, FRAC_PI_4, &w, 256)).unwrap();
        assert!((r.expected_slope + 1.0).abs() < 1e-12);
    }
}
