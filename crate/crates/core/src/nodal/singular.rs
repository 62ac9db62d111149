//! Crossings and near-crossings of the zero set.
//!
//! A grid cannot decide how nodal arcs connect where they pass closer than
//! about one cell. Such places are critical points of the field close to
//! the zero set. We locate them with Newton's method on the gradient and
//! classify them by counting sign changes on small circles:
//!
//! * a *crossing* has at least four sign changes on a circle far below the
//!   grid scale: the field vanishes there and arcs really meet;
//! * a *saddle* has at least four sign changes only at grid scale: the
//!   arcs are separated and the regions of the saddle's sign are joined.
//!
//! Samples inside a disk around each point are carved out. Domain counting
//! and curve extraction then rebuild the local topology from the
//! classification instead of from the samples.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::{sign_of, GridAxes};
use crate::field::{newton_critical_point, sign_changes_on_circle, Field};
use crate::geometry::{Point, Window};

/// Angular resolution of the circle tests.
const CIRCLE_SAMPLES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SingularKind {
    /// Nodal arcs meet at the point.
    Crossing,
    /// Nodal arcs pass by; regions of sign `+1` (or `-1`) are joined.
    Saddle { joined_sign: i8 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub location: Point,
    pub kind: SingularKind,
    /// Sign changes counted on the classifying circle.
    pub arms: usize,
    pub carve_radius: f64,
    pub value: f64,
}

/// Finds and classifies singular points near the sign changes of `values`.
/// Returns the points and the carve map (see [`super::SignGrid::carved`]).
pub fn detect_singular_points<F: Field>(
    f: &F,
    window: &Window,
    axes: &GridAxes,
    values: &[f64],
) -> (Vec<SingularPoint>, Vec<u32>) {
    let (nx, ny) = (axes.nx, axes.ny);
    let (cx, cy) = (nx - 1, ny - 1);
    let h = axes.spacing();

    let grads: Vec<[f64; 2]> = {
        let mut g = vec![[0.0; 2]; nx * ny];
        g.par_chunks_mut(nx).enumerate().for_each(|(j, row)| {
            for (i, v) in row.iter_mut().enumerate() {
                *v = f.gradient(axes.point(i, j));
            }
        });
        g
    };

    let corners = |i: usize, j: usize| [axes.idx(i, j), axes.idx(i + 1, j), axes.idx(i, j + 1), axes.idx(i + 1, j + 1)];
    let mut changes = vec![false; cx * cy];
    for j in 0..cy {
        for i in 0..cx {
            let s = corners(i, j).map(|k| sign_of(values[k]));
            changes[j * cx + i] = !(s.iter().all(|&v| v == 1) || s.iter().all(|&v| v == -1));
        }
    }
    let straddles = |vals: [f64; 4]| {
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        lo <= 0.0 && hi >= 0.0
    };
    let mut candidates = Vec::new();
    for j in 0..cy {
        for i in 0..cx {
            let near = (j.saturating_sub(1)..=(j + 1).min(cy - 1))
                .any(|jj| (i.saturating_sub(1)..=(i + 1).min(cx - 1)).any(|ii| changes[jj * cx + ii]));
            if !near {
                continue;
            }
            let c = corners(i, j);
            if straddles(c.map(|k| grads[k][0])) && straddles(c.map(|k| grads[k][1])) {
                candidates.push((i, j));
            }
        }
    }

    let max_travel = 2.0 * axes.cell_diagonal();
    let found: Vec<Option<Point>> = candidates
        .par_iter()
        .map(|&(i, j)| {
            let start = Point::new(axes.x(i) + 0.5 * axes.dx, axes.y(j) + 0.5 * axes.dy);
            newton_critical_point(f, start, h, max_travel).filter(|p| window.contains(*p))
        })
        .collect();

    let mut unique: Vec<Point> = Vec::new();
    for p in found.into_iter().flatten() {
        if unique.iter().all(|q| q.dist(p) > 0.5 * h) {
            unique.push(p);
        }
    }

    let tiny = 1e-6 * window.diagonal();
    let classified: Vec<Option<SingularPoint>> = unique
        .par_iter()
        .map(|&p| {
            let value = f.value(p);
            let z = sign_changes_on_circle(f, p, tiny, CIRCLE_SAMPLES);
            if z >= 4 {
                return Some(SingularPoint {
                    location: p,
                    kind: SingularKind::Crossing,
                    arms: z,
                    carve_radius: 1.5f64.max(0.4 * z as f64) * h,
                    value,
                });
            }
            let z = sign_changes_on_circle(f, p, 1.5 * h, CIRCLE_SAMPLES);
            let s = sign_of(value);
            (z >= 4 && s != 0).then(|| SingularPoint {
                location: p,
                kind: SingularKind::Saddle { joined_sign: s },
                arms: z,
                carve_radius: 1.5f64.max(0.4 * z as f64) * h,
                value,
            })
        })
        .collect();
    let singular: Vec<SingularPoint> = classified.into_iter().flatten().collect();

    let mut carved = vec![0u32; nx * ny];
    let mut best = vec![f64::INFINITY; nx * ny];
    for (s, sp) in singular.iter().enumerate() {
        let r = sp.carve_radius;
        let p = sp.location;
        let i_lo = (((p.x - r - axes.x0) / axes.dx).floor().max(0.0)) as usize;
        let i_hi = (((p.x + r - axes.x0) / axes.dx).ceil().max(0.0) as usize).min(nx - 1);
        let j_lo = (((p.y - r - axes.y0) / axes.dy).floor().max(0.0)) as usize;
        let j_hi = (((p.y + r - axes.y0) / axes.dy).ceil().max(0.0) as usize).min(ny - 1);
        for j in j_lo..=j_hi {
            for i in i_lo..=i_hi {
                let d = axes.point(i, j).dist(p);
                let k = axes.idx(i, j);
                if d <= r && d < best[k] {
                    best[k] = d;
                    carved[k] = s as u32 + 1;
                }
            }
        }
    }
    (singular, carved)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FnField;
    use crate::geometry::WindowProvenance;

    fn run<F: Field>(f: &F, half: f64, n: usize) -> Vec<SingularPoint> {
        let w = Window::centered(half, WindowProvenance::User).unwrap();
        let axes = GridAxes::new(&w, n, n).unwrap();
        let vals: Vec<f64> = (0..n * n).map(|k| f.value(axes.point(k % n, k / n))).collect();
        detect_singular_points(f, &w, &axes, &vals).0
    }

    #[test]
    fn exact_crossing_is_found() {
        let f = FnField { value: |p: Point| (p.x - 0.1) * (p.y + 0.2), gradient: |p: Point| [p.y + 0.2, p.x - 0.1] };
        let s = run(&f, 1.0, 64);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SingularKind::Crossing);
        assert_eq!(s[0].arms, 4);
        assert!(s[0].location.dist(Point::new(0.1, -0.2)) < 1e-12);
    }

    #[test]
    fn near_crossing_is_a_saddle() {
        // Hyperbola branches 0.01 apart, well under the spacing 2/63.
        let f = FnField { value: |p: Point| p.x * p.y - 1e-5, gradient: |p: Point| [p.y, p.x] };
        let s = run(&f, 1.0, 64);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SingularKind::Saddle { joined_sign: -1 });
    }

    #[test]
    fn far_saddle_is_ignored() {
        let f = FnField { value: |p: Point| p.x * p.y - 0.25, gradient: |p: Point| [p.y, p.x] };
        assert!(run(&f, 1.0, 64).is_empty());
    }
}
