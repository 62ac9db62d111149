use rayon::prelude::*;
use std::collections::BTreeMap;

use super::singular::{detect_singular_points, SingularPoint};
use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::geometry::{Point, Window};

/// Fractional offsets of the first sample from the window edge, in units of
/// the spacing. They differ per axis and are irrational so that symmetric
/// nodal lines (axes, diagonals, lattice lines) do not hit samples exactly.
pub const GRID_OFFSET_X: f64 = 0.061_803_398_874_989_48;
pub const GRID_OFFSET_Y: f64 = 0.041_421_356_237_309_5;

/// Sample coordinates `x_i = x_min + (i + o_x) dx` with `dx = width / nx`.
/// The margins are unequal on purpose: a grid symmetric about the window
/// center would put a sample on the center lines for odd counts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridAxes {
    pub nx: usize,
    pub ny: usize,
    pub x0: f64,
    pub y0: f64,
    pub dx: f64,
    pub dy: f64,
}

impl GridAxes {
    pub fn new(window: &Window, nx: usize, ny: usize) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(invalid(format!("grid needs at least 2x2 samples, got {nx}x{ny}")));
        }
        let dx = window.width() / nx as f64;
        let dy = window.height() / ny as f64;
        Ok(GridAxes { nx, ny, x0: window.x_min + GRID_OFFSET_X * dx, y0: window.y_min + GRID_OFFSET_Y * dy, dx, dy })
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.dx
    }

    #[inline]
    pub fn y(&self, j: usize) -> f64 {
        self.y0 + j as f64 * self.dy
    }

    #[inline]
    pub fn point(&self, i: usize, j: usize) -> Point {
        Point::new(self.x(i), self.y(j))
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn spacing(&self) -> f64 {
        self.dx.max(self.dy)
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    /// Lower-left sample of the cell containing `p`, clamped to the grid.
    pub fn cell_of(&self, p: Point) -> (usize, usize) {
        let fi = ((p.x - self.x0) / self.dx).floor().clamp(0.0, (self.nx - 2) as f64);
        let fj = ((p.y - self.y0) / self.dy).floor().clamp(0.0, (self.ny - 2) as f64);
        (fi as usize, fj as usize)
    }
}

/// Samples of a field on a window, together with the resolved saddle cells
/// and the singular points found near the zero set.
#[derive(Clone, Debug)]
pub struct SignGrid {
    pub window: Window,
    pub axes: GridAxes,
    /// Row-major: `values[j * nx + i]`.
    pub values: Vec<f64>,
    /// Saddle cells (alternating corner signs) keyed by lower-left sample
    /// index, with the value used to disambiguate them.
    pub saddle_centers: BTreeMap<usize, f64>,
    /// Saddle cells whose center value stayed at zero after refinement.
    pub ambiguous_cells: Vec<usize>,
    pub singular: Vec<SingularPoint>,
    /// `0` for ordinary samples, `s + 1` for samples inside the carve disk
    /// of singular point `s`.
    pub carved: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleOptions {
    /// Locate crossings and near-crossings and apply the local surgery.
    pub detect_singular: bool,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { detect_singular: true }
    }
}

#[inline]
pub(crate) fn sign_of(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

impl SignGrid {
    pub fn nx(&self) -> usize {
        self.axes.nx
    }

    pub fn ny(&self) -> usize {
        self.axes.ny
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[self.axes.idx(i, j)]
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        sign_of(self.value(i, j))
    }

    /// The derived ternary sign table, row-major.
    pub fn signs(&self) -> Vec<i8> {
        self.values.iter().map(|&v| sign_of(v)).collect()
    }

    pub fn zero_samples(&self) -> usize {
        self.values.iter().filter(|&&v| v == 0.0).count()
    }

    pub fn is_carved(&self, idx: usize) -> bool {
        self.carved[idx] != 0
    }

    /// Number of cells whose corners do not all share one strict sign.
    pub fn sign_change_cells(&self) -> usize {
        let (nx, ny) = (self.nx(), self.ny());
        let mut count = 0;
        for j in 0..ny - 1 {
            for i in 0..nx - 1 {
                let s = [self.sign(i, j), self.sign(i + 1, j), self.sign(i, j + 1), self.sign(i + 1, j + 1)];
                if !(s.iter().all(|&v| v == 1) || s.iter().all(|&v| v == -1)) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Samples `f` on an `nx × ny` grid with singular-point detection.
pub fn sample_grid<F: Field>(f: &F, window: &Window, nx: usize, ny: usize) -> Result<SignGrid> {
    sample_grid_with(f, window, nx, ny, SampleOptions::default())
}

pub fn sample_grid_with<F: Field>(
    f: &F,
    window: &Window,
    nx: usize,
    ny: usize,
    opts: SampleOptions,
) -> Result<SignGrid> {
    let axes = GridAxes::new(window, nx, ny)?;
    let mut values = vec![0.0; nx * ny];
    values.par_chunks_mut(nx).enumerate().for_each(|(j, row)| {
        for (i, v) in row.iter_mut().enumerate() {
            *v = f.value(axes.point(i, j));
        }
    });
    if let Some(k) = values.iter().position(|v| !v.is_finite()) {
        let p = axes.point(k % nx, k / nx);
        return Err(Error::NonFinite { x: p.x, y: p.y });
    }

    let mut saddle_cells = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let a = sign_of(values[axes.idx(i, j)]);
            let b = sign_of(values[axes.idx(i + 1, j)]);
            let c = sign_of(values[axes.idx(i + 1, j + 1)]);
            let d = sign_of(values[axes.idx(i, j + 1)]);
            if a != 0 && a == c && b == d && a == -b {
                saddle_cells.push(axes.idx(i, j));
            }
        }
    }
    let centers: Vec<(usize, f64)> = saddle_cells
        .par_iter()
        .map(|&k| {
            let (i, j) = (k % nx, k / nx);
            let c = Point::new(axes.x(i) + 0.5 * axes.dx, axes.y(j) + 0.5 * axes.dy);
            let corner_scale = [values[k], values[k + 1], values[k + nx], values[k + nx + 1]]
                .iter()
                .fold(0.0f64, |m, v| m.max(v.abs()));
            let mut v = f.value(c);
            if v.abs() <= 1e-12 * corner_scale {
                let (qx, qy) = (0.25 * axes.dx, 0.25 * axes.dy);
                v = [(qx, qy), (-qx, qy), (qx, -qy), (-qx, -qy)]
                    .iter()
                    .map(|&(ox, oy)| f.value(c.offset(ox, oy)))
                    .sum();
            }
            (k, v)
        })
        .collect();
    let ambiguous_cells = centers.iter().filter(|(_, v)| *v == 0.0).map(|(k, _)| *k).collect();
    let saddle_centers = centers.into_iter().collect();

    let (singular, carved) = if opts.detect_singular {
        detect_singular_points(f, window, &axes, &values)
    } else {
        (Vec::new(), vec![0; nx * ny])
    };

    Ok(SignGrid { window: *window, axes, values, saddle_centers, ambiguous_cells, singular, carved })
}
