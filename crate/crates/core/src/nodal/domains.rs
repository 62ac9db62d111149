//! Nodal domains as connected same-sign sample regions.

use std::collections::BTreeMap;

use super::grid::{sign_of, SignGrid};
use super::singular::SingularKind;
use super::union_find::UnionFind;

pub const NO_DOMAIN: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq)]
pub struct DomainLabels {
    /// Dense domain label per sample, [`NO_DOMAIN`] for exact zeros and
    /// carved samples.
    pub labels: Vec<u32>,
    pub count: usize,
    /// Sign changes along the window boundary cycle.
    pub boundary_exits: usize,
}

/// Row-major sample indices around the window boundary, counterclockwise
/// from the lower-left corner.
pub(crate) fn boundary_cycle(nx: usize, ny: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(2 * (nx + ny));
    out.extend(0..nx);
    out.extend((1..ny).map(|j| j * nx + nx - 1));
    out.extend((0..nx - 1).rev().map(|i| (ny - 1) * nx + i));
    out.extend((1..ny - 1).rev().map(|j| j * nx));
    out
}

/// Labels the nodal domains of a sampled field.
///
/// Same-sign 4-neighbours are joined; a saddle cell joins its diagonal of
/// the center's sign; carved samples belong to no domain and a saddle-type
/// singular point joins the samples of its sign in a ring around its disk.
/// Along the window boundary, same-sign runs separated only by exact zeros
/// are merged; runs between consecutive sign changes are already connected
/// along the boundary row, so window domains match plane domains whenever
/// the zero set does not re-enter the window.
pub fn label_domains(g: &SignGrid) -> DomainLabels {
    let (nx, ny) = (g.nx(), g.ny());
    let ax = g.axes;
    let n = nx * ny;
    let usable = |k: usize| g.carved[k] == 0 && g.values[k] != 0.0;
    let sgn = |k: usize| sign_of(g.values[k]);
    let mut uf = UnionFind::new(n);

    for j in 0..ny {
        for i in 0..nx {
            let k = ax.idx(i, j);
            if !usable(k) {
                continue;
            }
            if i + 1 < nx && usable(k + 1) && sgn(k + 1) == sgn(k) {
                uf.union(k, k + 1);
            }
            if j + 1 < ny && usable(k + nx) && sgn(k + nx) == sgn(k) {
                uf.union(k, k + nx);
            }
        }
    }

    for (&k, &center) in &g.saddle_centers {
        let corners = [k, k + 1, k + nx, k + nx + 1];
        if corners.iter().any(|&c| g.carved[c] != 0) {
            continue;
        }
        let s = sign_of(center);
        if s == 0 {
            continue;
        }
        if sgn(k) == s {
            uf.union(k, k + nx + 1);
        } else {
            uf.union(k + 1, k + nx);
        }
    }

    let h = ax.spacing();
    for sp in &g.singular {
        let SingularKind::Saddle { joined_sign } = sp.kind else { continue };
        let (r_in, r_out) = (sp.carve_radius, sp.carve_radius + 2.0 * h);
        let p = sp.location;
        let i_lo = (((p.x - r_out - ax.x0) / ax.dx).floor().max(0.0)) as usize;
        let i_hi = (((p.x + r_out - ax.x0) / ax.dx).ceil().max(0.0) as usize).min(nx - 1);
        let j_lo = (((p.y - r_out - ax.y0) / ax.dy).floor().max(0.0)) as usize;
        let j_hi = (((p.y + r_out - ax.y0) / ax.dy).ceil().max(0.0) as usize).min(ny - 1);
        let mut first: Option<usize> = None;
        for j in j_lo..=j_hi {
            for i in i_lo..=i_hi {
                let k = ax.idx(i, j);
                let d = ax.point(i, j).dist(p);
                if d > r_in && d <= r_out && usable(k) && sgn(k) == joined_sign {
                    match first {
                        None => first = Some(k),
                        Some(f) => {
                            uf.union(f, k);
                        }
                    }
                }
            }
        }
    }

    let cycle = boundary_cycle(nx, ny);
    let ring: Vec<usize> = cycle.into_iter().filter(|&k| g.carved[k] == 0).collect();
    let mut exits = 0;
    let mut last: Option<usize> = None;
    let mut first: Option<usize> = None;
    for &k in &ring {
        if g.values[k] == 0.0 {
            continue;
        }
        if let Some(l) = last {
            if sgn(l) == sgn(k) {
                uf.union(l, k);
            } else {
                exits += 1;
            }
        } else {
            first = Some(k);
        }
        last = Some(k);
    }
    if let (Some(f), Some(l)) = (first, last) {
        if f != l && sgn(f) != sgn(l) {
            exits += 1;
        }
    }

    let mut dense: BTreeMap<usize, u32> = BTreeMap::new();
    let mut labels = vec![NO_DOMAIN; n];
    for (k, label) in labels.iter_mut().enumerate() {
        if usable(k) {
            let r = uf.find(k);
            let next = dense.len() as u32;
            *label = *dense.entry(r).or_insert(next);
        }
    }
    DomainLabels { labels, count: dense.len(), boundary_exits: exits }
}

pub fn count_domains(g: &SignGrid) -> usize {
    label_domains(g).count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FnField;
    use crate::geometry::{Point, Window, WindowProvenance};
    use crate::nodal::grid::sample_grid;

    fn grid_of<V, G>(f: FnField<V, G>, half: f64, n: usize) -> SignGrid
    where
        V: Fn(Point) -> f64 + Sync,
        G: Fn(Point) -> [f64; 2] + Sync,
    {
        sample_grid(&f, &Window::centered(half, WindowProvenance::User).unwrap(), n, n).unwrap()
    }

    #[test]
    fn positive_function_has_one_domain() {
        let g = grid_of(FnField { value: |p: Point| 1.0 + p.x * p.x, gradient: |p: Point| [2.0 * p.x, 0.0] }, 2.0, 30);
        let d = label_domains(&g);
        assert_eq!(d.count, 1);
        assert_eq!(d.boundary_exits, 0);
    }

    #[test]
    fn crossing_lines_give_four() {
        let g = grid_of(FnField { value: |p: Point| p.x * p.y, gradient: |p: Point| [p.y, p.x] }, 1.0, 41);
        let d = label_domains(&g);
        assert_eq!(d.count, 4);
        assert_eq!(d.boundary_exits, 4);
    }

    #[test]
    fn near_crossing_gives_three() {
        let g = grid_of(FnField { value: |p: Point| p.x * p.y + 1e-7, gradient: |p: Point| [p.y, p.x] }, 1.0, 41);
        assert_eq!(count_domains(&g), 3);
    }

    #[test]
    fn boundary_cycle_visits_each_edge_sample_once() {
        let c = boundary_cycle(5, 4);
        assert_eq!(c.len(), 2 * (5 + 4) - 4);
        let mut s = c.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), c.len());
    }
}
