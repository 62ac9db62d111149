//! Marching squares with linear interpolation, plus reconnection of the
//! curve through carved disks around singular points.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

use super::grid::SignGrid;
use super::singular::SingularKind;
use super::union_find::UnionFind;
use crate::geometry::{Point, Window};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub points: Vec<Point>,
    pub component: usize,
    pub closed: bool,
}

/// Piecewise-linear approximation of a zero set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodalCurveSet {
    pub window: Window,
    pub cell_diagonal: f64,
    pub polylines: Vec<Polyline>,
    /// Connected components of the zero set (crossing arcs joined).
    pub components: usize,
    /// Components after splitting every crossing into smooth arcs.
    pub arc_components: usize,
    pub crossings: Vec<Point>,
    /// Points where the curve leaves the window.
    pub open_ends: Vec<Point>,
    /// Every straight piece of the approximation.
    pub segments: Vec<[Point; 2]>,
    /// Singular points whose neighbourhood could not be reconnected
    /// consistently, plus unresolved saddle cells.
    pub ambiguous: usize,
}

impl NodalCurveSet {
    /// Euclidean distance from `p` to the nearest segment.
    pub fn distance_to(&self, p: Point) -> f64 {
        self.segments.iter().map(|s| point_segment_distance(p, s[0], s[1])).fold(f64::INFINITY, f64::min)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        self.polylines.iter().flat_map(|l| l.points.iter().copied())
    }
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let (vx, vy) = (b.x - a.x, b.y - a.y);
    let len2 = vx * vx + vy * vy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.x - a.x) * vx + (p.y - a.y) * vy) / len2).clamp(0.0, 1.0) };
    p.dist(Point::new(a.x + t * vx, a.y + t * vy))
}

struct EdgeIndex {
    nx: usize,
    ny: usize,
    horizontal: usize,
}

impl EdgeIndex {
    fn h(&self, i: usize, j: usize) -> usize {
        j * (self.nx - 1) + i
    }
    fn v(&self, i: usize, j: usize) -> usize {
        self.horizontal + j * self.nx + i
    }
    fn total(&self) -> usize {
        self.horizontal + self.nx * (self.ny - 1)
    }
    /// Sample endpoints `((i, j), (i', j'))` of an edge.
    fn ends(&self, e: usize) -> ((usize, usize), (usize, usize)) {
        if e < self.horizontal {
            let (j, i) = (e / (self.nx - 1), e % (self.nx - 1));
            ((i, j), (i + 1, j))
        } else {
            let k = e - self.horizontal;
            let (j, i) = (k / self.nx, k % self.nx);
            ((i, j), (i, j + 1))
        }
    }
    fn on_boundary(&self, e: usize) -> bool {
        let ((i, j), _) = self.ends(e);
        if e < self.horizontal {
            j == 0 || j == self.ny - 1
        } else {
            i == 0 || i == self.nx - 1
        }
    }
}

fn positive(v: f64) -> bool {
    v > 0.0
}

/// Extracts the zero set of a sampled field.
pub fn extract_nodal(g: &SignGrid) -> NodalCurveSet {
    let (nx, ny) = (g.nx(), g.ny());
    let ax = g.axes;
    let ei = EdgeIndex { nx, ny, horizontal: (nx - 1) * ny };
    let n_edges = ei.total();
    let n_sing = g.singular.len();

    let val = |i: usize, j: usize| g.values[ax.idx(i, j)];
    let edge_point = |e: usize| {
        let ((i, j), (i2, j2)) = ei.ends(e);
        let (va, vb) = (val(i, j), val(i2, j2));
        let t = if va == vb { 0.5 } else { (va / (va - vb)).clamp(0.0, 1.0) };
        let (a, b) = (ax.point(i, j), ax.point(i2, j2));
        Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    };
    let cell_carvers = |i: usize, j: usize| {
        [ax.idx(i, j), ax.idx(i + 1, j), ax.idx(i, j + 1), ax.idx(i + 1, j + 1)].map(|k| g.carved[k])
    };
    let skipped = |i: usize, j: usize| cell_carvers(i, j).iter().any(|&c| c != 0);

    // Per-row marching: segments between edge nodes, and stubs on edges
    // shared with a skipped cell.
    type RowOutput = (Vec<(usize, usize)>, Vec<(usize, u32)>);
    let rows: Vec<RowOutput> = (0..ny - 1)
        .into_par_iter()
        .map(|j| {
            let mut segs = Vec::new();
            let mut stubs = Vec::new();
            for i in 0..nx - 1 {
                if skipped(i, j) {
                    continue;
                }
                let c = [
                    positive(val(i, j)),
                    positive(val(i + 1, j)),
                    positive(val(i + 1, j + 1)),
                    positive(val(i, j + 1)),
                ];
                // bottom, right, top, left
                let edges = [ei.h(i, j), ei.v(i + 1, j), ei.h(i, j + 1), ei.v(i, j)];
                let cut = [c[0] != c[1], c[1] != c[2], c[3] != c[2], c[0] != c[3]];
                let active: Vec<usize> = (0..4).filter(|&k| cut[k]).collect();
                match active.len() {
                    2 => segs.push((edges[active[0]], edges[active[1]])),
                    4 => {
                        let center =
                            g.saddle_centers.get(&ax.idx(i, j)).copied().unwrap_or_else(|| {
                                0.25 * (val(i, j) + val(i + 1, j) + val(i, j + 1) + val(i + 1, j + 1))
                            });
                        let cp = positive(center);
                        // Corner k touches edges (k-1) mod 4 and k in b, r, t, l order:
                        // 00: b,l  10: b,r  11: r,t  01: t,l
                        let touch = [(0, 3), (0, 1), (1, 2), (2, 3)];
                        for (k, &(ea, eb)) in touch.iter().enumerate() {
                            if c[k] != cp {
                                segs.push((edges[ea], edges[eb]));
                            }
                        }
                    }
                    _ => {}
                }
                let neighbours = [
                    (j > 0).then(|| (i, j.wrapping_sub(1))),
                    (i + 2 < nx).then_some((i + 1, j)),
                    (j + 2 < ny).then_some((i, j + 1)),
                    (i > 0).then(|| (i.wrapping_sub(1), j)),
                ];
                for k in active {
                    if let Some((ni, nj)) = neighbours[k] {
                        if skipped(ni, nj) {
                            let p = edge_point(edges[k]);
                            let s = cell_carvers(ni, nj)
                                .iter()
                                .filter(|&&c| c != 0)
                                .map(|&c| c - 1)
                                .min_by(|&a, &b| {
                                    let da = g.singular[a as usize].location.dist(p);
                                    let db = g.singular[b as usize].location.dist(p);
                                    da.total_cmp(&db)
                                })
                                .expect("skipped cell has a carved corner");
                            stubs.push((edges[k], s));
                        }
                    }
                }
            }
            (segs, stubs)
        })
        .collect();

    let mut graph: Vec<(usize, usize)> = Vec::new();
    let mut stubs_by_point: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (segs, stubs) in rows {
        graph.extend(segs);
        for (e, s) in stubs {
            stubs_by_point.entry(s).or_default().push(e);
        }
    }

    let n_nodes = n_edges + n_sing;
    let mut uf = UnionFind::new(n_nodes);
    let mut arcs = UnionFind::new(n_nodes);
    for &(a, b) in &graph {
        uf.union(a, b);
        arcs.union(a, b);
    }
    let mut ambiguous = g.ambiguous_cells.len();
    let mut crossing_nodes = vec![false; n_nodes];

    for (&s, stub_edges) in stubs_by_point.iter_mut() {
        stub_edges.sort_unstable();
        stub_edges.dedup();
        let sp = g.singular[s as usize];
        let p = sp.location;
        let angle = |q: Point| (q.y - p.y).atan2(q.x - p.x).rem_euclid(TAU);
        let mut around: Vec<(f64, usize)> = stub_edges.iter().map(|&e| (angle(edge_point(e)), e)).collect();
        around.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let m = around.len();
        match sp.kind {
            SingularKind::Crossing => {
                let node = n_edges + s as usize;
                crossing_nodes[node] = true;
                for &(_, e) in &around {
                    graph.push((e, node));
                    uf.union(e, node);
                }
                if m.is_multiple_of(2) {
                    for k in 0..m / 2 {
                        arcs.union(around[k].1, around[k + m / 2].1);
                    }
                } else {
                    ambiguous += 1;
                }
            }
            SingularKind::Saddle { joined_sign } => {
                if m < 2 || m % 2 == 1 {
                    ambiguous += 1;
                }
                if m < 2 {
                    continue;
                }
                let joined = joined_sign > 0;
                let mut links = 0;
                for k in 0..m {
                    let (a_ang, a) = around[k];
                    let (_, b) = around[(k + 1) % m];
                    let ((i1, j1), (i2, j2)) = ei.ends(a);
                    let q1 = ax.point(i1, j1);
                    let ccw1 = (angle(q1) - a_ang).rem_euclid(TAU) < std::f64::consts::PI;
                    let wedge = if ccw1 { val(i1, j1) } else { val(i2, j2) };
                    if positive(wedge) != joined && a != b {
                        graph.push((a, b));
                        uf.union(a, b);
                        arcs.union(a, b);
                        links += 1;
                    }
                }
                if 2 * links != m {
                    ambiguous += 1;
                }
            }
        }
    }

    // Compact node ids in a deterministic order.
    let mut degree = vec![0u32; n_nodes];
    for &(a, b) in &graph {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut root_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut arc_roots: BTreeMap<usize, ()> = BTreeMap::new();
    for node in 0..n_nodes {
        if degree[node] == 0 {
            continue;
        }
        let r = uf.find(node);
        let next = root_id.len();
        root_id.entry(r).or_insert(next);
        if !crossing_nodes[node] {
            arc_roots.insert(arcs.find(node), ());
        }
    }

    let position = |node: usize| {
        if node < n_edges {
            edge_point(node)
        } else {
            g.singular[node - n_edges].location
        }
    };

    // Walk polylines: open chains between nodes of degree != 2, then cycles.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    for (k, &(a, b)) in graph.iter().enumerate() {
        incident[a].push(k);
        incident[b].push(k);
    }
    let mut used = vec![false; graph.len()];
    let mut polylines = Vec::new();
    let walk = |start: usize, first: usize, used: &mut Vec<bool>, uf: &mut UnionFind| {
        let mut pts = vec![position(start)];
        let (mut cur, mut e) = (start, first);
        loop {
            used[e] = true;
            let (a, b) = graph[e];
            let next = if a == cur { b } else { a };
            pts.push(position(next));
            cur = next;
            if degree[cur] != 2 || cur == start {
                break;
            }
            match incident[cur].iter().find(|&&k| !used[k]) {
                Some(&k) => e = k,
                None => break,
            }
        }
        let closed = cur == start && pts.len() > 2;
        let component = root_id[&uf.find(start)];
        Polyline { points: pts, component, closed }
    };
    for node in 0..n_nodes {
        if degree[node] != 0 && degree[node] != 2 {
            for &k in &incident[node] {
                if !used[k] {
                    polylines.push(walk(node, k, &mut used, &mut uf));
                }
            }
        }
    }
    for k in 0..graph.len() {
        if !used[k] {
            polylines.push(walk(graph[k].0, k, &mut used, &mut uf));
        }
    }

    let segments = graph.iter().map(|&(a, b)| [position(a), position(b)]).collect();
    let open_ends = (0..n_edges).filter(|&e| degree[e] > 0 && ei.on_boundary(e)).map(edge_point).collect();
    let crossings = g
        .singular
        .iter()
        .enumerate()
        .filter(|(s, sp)| sp.kind == SingularKind::Crossing && degree[n_edges + s] > 0)
        .map(|(_, sp)| sp.location)
        .collect();

    NodalCurveSet {
        window: g.window,
        cell_diagonal: ax.cell_diagonal(),
        polylines,
        components: root_id.len(),
        arc_components: arc_roots.len(),
        crossings,
        open_ends,
        segments,
        ambiguous,
    }
}
