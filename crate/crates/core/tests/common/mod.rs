//! Independent counting oracle: dense point sampling plus a 4-connected
//! breadth-first flood fill on strict signs. It shares no code with the
//! library's carving, singular-point handling or union-find. Neighbours
//! join only if the segment between them keeps the same sign at 32 interior
//! points, which keeps
//! opposite sectors of an exact crossing apart.
#![allow(dead_code)]

use std::collections::VecDeque;

pub fn flood_fill_count(f: impl Fn(f64, f64) -> f64, half: f64, n: usize) -> usize {
    // Offsets unrelated to the library grid so samples avoid the axes.
    let h = 2.0 * half / n as f64;
    let xs: Vec<f64> = (0..n).map(|i| -half + (i as f64 + 0.3712) * h).collect();
    let ys: Vec<f64> = (0..n).map(|j| -half + (j as f64 + 0.2847) * h).collect();
    let sign: Vec<i8> = (0..n * n)
        .map(|k| {
            let v = f(xs[k % n], ys[k / n]);
            if v > 0.0 {
                1
            } else if v < 0.0 {
                -1
            } else {
                0
            }
        })
        .collect();
    let mut seen = vec![false; n * n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n * n {
        if seen[start] || sign[start] == 0 {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(k) = queue.pop_front() {
            let (i, j) = (k % n, k / n);
            let mut visit = |q: usize| {
                if !seen[q]
                    && sign[q] == sign[k]
                    && same_sign_along(&f, (xs[i], ys[j]), (xs[q % n], ys[q / n]), sign[k])
                {
                    seen[q] = true;
                    queue.push_back(q);
                }
            };
            if i > 0 {
                visit(k - 1);
            }
            if i + 1 < n {
                visit(k + 1);
            }
            if j > 0 {
                visit(k - n);
            }
            if j + 1 < n {
                visit(k + n);
            }
        }
    }
    count
}

fn same_sign_along(f: &impl Fn(f64, f64) -> f64, a: (f64, f64), b: (f64, f64), s: i8) -> bool {
    (1..=32).all(|k| {
        let t = k as f64 / 33.0;
        f(a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)) * f64::from(s) > 0.0
    })
}
