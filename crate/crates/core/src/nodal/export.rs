//! Deterministic JSON and SVG renderings of a [`NodalCurveSet`].

use serde_json::{json, Value};
use std::fmt::Write;

use super::march::NodalCurveSet;
use crate::geometry::Point;

/// Rounds to 1e-6 so JSON output does not depend on the last bits.
pub fn round6(v: f64) -> f64 {
    let r = (v * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn pt(p: Point) -> Value {
    json!([round6(p.x), round6(p.y)])
}

/// `{window, components, arc_components, crossings, polylines: [{component, closed, points}]}`
/// with keys in sorted order.
pub fn curves_to_json(c: &NodalCurveSet) -> Value {
    let w = &c.window;
    json!({
        "window": {
            "x_min": round6(w.x_min), "x_max": round6(w.x_max),
            "y_min": round6(w.y_min), "y_max": round6(w.y_max),
        },
        "components": c.components,
        "arc_components": c.arc_components,
        "crossings": c.crossings.iter().copied().map(pt).collect::<Vec<_>>(),
        "polylines": c.polylines.iter().map(|l| json!({
            "component": l.component,
            "closed": l.closed,
            "points": l.points.iter().copied().map(pt).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Two decimals, never `-0.00`.
pub fn fmt2(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// Family of axis-parallel reference lines.
#[derive(Clone, Debug, PartialEq)]
pub struct GuideLines {
    pub vertical: Vec<f64>,
    pub horizontal: Vec<f64>,
    pub stroke: String,
    /// Width relative to the window diagonal.
    pub width: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Rendered size of the longer side, in pixels.
    pub pixels: u32,
    pub guides: Vec<GuideLines>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { pixels: 800, guides: Vec::new() }
    }
}

impl GuideLines {
    /// The grid `x = t_i`, `y = t_j` drawn thin and black.
    pub fn thin(ts: &[f64]) -> Self {
        GuideLines { vertical: ts.to_vec(), horizontal: ts.to_vec(), stroke: "black".into(), width: 0.0008 }
    }

    pub fn grey(ts: &[f64]) -> Self {
        GuideLines { vertical: ts.to_vec(), horizontal: ts.to_vec(), stroke: "#999999".into(), width: 0.0008 }
    }
}

/// SVG whose viewBox is the computation window (y flipped so it points
/// up), with one path per connected component.
pub fn curves_to_svg(c: &NodalCurveSet, opts: &SvgOptions) -> String {
    let w = &c.window;
    let (width, height) = (w.width(), w.height());
    let px = f64::from(opts.pixels) / width.max(height);
    let diag = w.diagonal();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        fmt2(width * px),
        fmt2(height * px),
        fmt2(w.x_min),
        fmt2(-w.y_max),
        fmt2(width),
        fmt2(height)
    );
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#,
        fmt2(w.x_min),
        fmt2(-w.y_max),
        fmt2(width),
        fmt2(height)
    );
    for g in &opts.guides {
        let _ = writeln!(s, r#"<g stroke="{}" stroke-width="{}" fill="none">"#, g.stroke, fmt_width(g.width * diag));
        for &x in g.vertical.iter().filter(|&&x| x > w.x_min && x < w.x_max) {
            let _ =
                writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, fmt2(x), fmt2(-w.y_max), fmt2(-w.y_min));
        }
        for &y in g.horizontal.iter().filter(|&&y| y > w.y_min && y < w.y_max) {
            let _ =
                writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, fmt2(-y), fmt2(w.x_min), fmt2(w.x_max));
        }
        s.push_str("</g>\n");
    }
    let ncomp = c.polylines.iter().map(|l| l.component + 1).max().unwrap_or(0);
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="{}" fill="none" stroke-linejoin="round">"#,
        fmt_width(0.004 * diag)
    );
    for comp in 0..ncomp {
        let mut d = String::new();
        for l in c.polylines.iter().filter(|l| l.component == comp) {
            for (k, p) in l.points.iter().enumerate() {
                let _ = write!(d, "{}{},{} ", if k == 0 { 'M' } else { 'L' }, fmt2(p.x), fmt2(-p.y));
            }
            if l.closed {
                d.push('Z');
            }
        }
        let _ = writeln!(s, r#"<path data-component="{comp}" d="{}"/>"#, d.trim_end());
    }
    s.push_str("</g>\n</svg>\n");
    s
}

// Stroke widths are tiny in window units, so keep more digits for them.
fn fmt_width(v: f64) -> String {
    format!("{v:.4}")
}
