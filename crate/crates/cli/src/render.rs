//! Pictures of annular diagrams: each term is drawn between two concentric
//! circles, with the base-point arc dashed straight down.

use std::f64::consts::PI;
use std::fmt::Write;

use atl_core::{AnnularDiagram, Morphism, Point};

const INNER: f64 = 30.0;
const OUTER: f64 = 90.0;
const CELL: f64 = 220.0;
const SAMPLES: usize = 32;

/// Position in the cut rectangle: `x` runs clockwise from the base-point
/// arc, `y` from the inner circle to the outer one.
fn rect(p: Point, d: &AnnularDiagram) -> (f64, f64) {
    let level = |j: u32| (j as f64 + 1.0) / (d.seam() as f64 + 1.0);
    match p {
        Point::I(j) => ((j as f64 + 0.5) / d.dom() as f64, 0.0),
        Point::O(j) => ((j as f64 + 0.5) / d.cod() as f64, 1.0),
        Point::L(j) => (0.0, level(j)),
        Point::R(j) => (1.0, level(j)),
    }
}

/// Unit inward direction at a boundary point of the rectangle.
fn inward(p: Point) -> (f64, f64) {
    match p {
        Point::I(_) => (0.0, 1.0),
        Point::O(_) => (0.0, -1.0),
        Point::L(_) => (1.0, 0.0),
        Point::R(_) => (-1.0, 0.0),
    }
}

/// Rectangle to plane, the base point at the bottom and `x` growing
/// clockwise.
fn polar((x, y): (f64, f64)) -> (f64, f64) {
    let r = INNER + y * (OUTER - INNER);
    let t = PI / 2.0 + 2.0 * PI * x;
    (r * t.cos(), r * t.sin())
}

fn bezier(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64), t: f64) -> (f64, f64) {
    let s = 1.0 - t;
    let w = [s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t];
    (
        w[0] * a.0 + w[1] * b.0 + w[2] * c.0 + w[3] * d.0,
        w[0] * a.1 + w[1] * b.1 + w[2] * c.1 + w[3] * d.1,
    )
}

/// Sampled plane curve of one arc, relative to the annulus center.
fn arc_path(d: &AnnularDiagram, p: Point, q: Point) -> Vec<(f64, f64)> {
    let (a, b) = (rect(p, d), rect(q, d));
    let span = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
    let pull = (0.45 * span).clamp(0.08, 0.5);
    let (ua, ub) = (inward(p), inward(q));
    let c1 = (a.0 + pull * ua.0, a.1 + pull * ua.1);
    let c2 = (b.0 + pull * ub.0, b.1 + pull * ub.1);
    (0..=SAMPLES).map(|i| polar(bezier(a, c1, c2, b, i as f64 / SAMPLES as f64))).collect()
}

fn fmt_num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// SVG 1.1 with one annulus per term, left to right in term order.
pub fn svg(x: &Morphism) -> String {
    let count = x.len().max(1);
    let (w, h) = (CELL * count as f64, CELL + 30.0);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt_num(w),
        fmt_num(h),
        fmt_num(w),
        fmt_num(h)
    )
    .unwrap();
    if x.is_empty() {
        writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">0</text>"#, fmt_num(w / 2.0), fmt_num(h / 2.0)).unwrap();
    }
    for (k, (d, c)) in x.terms().iter().enumerate() {
        let (cx, cy) = (CELL * (k as f64 + 0.5), 30.0 + CELL / 2.0);
        writeln!(out, r#"<g transform="translate({},{})">"#, fmt_num(cx), fmt_num(cy)).unwrap();
        writeln!(out, r#"<text x="0" y="{}" text-anchor="middle" font-size="14">{}</text>"#, fmt_num(-OUTER - 14.0), xml_escape(&c.to_string())).unwrap();
        for r in [INNER, OUTER] {
            writeln!(out, r#"<circle cx="0" cy="0" r="{}" fill="none" stroke="black" stroke-width="1"/>"#, fmt_num(r)).unwrap();
        }
        writeln!(out, r#"<line x1="0" y1="{}" x2="0" y2="{}" stroke="gray" stroke-dasharray="4,3"/>"#, fmt_num(INNER), fmt_num(OUTER)).unwrap();
        for e in 0..d.ess() {
            let r = INNER + (e as f64 + 1.0) / (d.ess() as f64 + 1.0) * (OUTER - INNER);
            writeln!(out, r#"<circle cx="0" cy="0" r="{}" fill="none" stroke="black" stroke-width="2.5"/>"#, fmt_num(r)).unwrap();
        }
        for &(p, q) in d.arcs() {
            let pts: Vec<String> = arc_path(d, p, q).into_iter().map(|(a, b)| format!("{},{}", fmt_num(a), fmt_num(b))).collect();
            writeln!(out, r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2.5"/>"#, pts.join(" ")).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

/// A TikZ picture with the same geometry, one scope per term.
pub fn tikz(x: &Morphism) -> String {
    let unit = 0.02;
    let p = |(a, b): (f64, f64), dx: f64| format!("({},{})", fmt_num(a * unit + dx), fmt_num(-b * unit));
    let mut out = String::from("\\begin{tikzpicture}\n");
    if x.is_empty() {
        out.push_str("\\node at (0,0) {$0$};\n");
    }
    for (k, (d, c)) in x.terms().iter().enumerate() {
        let dx = k as f64 * CELL * unit;
        writeln!(out, "\\node at {} {{${}$}};", p((0.0, -OUTER - 14.0), dx), c).unwrap();
        for r in [INNER, OUTER] {
            writeln!(out, "\\draw {} circle ({});", p((0.0, 0.0), dx), fmt_num(r * unit)).unwrap();
        }
        writeln!(out, "\\draw[dashed] {} -- {};", p((0.0, INNER), dx), p((0.0, OUTER), dx)).unwrap();
        for e in 0..d.ess() {
            let r = INNER + (e as f64 + 1.0) / (d.ess() as f64 + 1.0) * (OUTER - INNER);
            writeln!(out, "\\draw[very thick] {} circle ({});", p((0.0, 0.0), dx), fmt_num(r * unit)).unwrap();
        }
        for &(a, b) in d.arcs() {
            let pts: Vec<String> = arc_path(d, a, b).into_iter().map(|q| p(q, dx)).collect();
            writeln!(out, "\\draw[very thick] {};", pts.join(" -- ")).unwrap();
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// One line per term with the arc list, then the cut rectangle with each
/// arc's endpoints tagged by a letter.
pub fn ascii(x: &Morphism) -> String {
    let mut out = format!("hom({}, {}), {} term(s)\n", x.dom(), x.cod(), x.len());
    for (d, c) in x.terms() {
        writeln!(out, "{c} * {d}").unwrap();
        let tag = |p: Point| -> char {
            let k = d.arcs().iter().position(|&(a, b)| a == p || b == p).unwrap_or(0);
            (b'a' + (k % 26) as u8) as char
        };
        let side = |pts: Vec<Point>| -> String { pts.into_iter().map(|p| format!(" {}", tag(p))).collect() };
        let outer = side((0..d.cod() as u32).map(Point::O).collect());
        let inner = side((0..d.dom() as u32).map(Point::I).collect());
        let width = outer.len().max(inner.len()).max(2);
        writeln!(out, "  +{:-<width$}+", "").unwrap();
        writeln!(out, "  |{outer:<width$}|").unwrap();
        for j in (0..d.seam() as u32).rev() {
            writeln!(out, "  {}{:width$}{}", tag(Point::L(j)), "", tag(Point::R(j))).unwrap();
        }
        writeln!(out, "  |{inner:<width$}|").unwrap();
        writeln!(out, "  +{:-<width$}+", "").unwrap();
        if d.ess() > 0 {
            writeln!(out, "  with {} essential circle(s)", d.ess()).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use atl_core::diagram::gen_u;

    #[test]
    fn identity_is_radial() {
        let id = Morphism::identity(1);
        let d = id.terms().keys().next().unwrap();
        let path = arc_path(d, Point::I(0), Point::O(0));
        // x = 1/2 is straight up, opposite the base point.
        assert!(path.iter().all(|&(a, _)| a.abs() < 1e-9));
        assert_eq!(svg(&id).matches("<polyline").count(), 1);
    }

    #[test]
    fn deterministic() {
        let u0 = gen_u(2, 0).unwrap();
        assert_eq!(svg(&u0), svg(&u0.clone()));
        assert_eq!(tikz(&u0), tikz(&u0));
        assert!(ascii(&u0).contains("seam"));
    }
}
