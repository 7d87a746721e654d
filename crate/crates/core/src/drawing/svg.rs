use std::fmt::Write as _;

use super::GridDrawing;
use crate::family::LearningGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgOptions {
    /// Pixels per grid unit.
    pub unit: u32,
    /// Element names on edges and state names on vertices.
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            unit: 48,
            labels: false,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Deterministic SVG with the y axis pointing up. Geometry lives inside a
/// flipped group; labels are placed outside it so text stays upright.
pub fn render_svg(drawing: &GridDrawing, graph: &LearningGraph, options: &SvgOptions) -> String {
    let unit = options.unit.max(1) as i64;
    let margin = unit / 2;
    let radius = (unit / 8).max(2);
    let (min_x, min_y, max_x, max_y) = drawing.bounds();
    let width = (max_x - min_x) * unit;
    let height = (max_y - min_y) * unit;
    let px = |p: (i64, i64)| ((p.0 - min_x) * unit, (p.1 - min_y) * unit);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="{vx} {vy} {w} {h}">"#,
        w = width + 2 * margin,
        h = height + 2 * margin,
        vx = -margin,
        vy = -margin,
    )
    .unwrap();
    writeln!(out, r#"<g transform="translate(0 {height}) scale(1 -1)">"#).unwrap();
    writeln!(
        out,
        r##"<g stroke="#404040" stroke-width="2" stroke-linecap="round">"##
    )
    .unwrap();
    for e in graph.edges() {
        let (x1, y1) = px(drawing.get(e.from));
        let (x2, y2) = px(drawing.get(e.to));
        writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r##"<g fill="#1f4e79">"##).unwrap();
    for &p in drawing.coords() {
        let (cx, cy) = px(p);
        writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{radius}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</g>").unwrap();

    if options.labels {
        let font = (unit / 4).max(6);
        writeln!(
            out,
            r##"<g font-family="sans-serif" font-size="{font}" fill="#202020" text-anchor="middle">"##
        )
        .unwrap();
        for e in graph.edges() {
            let (x1, y1) = px(drawing.get(e.from));
            let (x2, y2) = px(drawing.get(e.to));
            // halves of even-unit coordinates; render with one decimal
            let (mx2, my2) = (x1 + x2, 2 * height - (y1 + y2));
            writeln!(
                out,
                r#"<text x="{}.{}" y="{}.{}" dy="-3">{}</text>"#,
                mx2 / 2,
                (mx2 % 2) * 5,
                my2 / 2,
                (my2 % 2) * 5,
                escape(graph.universe().name(e.label))
            )
            .unwrap();
        }
        for (v, &p) in drawing.coords().iter().enumerate() {
            let (x, y) = px(p);
            let name = graph.universe().format_state(graph.vertices()[v]);
            writeln!(
                out,
                r#"<text x="{x}" y="{}" dy="{}">{}</text>"#,
                height - y,
                font + radius,
                escape(&name)
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
