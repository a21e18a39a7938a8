use std::fmt::Write;

use super::{Scene, ViewportMap};
use crate::error::Result;
use crate::spiral::ComplexPoint;

/// Namespace of the `<metadata>` element that records the viewport map.
pub const VIEWPORT_NAMESPACE: &str = "urn:ngon-spiral:viewport";

const PALETTE: [&str; 8] = [
    "#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#16a085", "#7f6000", "#555555",
];

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn point_list(map: &ViewportMap, points: &[ComplexPoint]) -> String {
    let mut s = String::new();
    for (i, &z) in points.iter().enumerate() {
        let (x, y) = map.to_px(z);
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.6},{y:.6}");
    }
    s
}

/// Renders the scene as a standalone SVG 1.1 document.
///
/// Layers, bottom to top: axes through the origin, polygons, curves, then
/// marker sequences. Each curve and marker sequence is its own `<g>` with a
/// `data-name` attribute; markers are `<circle>` elements in sequence order.
/// Output depends only on the scene.
pub fn render_svg(scene: &Scene) -> Result<String> {
    let map = scene.viewport_map()?;
    let style = &scene.style;
    let mut svg = String::new();
    let (w, h) = (map.width, map.height);
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.6} {h:.6}">"#
    );
    let _ = writeln!(
        svg,
        r#"<metadata><viewport xmlns="{VIEWPORT_NAMESPACE}" x-min="{}" y-max="{}" scale="{}"/></metadata>"#,
        map.x_min, map.y_max, map.scale
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{w:.6}" height="{h:.6}" fill="white"/>"#);

    let (ox, oy) = map.to_px(ComplexPoint::new(0.0, 0.0));
    let _ = writeln!(svg, r##"<g id="axes" stroke="#cccccc" stroke-width="0.5">"##);
    if (0.0..=h).contains(&oy) {
        let _ = writeln!(svg, r#"<line x1="0" y1="{oy:.6}" x2="{w:.6}" y2="{oy:.6}"/>"#);
    }
    if (0.0..=w).contains(&ox) {
        let _ = writeln!(svg, r#"<line x1="{ox:.6}" y1="0" x2="{ox:.6}" y2="{h:.6}"/>"#);
    }
    let _ = writeln!(svg, "</g>");

    if !scene.polygons.is_empty() {
        let _ = writeln!(
            svg,
            r##"<g id="polygons" fill="none" stroke="#444444" stroke-width="{}" stroke-linejoin="round">"##,
            style.polygon_stroke
        );
        for p in &scene.polygons {
            let _ = writeln!(svg, r#"<polygon data-n="{}" points="{}"/>"#, p.n, point_list(&map, &p.vertices));
        }
        let _ = writeln!(svg, "</g>");
    }

    for (i, curve) in scene.curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"<g id="curve-{i}" data-name="{}" fill="none" stroke="{color}" stroke-width="{}">"#,
            escape(&curve.name),
            style.curve_stroke
        );
        if !curve.points.is_empty() {
            let _ = writeln!(svg, r#"<polyline points="{}"/>"#, point_list(&map, &curve.points));
        }
        let _ = writeln!(svg, "</g>");
    }

    for (i, seq) in scene.point_sequences.iter().enumerate() {
        let color = PALETTE[(i + 3) % PALETTE.len()];
        let _ = writeln!(svg, r#"<g id="points-{i}" data-name="{}" fill="{color}">"#, escape(&seq.name));
        for &z in &seq.points {
            let (x, y) = map.to_px(z);
            let _ = writeln!(svg, r#"<circle cx="{x:.6}" cy="{y:.6}" r="{}"/>"#, style.marker_radius);
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
