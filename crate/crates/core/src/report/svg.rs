//! SVG rendering of a hemicycle layout on the unit half-disk.

use std::fmt::Write;

use crate::layout::HemicycleLayout;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;

fn to_px(x: f64, y: f64) -> (f64, f64) {
    (MARGIN + (x + 1.0) * SIZE / 2.0, MARGIN + (1.0 - y) * SIZE / 2.0)
}

/// Half-disk outline, the club glyph at the origin and one labelled circle
/// per laid-out vertex at `(r cos θ, r sin θ)`.
pub fn hemicycle_svg(layout: &HemicycleLayout) -> String {
    let width = SIZE + 2.0 * MARGIN;
    let height = SIZE / 2.0 + 2.0 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    )
    .unwrap();
    let (x0, y0) = to_px(-1.0, 0.0);
    let (x1, y1) = to_px(1.0, 0.0);
    let radius = SIZE / 2.0;
    writeln!(
        out,
        r##"  <path d="M {x0:.2} {y0:.2} A {radius} {radius} 0 0 1 {x1:.2} {y1:.2} Z" fill="none" stroke="#999"/>"##
    )
    .unwrap();
    let (cx, cy) = to_px(0.0, 0.0);
    writeln!(
        out,
        r##"  <rect class="club" x="{:.2}" y="{:.2}" width="12" height="12" fill="#333"><title>{}</title></rect>"##,
        cx - 6.0,
        cy - 12.0,
        escape(&layout.club.join(" "))
    )
    .unwrap();
    for p in &layout.points {
        let (x, y) = p.cartesian();
        let (px, py) = to_px(x, y);
        writeln!(
            out,
            r##"  <g class="vertex"><circle cx="{px:.2}" cy="{py:.2}" r="4" fill="#3a7bd5"/><text x="{:.2}" y="{:.2}" font-size="9">{}</text></g>"##,
            px + 5.0,
            py - 5.0,
            escape(&p.label)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
