//! SVG drawing of families, clipped to a viewing box.

use std::fmt::Write as _;

use crate::family::Family;
use crate::io::approx;
use crate::kernel::{rat, Point, Rational};
use crate::region::ConvexRegion;

/// Viewing window `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClipBox {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl Default for ClipBox {
    fn default() -> Self {
        ClipBox {
            x0: rat(-2, 1),
            y0: rat(-3, 1),
            x1: rat(3, 1),
            y1: rat(4, 1),
        }
    }
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];
const SCALE: f64 = 80.0;

/// One shape per region: a polygon for regions with two or more visible
/// vertices, a dot for a single visible point, an empty polygon otherwise.
pub fn render_svg(f: &Family, clip: &ClipBox) -> String {
    let window = ConvexRegion::rect("clip", clip.x0.clone(), clip.y0.clone(), clip.x1.clone(), clip.y1.clone());
    let (x0, y1) = (approx(&clip.x0), approx(&clip.y1));
    let width = (approx(&clip.x1) - x0) * SCALE;
    let height = (y1 - approx(&clip.y0)) * SCALE;
    let to_screen = |p: &Point| ((approx(&p.x) - x0) * SCALE, (y1 - approx(&p.y)) * SCALE);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, r#"<title>{}</title>"#, escape(&f.name)).unwrap();
    writeln!(out, r##"<rect x="0" y="0" width="{width:.2}" height="{height:.2}" fill="white" stroke="#999"/>"##).unwrap();
    for (i, region) in f.regions().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let label = escape(&region.label);
        let verts = region.intersect(&window).vertices().unwrap_or_default();
        match verts.as_slice() {
            [p] => {
                let (x, y) = to_screen(p);
                writeln!(out, r#"<circle data-label="{label}" cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#).unwrap();
            }
            _ => {
                let pts: Vec<String> = verts
                    .iter()
                    .map(|p| {
                        let (x, y) = to_screen(p);
                        format!("{x:.2},{y:.2}")
                    })
                    .collect();
                writeln!(
                    out,
                    r#"<polygon data-label="{label}" points="{}" fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="2"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
        if let Some(p) = verts.first() {
            let (x, y) = to_screen(p);
            writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-size="12" fill="{color}">{label}</text>"#, x + 4.0, y - 4.0).unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
