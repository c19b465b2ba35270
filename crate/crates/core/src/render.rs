//! Planar instances and solutions as SVG.

use std::fmt::Write;

use crate::approx::Solution;
use crate::error::{Error, Result};
use crate::instance::Instance;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Fill color of region `i`; the palette repeats after ten regions.
pub fn region_color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Render a 2-D instance, optionally with a solution on top.
///
/// Vertices are dots grouped per region. Tree edges are `<line>` elements
/// (exactly `n - 1` of them) and the chosen representatives are drawn as
/// larger ringed dots. The y axis points up. The viewBox is the bounding
/// box of all vertices padded by 5% of its extent on every side.
pub fn render_svg(inst: &Instance, solution: Option<&Solution>) -> Result<String> {
    if inst.dim() != 2 {
        return Err(Error::RenderDimension(inst.dim()));
    }
    if let Some(sol) = solution {
        if !sol.is_valid_for(inst) {
            return Err(Error::InvalidArgument(
                "solution does not belong to this instance".into(),
            ));
        }
    }

    let pts = inst.regions().iter().flat_map(|r| &r.vertices);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        let (x, y) = (p.coords()[0], flip(p.coords()[1]));
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let span = if span > 0.0 { span } else { 1.0 };
    let (w, h) = ((x1 - x0).max(0.0), (y1 - y0).max(0.0));
    // Degenerate extents borrow the other axis so the box never collapses.
    let (w, h) = (if w > 0.0 { w } else { span }, if h > 0.0 { h } else { span });
    let (mx, my) = (0.05 * w, 0.05 * h);
    let dot = 0.012 * span;
    let stroke = 0.004 * span;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        x0 - mx,
        y0 - my,
        w + 2.0 * mx,
        h + 2.0 * my
    );

    if let Some(sol) = solution {
        let _ = writeln!(
            s,
            r##"<g class="tree" stroke="#1f3fbf" stroke-width="{stroke}">"##
        );
        for &(i, j) in &sol.tree.edges {
            let (p, q) = (&sol.selection.points[i], &sol.selection.points[j]);
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                p.coords()[0],
                flip(p.coords()[1]),
                q.coords()[0],
                flip(q.coords()[1])
            );
        }
        s.push_str("</g>\n");
    }

    for (i, r) in inst.regions().iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<g class="region" data-label="{}" fill="{}">"#,
            escape(&r.label),
            region_color(i)
        );
        for p in &r.vertices {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="{dot}"/>"#,
                p.coords()[0],
                flip(p.coords()[1])
            );
        }
        s.push_str("</g>\n");
    }

    if let Some(sol) = solution {
        let _ = writeln!(
            s,
            r##"<g class="representatives" fill="#00a000" stroke="#000000" stroke-width="{stroke}">"##
        );
        for p in &sol.selection.points {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                p.coords()[0],
                flip(p.coords()[1]),
                1.8 * dot
            );
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// SVG's y axis points down. `0.0 - y` keeps `0` from printing as `-0`.
fn flip(y: f64) -> f64 {
    0.0 - y
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
