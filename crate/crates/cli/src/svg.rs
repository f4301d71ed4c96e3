//! Log-scale SVG heatmap of a scalar field sampled on a cell grid.

use crate::fmt::g12;

/// Sequential 9-step palette (light to dark), applied to log₁₀ of the field;
/// the canonical function diverges at the polygon edges, so a linear scale
/// would saturate there.
pub const PALETTE: [&str; 9] = [
    "#ffffcc", "#ffeda0", "#fed976", "#feb24c", "#fd8d3c", "#fc4e2a", "#e31a1c", "#bd0026",
    "#800026",
];

pub struct HeatmapCell {
    pub ix: usize,
    pub iy: usize,
    pub value: f64,
}

/// Renders one rect per interior grid cell, colored by log₁₀(value) binned
/// into [`PALETTE`], with the polygon outline drawn on top.
pub fn render(
    bbox: (f64, f64, f64, f64),
    nx: usize,
    ny: usize,
    cells: &[HeatmapCell],
    outline: &[[f64; 2]],
) -> String {
    let (xmin, xmax, ymin, ymax) = bbox;
    let (w, h) = (xmax - xmin, ymax - ymin);
    let scale = 640.0 / w.max(h);
    let (width, height) = (w * scale, h * scale);
    let dx = w / nx as f64;
    let dy = h / ny as f64;

    let logs: Vec<f64> = cells.iter().map(|c| c.value.log10()).collect();
    let lmin = logs.iter().cloned().fold(f64::INFINITY, f64::min);
    let lmax = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        g12(width),
        g12(height),
        g12(width),
        g12(height)
    ));
    svg.push_str(&format!(
        "<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        g12(width),
        g12(height)
    ));
    for (cell, lv) in cells.iter().zip(&logs) {
        let idx = if lmax > lmin {
            (((lv - lmin) / (lmax - lmin) * 9.0) as usize).min(8)
        } else {
            4
        };
        let x = cell.ix as f64 * dx * scale;
        let y = (h - (cell.iy + 1) as f64 * dy) * scale;
        svg.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
            g12(x),
            g12(y),
            g12(dx * scale),
            g12(dy * scale),
            PALETTE[idx]
        ));
    }
    let points: Vec<String> = outline
        .iter()
        .map(|p| format!("{},{}", g12((p[0] - xmin) * scale), g12((ymax - p[1]) * scale)))
        .collect();
    svg.push_str(&format!(
        "<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        points.join(" ")
    ));
    svg.push_str("</svg>\n");
    svg
}
