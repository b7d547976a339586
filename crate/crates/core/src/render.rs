//! ASCII and SVG drawings of labeled patches.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{AxisClass, Coord, GraphPatch, Mode};
use crate::verify::Labeling;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

type Point = (f64, f64);

fn axial(q: f64, r: f64) -> Point {
    (q + r / 2.0, r * SQRT3_2)
}

fn honeycomb(q: i64, r: i64, white: bool) -> Point {
    let (q, r) = (q as f64, r as f64);
    if white {
        // centroid of its three black neighbors (q,r), (q-1,r), (q,r-1)
        let (a, b, c) = (axial(q, r), axial(q - 1.0, r), axial(q, r - 1.0));
        ((a.0 + b.0 + c.0) / 3.0, (a.1 + b.1 + c.1) / 3.0)
    } else {
        axial(q, r)
    }
}

fn mid(a: Point, b: Point) -> Point {
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

/// Planar position of a lattice coordinate (y grows upward).
pub fn position(coord: &Coord, kind_is_tri: bool) -> Point {
    match *coord {
        Coord::Cell { col, row } => (col as f64, row as f64),
        Coord::Axial { q, r } => axial(q as f64, r as f64),
        Coord::Honeycomb { q, r, white } => honeycomb(q, r, white),
        Coord::Axis { class, first, second } => {
            let (black, white) = match class {
                AxisClass::U => ((first, second), (first, second)),
                AxisClass::V => ((second - first, first), (second - first + 1, first)),
                AxisClass::W => ((second, first - second), (second, first - second + 1)),
            };
            mid(honeycomb(black.0, black.1, false), honeycomb(white.0, white.1, true))
        }
        Coord::Segment { from, to } => {
            let p = |x: [i64; 2]| if kind_is_tri { axial(x[0] as f64, x[1] as f64) } else { (x[0] as f64, x[1] as f64) };
            mid(p(from), p(to))
        }
    }
}

fn layout(patch: &GraphPatch, mode: Mode) -> (Vec<Point>, Vec<Point>) {
    let tri = patch.kind().grid() == crate::grid::GridKind::Tri6;
    let vpos: Vec<Point> = patch.vertices().iter().map(|v| position(&v.coord, tri)).collect();
    let epos = match mode {
        Mode::Vertex => vpos.clone(),
        Mode::Edge => patch.edges().iter().map(|e| mid(vpos[e.u], vpos[e.v])).collect(),
    };
    (vpos, epos)
}

fn check(patch: &GraphPatch, mode: Mode, labeling: &Labeling) -> Result<()> {
    if labeling.len() != patch.element_count(mode) {
        return Err(Error::Format(format!(
            "labeling covers {} elements but the patch has {}",
            labeling.len(),
            patch.element_count(mode)
        )));
    }
    Ok(())
}

fn label_text(l: Option<u32>) -> String {
    l.map_or_else(|| "?".to_string(), |l| l.to_string())
}

/// Character-grid drawing: each element's label at its scaled position.
pub fn ascii(patch: &GraphPatch, mode: Mode, labeling: &Labeling) -> Result<String> {
    check(patch, mode, labeling)?;
    let (_, pos) = layout(patch, mode);
    if pos.is_empty() {
        return Ok(String::new());
    }
    let (sx, sy) = (4.0, 2.0);
    let min_x = pos.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_y = pos.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let cells: Vec<(usize, usize)> =
        pos.iter().map(|p| (((p.0 - min_x) * sx).round() as usize, ((max_y - p.1) * sy).round() as usize)).collect();
    let rows = cells.iter().map(|c| c.1).max().unwrap_or(0) + 1;
    let cols = cells.iter().map(|c| c.0).max().unwrap_or(0) + 4;
    let mut grid = vec![vec![' '; cols]; rows];
    for (e, &(x, y)) in cells.iter().enumerate() {
        for (i, ch) in label_text(labeling.get(e)).chars().enumerate() {
            if x + i < cols {
                grid[y][x + i] = ch;
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Static SVG: the patch drawn as lines with one `<text>` per element label.
pub fn svg(patch: &GraphPatch, mode: Mode, labeling: &Labeling) -> Result<String> {
    check(patch, mode, labeling)?;
    let (vpos, epos) = layout(patch, mode);
    let scale = 40.0;
    let all = vpos.iter().chain(&epos);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in all {
        x0 = x0.min(p.0);
        x1 = x1.max(p.0);
        y0 = y0.min(p.1);
        y1 = y1.max(p.1);
    }
    if !x0.is_finite() {
        (x0, y0, x1, y1) = (0.0, 0.0, 0.0, 0.0);
    }
    let tx = |x: f64| (x - x0) * scale + scale;
    let ty = |y: f64| (y1 - y) * scale + scale;
    let (w, h) = ((x1 - x0) * scale + 2.0 * scale, (y1 - y0) * scale + 2.0 * scale);
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#).ok();
    writeln!(out, r##"<g stroke="#999" stroke-width="1">"##).ok();
    for e in patch.edges() {
        let (a, b) = (vpos[e.u], vpos[e.v]);
        writeln!(out, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#, tx(a.0), ty(a.1), tx(b.0), ty(b.1)).ok();
    }
    writeln!(out, "</g>").ok();
    writeln!(out, r#"<g font-family="monospace" font-size="12" text-anchor="middle" dominant-baseline="central">"#).ok();
    for (i, p) in epos.iter().enumerate() {
        writeln!(out, r#"<text x="{:.1}" y="{:.1}">{}</text>"#, tx(p.0), ty(p.1), label_text(labeling.get(i))).ok();
    }
    writeln!(out, "</g>\n</svg>").ok();
    Ok(out)
}
