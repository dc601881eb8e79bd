//! SVG figure of an anchored disc cover.
//!
//! Element layout: one `<polygon>` for the hull, one `<circle>` per disc and
//! one `<path class="marker ...">` per point, plus Ω and the Steiner center.
//! The y axis is flipped so the figure reads in math orientation.

use std::fmt::Write as _;
use std::io::Write;

use steiner_cover::{build_cover, convex_hull_2d, steiner_center_angles, Dim, Point, PointSet};

use crate::CliError;

/// Padding added around the disc bounding box, as a fraction of its extent.
const PAD: f64 = 0.05;

fn num(v: f64) -> String {
    // Avoid "-0.000000" so output is identical for ±0.
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000000".to_string()
    } else {
        s
    }
}

fn xy(p: &Point) -> (String, String) {
    (num(p.x()), num(-p.y()))
}

pub fn render_svg<W: Write>(ps: &PointSet, omega: &Point, mut out: W) -> Result<(), CliError> {
    if ps.dim() != Dim::Two {
        return Err(CliError::Domain(format!("plot needs 2D input, got {}D", ps.dim())));
    }
    let cover = build_cover(ps, omega)?;
    let hull = convex_hull_2d(ps)?;
    let steiner = steiner_center_angles(&hull).center;

    let (lo, hi) = cover.bbox();
    let (mut w, mut h) = (hi.x() - lo.x(), hi.y() - lo.y());
    let (mut x0, mut y0) = (lo.x(), lo.y());
    if w <= 0.0 {
        w = 1.0;
        x0 -= 0.5;
    }
    if h <= 0.0 {
        h = 1.0;
        y0 -= 0.5;
    }
    let (px, py) = (PAD * w, PAD * h);
    let (vx, vy, vw, vh) = (x0 - px, -(y0 + h + py), w + 2.0 * px, h + 2.0 * py);
    let size = vw.max(vh);
    let stroke = num(0.003 * size);
    let m = 0.012 * size;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        (800.0 * vh / vw).round() as i64
    )
    .unwrap();

    let verts: Vec<String> = hull
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = xy(v);
            format!("{x},{y}")
        })
        .collect();
    writeln!(
        s,
        r##"<polygon class="hull" points="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#4a90d9" stroke-width="{stroke}"/>"##,
        verts.join(" ")
    )
    .unwrap();

    for d in &cover.discs {
        let (cx, cy) = xy(&d.center);
        writeln!(
            s,
            r##"<circle class="disc" cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#d94a4a" stroke-width="{stroke}"/>"##,
            num(d.radius)
        )
        .unwrap();
    }

    for p in ps.points() {
        let (x, y) = (p.x(), -p.y());
        let r = 0.5 * m;
        writeln!(
            s,
            r#"<path class="marker point" d="M{} {} a{} {} 0 1 0 {} 0 a{} {} 0 1 0 {} 0 Z" fill="black"/>"#,
            num(x - r),
            num(y),
            num(r),
            num(r),
            num(2.0 * r),
            num(r),
            num(r),
            num(-2.0 * r)
        )
        .unwrap();
    }

    let (ox, oy) = (omega.x(), -omega.y());
    writeln!(
        s,
        r##"<path class="marker omega" d="M{} {} L{} {} M{} {} L{} {}" stroke="#222222" stroke-width="{stroke}"/>"##,
        num(ox - m),
        num(oy - m),
        num(ox + m),
        num(oy + m),
        num(ox - m),
        num(oy + m),
        num(ox + m),
        num(oy - m)
    )
    .unwrap();

    let mut star = String::new();
    for k in 0..10 {
        let r = if k % 2 == 0 { 1.5 * m } else { 0.6 * m };
        let a = std::f64::consts::FRAC_PI_2 + k as f64 * std::f64::consts::PI / 5.0;
        let cmd = if k == 0 { 'M' } else { 'L' };
        write!(star, "{cmd}{} {} ", num(steiner.x() + r * a.cos()), num(-steiner.y() - r * a.sin())).unwrap();
    }
    writeln!(s, r##"<path class="marker steiner" d="{star}Z" fill="#e0a000"/>"##).unwrap();
    writeln!(s, "</svg>").unwrap();

    out.write_all(s.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
}
