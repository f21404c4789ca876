//! Static SVG figures of angles and their sails.

use num_traits::ToPrimitive;

use crate::lattice::{Int, IntVec2};
use crate::oracle::Sail;

const CANVAS: f64 = 520.0;
const MARGIN: f64 = 40.0;
const MAX_GRID_POINTS: i64 = 4000;

/// Renders the angle between rays OA and OB with its lattice neighbourhood
/// and the sail polyline. Output is deterministic for identical inputs.
pub fn sail_figure_svg(a: &IntVec2, b: &IntVec2, sail: &Sail) -> String {
    let mut xs: Vec<&Int> = vec![&a.x, &b.x];
    let mut ys: Vec<&Int> = vec![&a.y, &b.y];
    for v in &sail.vertices {
        xs.push(&v.x);
        ys.push(&v.y);
    }
    let zero = Int::from(0);
    xs.push(&zero);
    ys.push(&zero);
    let approx = |z: &Int| z.to_f64().unwrap_or(0.0);
    let x_min = xs.iter().map(|z| approx(z)).fold(f64::INFINITY, f64::min) - 1.0;
    let x_max = xs
        .iter()
        .map(|z| approx(z))
        .fold(f64::NEG_INFINITY, f64::max)
        + 1.0;
    let y_min = ys.iter().map(|z| approx(z)).fold(f64::INFINITY, f64::min) - 1.0;
    let y_max = ys
        .iter()
        .map(|z| approx(z))
        .fold(f64::NEG_INFINITY, f64::max)
        + 1.0;
    let span = (x_max - x_min).max(y_max - y_min).max(1.0);
    let scale = (CANVAS - 2.0 * MARGIN) / span;

    let px = |x: f64| MARGIN + (x - x_min) * scale;
    let py = |y: f64| CANVAS - MARGIN - (y - y_min) * scale;
    let point = |v: &IntVec2| (px(approx(&v.x)), py(approx(&v.y)));

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" \
         viewBox=\"0 0 {c} {c}\">\n",
        c = CANVAS
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Lattice dots, skipped for large windows.
    let ix_min = x_min.floor() as i64;
    let ix_max = x_max.ceil() as i64;
    let iy_min = y_min.floor() as i64;
    let iy_max = y_max.ceil() as i64;
    if (ix_max - ix_min + 1) * (iy_max - iy_min + 1) <= MAX_GRID_POINTS {
        for gx in ix_min..=ix_max {
            for gy in iy_min..=iy_max {
                out.push_str(&format!(
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.5\" fill=\"#cccccc\"/>\n",
                    px(gx as f64),
                    py(gy as f64)
                ));
            }
        }
    }

    // Rays from the origin through A and B.
    let origin = (px(0.0), py(0.0));
    for (v, label) in [(a, "A"), (b, "B")] {
        let (vx, vy) = point(v);
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{vx:.2}\" y2=\"{vy:.2}\" \
             stroke=\"#4477aa\" stroke-width=\"1.5\"/>\n",
            origin.0, origin.1
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" fill=\"#4477aa\">{label}</text>\n",
            vx + 6.0,
            vy - 6.0
        ));
    }

    // Sail polyline and its vertices.
    let pts: Vec<String> = sail
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = point(v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#cc3311\" stroke-width=\"2.5\"/>\n",
        pts.join(" ")
    ));
    for v in &sail.vertices {
        let (x, y) = point(v);
        out.push_str(&format!(
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3.5\" fill=\"#cc3311\"/>\n"
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#333333\">({}, {})</text>\n",
            x + 5.0,
            y + 12.0,
            v.x,
            v.y
        ));
    }

    out.push_str(&format!(
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#000000\"/>\n\
         <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\">O</text>\n",
        origin.0,
        origin.1,
        origin.0 + 6.0,
        origin.1 + 14.0
    ));
    out.push_str("</svg>\n");
    out
}
