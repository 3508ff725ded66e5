//! Real-locus sketches. Floating point is confined to this file and the
//! pictures certify nothing.

use std::fmt::Write;

use rigidcurve::curvelocal::Component;
use rigidcurve::exactalg::{Rat, TernForm, UniPoly};

const SIZE: f64 = 480.0;
const SAMPLES: usize = 6000;
const GRID: usize = 360;
const COLORS: [&str; 6] = ["#1f4e99", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#117a65"];

fn poly_f64(p: &UniPoly<Rat>) -> Vec<f64> {
    p.coeffs().iter().map(Rat::to_f64).collect()
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, x| acc * t + x)
}

/// A point of the real projective plane drawn in the unit disk: the unit
/// representative with `z3 >= 0`, projected from the south pole.
fn to_disk(z: [f64; 3]) -> Option<(f64, f64)> {
    let n = (z[0] * z[0] + z[1] * z[1] + z[2] * z[2]).sqrt();
    if !n.is_finite() || n == 0.0 {
        return None;
    }
    let s = if z[2] < 0.0 { -1.0 / n } else { 1.0 / n };
    let (x, y, w) = (z[0] * s, z[1] * s, z[2] * s);
    Some((x / (1.0 + w), y / (1.0 + w)))
}

fn from_disk(u: f64, v: f64) -> [f64; 3] {
    let r2 = u * u + v * v;
    [2.0 * u / (1.0 + r2), 2.0 * v / (1.0 + r2), (1.0 - r2) / (1.0 + r2)]
}

fn screen((u, v): (f64, f64)) -> (f64, f64) {
    let h = SIZE / 2.0;
    (h + u * (h - 10.0), h - v * (h - 10.0))
}

fn param_paths(coords: &[UniPoly<Rat>; 3]) -> Vec<Vec<(f64, f64)>> {
    let c: Vec<Vec<f64>> = coords.iter().map(poly_f64).collect();
    let mut paths = vec![Vec::new()];
    let mut last: Option<(f64, f64)> = None;
    for i in 1..SAMPLES {
        let theta = -std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * i as f64 / SAMPLES as f64;
        let t = theta.tan();
        let Some(p) = to_disk([horner(&c[0], t), horner(&c[1], t), horner(&c[2], t)]) else { continue };
        if let Some(q) = last {
            // Crossing the line at infinity jumps to the antipode.
            if (p.0 - q.0).hypot(p.1 - q.1) > 0.25 {
                paths.push(Vec::new());
            }
        }
        paths.last_mut().expect("nonempty").push(screen(p));
        last = Some(p);
    }
    paths.retain(|p| p.len() > 1);
    paths
}

fn implicit_dots(f: &TernForm<Rat>) -> Vec<(f64, f64)> {
    let terms: Vec<([u32; 3], f64)> = f.terms().iter().map(|(e, c)| (*e, c.to_f64())).collect();
    let eval = |z: [f64; 3]| terms.iter().map(|(e, c)| c * z[0].powi(e[0] as i32) * z[1].powi(e[1] as i32) * z[2].powi(e[2] as i32)).sum::<f64>();
    let step = 2.0 / GRID as f64;
    let at = |i: usize, j: usize| (-1.0 + i as f64 * step, -1.0 + j as f64 * step);
    let vals: Vec<Vec<f64>> = (0..=GRID)
        .map(|i| {
            (0..=GRID)
                .map(|j| {
                    let (u, v) = at(i, j);
                    eval(from_disk(u, v))
                })
                .collect()
        })
        .collect();
    let mut dots = Vec::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let (u, v) = at(i, j);
            if u * u + v * v > 1.0 {
                continue;
            }
            let a = vals[i][j];
            for (b, (du, dv)) in [(vals[i + 1][j], (step, 0.0)), (vals[i][j + 1], (0.0, step))] {
                if a == 0.0 || a.signum() != b.signum() {
                    let s = if a == b { 0.0 } else { a / (a - b) };
                    dots.push(screen((u + s * du, v + s * dv)));
                }
            }
        }
    }
    dots
}

/// SVG of the real points of every component, in the disk model of the
/// real projective plane.
pub fn svg(components: &[Component]) -> String {
    let mut s = String::new();
    let h = SIZE / 2.0;
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r##"<circle cx="{h}" cy="{h}" r="{}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##, h - 10.0);
    for (k, c) in components.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let _ = writeln!(s, r#"<g id="component-{k}" stroke="{color}" fill="none" stroke-width="1.5">"#);
        match c {
            Component::Param(p) => {
                for path in param_paths(p.coords()) {
                    let pts: Vec<String> = path.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
                }
            }
            Component::Implicit(f) => {
                for (x, y) in implicit_dots(f) {
                    let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="0.8" fill="{color}" stroke="none"/>"#);
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
