//! A minimal SVG line chart with confidence whiskers.

use std::fmt::Write as _;
use std::path::Path;

use super::stats::{Axis, SweepCurve};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 60.0;

fn log_scale(curve: &SweepCurve) -> bool {
    let lo = curve.points.iter().map(|p| p.value).fold(f64::INFINITY, f64::min);
    let hi = curve.points.iter().map(|p| p.value).fold(f64::NEG_INFINITY, f64::max);
    curve.axis != Axis::T && lo > 0.0 && hi / lo >= 10.0
}

/// Success fraction against the swept parameter, log-scaled for densities
/// spanning a decade or more.
pub fn render_svg(curve: &SweepCurve) -> String {
    let log = log_scale(curve);
    let tx = |v: f64| if log { v.ln() } else { v };
    let xs: Vec<f64> = curve.points.iter().map(|p| tx(p.value)).collect();
    let (mut lo, mut hi) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    if xs.is_empty() {
        (lo, hi) = (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        lo -= 0.5;
        hi += 0.5;
    }
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let sx = |x: f64| MARGIN + (x - lo) / (hi - lo) * plot_w;
    let sy = |y: f64| HEIGHT - MARGIN - y * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, sy(0.0), sy(1.0));
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>"#);
    for tick in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let y = sy(tick);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="11" text-anchor="end">{tick}</text>"#,
            x0 - 6.0,
            y + 4.0
        );
    }
    for (p, &x) in curve.points.iter().zip(&xs) {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
            sx(x),
            y0 + 16.0,
            format_tick(p.value)
        );
    }
    let label = match (curve.axis, log) {
        (a, true) => format!("{} (log scale)", a.name()),
        (a, false) => a.name().to_string(),
    };
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="13" text-anchor="middle">{label}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="15" y="{}" font-size="13" text-anchor="middle" transform="rotate(-90 15 {})">avoiding colouring found</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    for (p, &x) in curve.points.iter().zip(&xs) {
        let cx = sx(x);
        let _ = writeln!(
            s,
            r#"<line x1="{cx:.2}" y1="{:.2}" x2="{cx:.2}" y2="{:.2}" stroke="grey"/>"#,
            sy(p.ci_low),
            sy(p.ci_high)
        );
        for y in [p.ci_low, p.ci_high] {
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="grey"/>"#,
                cx - 4.0,
                sy(y),
                cx + 4.0,
                sy(y)
            );
        }
    }
    let pts: Vec<String> = curve
        .points
        .iter()
        .zip(&xs)
        .map(|(p, &x)| format!("{:.2},{:.2}", sx(x), sy(p.fraction)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

fn format_tick(v: f64) -> String {
    if v != 0.0 && v.abs() < 0.01 {
        format!("{v:.1e}")
    } else {
        format!("{}", (v * 1000.0).round() / 1000.0)
    }
}

pub fn emit_svg(curve: &SweepCurve, path: &Path) -> Result<(), String> {
    std::fs::write(path, render_svg(curve)).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::stats::CurvePoint;

    #[test]
    fn renders_polyline_and_whiskers() {
        let pt = |value, fraction| CurvePoint {
            value,
            successes: 1,
            trials: 2,
            fraction,
            ci_low: 0.1,
            ci_high: 0.9,
        };
        let curve = SweepCurve {
            axis: Axis::P,
            points: vec![pt(0.01, 1.0), pt(0.1, 0.5), pt(1.0, 0.0)],
        };
        let svg = render_svg(&curve);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("p (log scale)"));
        assert_eq!(svg.matches(r#"stroke="grey""#).count(), 9);
    }

    #[test]
    fn handles_single_point() {
        let curve = SweepCurve {
            axis: Axis::T,
            points: vec![CurvePoint {
                value: 3.0,
                successes: 0,
                trials: 1,
                fraction: 0.0,
                ci_low: 0.0,
                ci_high: 0.8,
            }],
        };
        assert!(!render_svg(&curve).contains("NaN"));
    }
}
