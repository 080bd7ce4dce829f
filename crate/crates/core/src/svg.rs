//! Disk-model pictures of elliptic point sets.
//!
//! Output is byte-deterministic: coordinates are written with six decimals
//! and no hash-ordered collections are involved.

use std::fmt::Write as _;

use crate::groups::{EllipticPointSet, GapResult};
use crate::moebius::UhpPoint;

const SIZE: f64 = 640.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 300.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// `z ↦ (z − i)/(z + i)`, the Cayley map onto the unit disk.
pub fn to_disk(z: UhpPoint) -> (f64, f64) {
    let den = z.x * z.x + (z.y + 1.0) * (z.y + 1.0);
    let u = (z.x * z.x + z.y * z.y - 1.0) / den;
    let v = -2.0 * z.x / den;
    (u, v)
}

fn screen(p: (f64, f64)) -> (f64, f64) {
    (CENTER + RADIUS * p.0, CENTER - RADIUS * p.1)
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn color(order: u32) -> &'static str {
    PALETTE[(order as usize).wrapping_sub(2) % PALETTE.len()]
}

/// Path data for the disk geodesic between two points: a straight segment
/// through the origin or an arc of the circle orthogonal to the boundary.
pub fn geodesic_path(p: UhpPoint, q: UhpPoint) -> String {
    let (a, b) = (to_disk(p), to_disk(q));
    let (sa, sb) = (screen(a), screen(b));
    let start = format!("M {} {}", num(sa.0), num(sa.1));
    // orthogonal circle center c solves c·a = (|a|² + 1)/2, c·b = (|b|² + 1)/2
    let det = a.0 * b.1 - a.1 * b.0;
    if det.abs() < 1e-12 {
        return format!("{start} L {} {}", num(sb.0), num(sb.1));
    }
    let ra = (a.0 * a.0 + a.1 * a.1 + 1.0) / 2.0;
    let rb = (b.0 * b.0 + b.1 * b.1 + 1.0) / 2.0;
    let c = ((ra * b.1 - rb * a.1) / det, (a.0 * rb - b.0 * ra) / det);
    let r = ((a.0 - c.0).powi(2) + (a.1 - c.1).powi(2)).sqrt() * RADIUS;
    let sc = screen(c);
    let cross = (sa.0 - sc.0) * (sb.1 - sc.1) - (sa.1 - sc.1) * (sb.0 - sc.0);
    let sweep = u8::from(cross > 0.0);
    format!(
        "{start} A {} {} 0 0 {sweep} {} {}",
        num(r),
        num(r),
        num(sb.0),
        num(sb.1)
    )
}

/// Boundary circle, fixed points colored by order, and the minimal pair
/// joined by its geodesic.
pub fn render_svg(title: &str, eps: &EllipticPointSet, gap: Option<&GapResult>) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        "<style>.boundary{{fill:none;stroke:#000;stroke-width:1.5}}.geodesic{{fill:none;stroke:#000;stroke-width:2}}.pair{{fill:none;stroke:#000;stroke-width:2}}text{{font:12px sans-serif}}</style>"
    );
    let _ = writeln!(
        s,
        r#"<circle class="boundary" cx="{c}" cy="{c}" r="{r}"/>"#,
        c = num(CENTER),
        r = num(RADIUS)
    );
    if let Some(g) = gap {
        let _ = writeln!(
            s,
            r#"<path class="geodesic" d="{}"/>"#,
            geodesic_path(g.points.0, g.points.1)
        );
    }
    for p in &eps.points {
        let (x, y) = screen(to_disk(p.point));
        let _ = writeln!(
            s,
            r#"<circle class="pt order-{o}" cx="{}" cy="{}" r="3.000000" fill="{}"/>"#,
            num(x),
            num(y),
            color(p.order),
            o = p.order
        );
    }
    if let Some(g) = gap {
        for z in [g.points.0, g.points.1] {
            let (x, y) = screen(to_disk(z));
            let _ = writeln!(
                s,
                r#"<circle class="pair" cx="{}" cy="{}" r="7.000000"/>"#,
                num(x),
                num(y)
            );
        }
    }
    for (k, o) in eps.orders().iter().enumerate() {
        let y = 20.0 + 16.0 * k as f64;
        let _ = writeln!(
            s,
            r#"<circle class="pt order-{o}" cx="14.000000" cy="{}" r="4.000000" fill="{}"/><text x="24.000000" y="{}">order {o}</text>"#,
            num(y),
            color(*o),
            num(y + 4.0)
        );
    }
    if let Some(g) = gap {
        let _ = writeln!(
            s,
            r#"<text x="14.000000" y="{}">d_min = {}</text>"#,
            num(SIZE - 14.0),
            g.d_min
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
