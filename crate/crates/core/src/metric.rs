//! Hyperbolic distance, geodesics and displacement in the upper half-plane.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::moebius::{GroupElement, UhpPoint};

/// `sinh(ρ(z, w) / 2) = |z - w| / (2 √(y_z y_w))`.
pub fn half_sinh(z: UhpPoint, w: UhpPoint) -> f64 {
    (z.x - w.x).hypot(z.y - w.y) / (2.0 * (z.y * w.y).sqrt())
}

/// Hyperbolic distance for the metric `(dx² + dy²) / y²`.
///
/// Evaluated as `2 asinh(|z - w| / (2√(y_z y_w)))`, which agrees with
/// `arccosh(1 + |z - w|² / (2 y_z y_w))` without its cancellation near 0.
pub fn distance(z: UhpPoint, w: UhpPoint) -> f64 {
    2.0 * half_sinh(z, w).asinh()
}

/// `sinh(½ ρ(z, g z))`, one operand of the min-max objective.
pub fn half_displacement(g: &GroupElement, z: UhpPoint) -> f64 {
    half_sinh(z, g.apply(z))
}

/// `|sinh(½ρ(z, γz)) − sinh(ρ(z, v))·|sin(θ/2)||` for elliptic `γ` with
/// fixed point `v` and rotation angle `θ`.
pub fn displacement_identity_residual(g: &GroupElement, z: UhpPoint) -> Result<f64> {
    let datum = g.elliptic_datum()?;
    let lhs = half_displacement(g, z);
    let rhs = distance(z, datum.fixed).sinh() * (datum.angle / 2.0).sin().abs();
    Ok((lhs - rhs).abs())
}

/// Geodesic segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeodesicSegment {
    pub p: UhpPoint,
    pub q: UhpPoint,
    pub length: f64,
    // isometry carrying i·e^{s} to the point at arclength s from p
    frame: GroupElement,
}

impl GeodesicSegment {
    pub fn new(p: UhpPoint, q: UhpPoint) -> Result<Self> {
        let length = distance(p, q);
        if length == 0.0 {
            return Err(GeometryError::CoincidentPoints);
        }
        // Move p to i, then rotate about i so q lands on the positive
        // imaginary axis. In the disk picture the rotation is by arg D(w)
        // where D(z) = (z - i)/(z + i) and w is the image of q.
        let to_p = GroupElement::sending_i_to(p);
        let w = to_p.inverse().apply(q);
        let beta = (-2.0 * w.x).atan2(w.x * w.x + w.y * w.y - 1.0);
        let frame = to_p.compose(&GroupElement::rotation_about_i(beta));
        Ok(Self {
            p,
            q,
            length,
            frame,
        })
    }

    /// Point at fraction `t` of the length from `p`.
    pub fn point_at(&self, t: f64) -> UhpPoint {
        if t == 0.0 {
            return self.p;
        }
        if t == 1.0 {
            return self.q;
        }
        self.frame.apply(UhpPoint {
            x: 0.0,
            y: (t * self.length).exp(),
        })
    }
}

/// Point at fraction `t` of the way from `p` to `q` along the geodesic.
pub fn geodesic_point(p: UhpPoint, q: UhpPoint, t: f64) -> Result<UhpPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(GeometryError::BadParameter(format!(
            "geodesic parameter {t} outside [0, 1]"
        )));
    }
    Ok(GeodesicSegment::new(p, q)?.point_at(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn pt(x: f64, y: f64) -> UhpPoint {
        UhpPoint::new(x, y).unwrap()
    }

    fn arccosh_distance(z: UhpPoint, w: UhpPoint) -> f64 {
        (1.0 + ((z.x - w.x).powi(2) + (z.y - w.y).powi(2)) / (2.0 * z.y * w.y)).acosh()
    }

    // Length of the Euclidean circle arc through z and w centered on the real
    // axis, integrated numerically with |dz|/y.
    fn integrated_length(z: UhpPoint, w: UhpPoint) -> f64 {
        let cx = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (2.0 * (w.x - z.x));
        let t0 = z.y.atan2(z.x - cx);
        let t1 = w.y.atan2(w.x - cx);
        let n = 20_000;
        let h = (t1 - t0) / n as f64;
        // Simpson on r dt / (r sin t) = dt / sin t
        let f = |t: f64| 1.0 / t.sin();
        let mut s = f(t0) + f(t1);
        for k in 1..n {
            let t = t0 + k as f64 * h;
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(t);
        }
        (s * h / 3.0).abs()
    }

    #[test]
    fn distance_examples() {
        assert!((distance(UhpPoint::I, pt(0.0, E)) - 1.0).abs() < 1e-15);
        let w = pt(0.5, 3f64.sqrt() / 2.0);
        let d = distance(UhpPoint::I, w);
        assert!((d - 0.549_306_144_334_054_8).abs() < 1e-15);
        assert!((d - (2.0 / 3f64.sqrt()).acosh()).abs() < 1e-15);
        assert!((d - integrated_length(UhpPoint::I, w)).abs() < 1e-9);
        assert_eq!(distance(w, w), 0.0);
    }

    #[test]
    fn distance_agrees_with_arccosh_form() {
        let pts = [pt(0.0, 1.0), pt(1.3, 0.2), pt(-4.0, 7.0), pt(0.01, 0.011)];
        for &z in &pts {
            for &w in &pts {
                let (a, b) = (distance(z, w), arccosh_distance(z, w));
                assert!((a - b).abs() < 1e-12 * (1.0 + b), "{a} {b}");
            }
        }
        // near-coincident points keep full relative precision
        let z = pt(0.0, 1.0);
        let w = pt(1e-10, 1.0);
        assert!((distance(z, w) - 1e-10).abs() < 1e-24);
    }

    #[test]
    fn geodesic_point_examples() {
        let p = UhpPoint::I;
        let q = pt(0.0, E);
        assert_eq!(geodesic_point(p, q, 0.0).unwrap(), p);
        assert_eq!(geodesic_point(p, q, 1.0).unwrap(), q);
        let m = geodesic_point(p, q, 0.5).unwrap();
        assert!(m.x.abs() < 1e-15 && (m.y - 0.5f64.exp()).abs() < 1e-15);

        let q = pt(0.5, 3f64.sqrt() / 2.0);
        let m = geodesic_point(p, q, 0.5).unwrap();
        assert!((distance(p, m) - 0.274_653_072_167_027_4).abs() < 1e-9);
        assert!((distance(m, q) - 0.274_653_072_167_027_4).abs() < 1e-9);

        assert_eq!(
            geodesic_point(p, p, 0.5),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn geodesic_point_endpoint_at_one_is_q() {
        let p = pt(-2.0, 0.3);
        let q = pt(1.5, 2.5);
        let seg = GeodesicSegment::new(p, q).unwrap();
        // evaluate the frame at t → 1 rather than the shortcut
        let end = seg.frame.apply(UhpPoint {
            x: 0.0,
            y: seg.length.exp(),
        });
        assert!(distance(end, q) < 1e-9);
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            let z = seg.point_at(t);
            assert!((distance(p, z) - t * seg.length).abs() < 1e-9);
            assert!((distance(z, q) - (1.0 - t) * seg.length).abs() < 1e-9);
        }
    }

    #[test]
    fn half_displacement_examples() {
        let g = GroupElement::elliptic_from(pt(0.3, 0.7), 1.1).unwrap();
        assert!(half_displacement(&g, pt(0.3, 0.7)) < 1e-15);

        let t = GroupElement::translation(1.0);
        let want = (0.5 * distance(UhpPoint::I, pt(1.0, 1.0))).sinh();
        assert!((half_displacement(&t, UhpPoint::I) - want).abs() < 1e-15);

        let s = GroupElement::new(0.0, -1.0, 1.0, 0.0).unwrap();
        assert!((half_displacement(&s, pt(0.0, E)) - 1f64.sinh()).abs() < 1e-14);
    }

    #[test]
    fn displacement_identity_examples() {
        let g = GroupElement::elliptic_from(pt(-1.0, 2.0), 2.0 * PI / 5.0).unwrap();
        assert!(displacement_identity_residual(&g, pt(-1.0, 2.0)).unwrap() < 1e-15);
        let s = GroupElement::new(0.0, -1.0, 1.0, 0.0).unwrap();
        assert!(displacement_identity_residual(&s, pt(0.0, E)).unwrap() < 1e-14);
        assert!(
            displacement_identity_residual(&GroupElement::translation(1.0), UhpPoint::I).is_err()
        );
    }

    #[test]
    fn sinh_ratio_step() {
        for k in 1..1000 {
            let r = 10.0 * k as f64 / 1000.0;
            assert!((r.sinh() / (r / 2.0).sinh() - 2.0 * (r / 2.0).cosh()).abs() < 1e-12);
        }
    }
}
