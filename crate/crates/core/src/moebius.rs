//! Isometries of the upper half-plane as real unimodular 2×2 matrices.
//!
//! A matrix and its negative act identically, so every [`GroupElement`] is
//! stored in a canonical sign: positive trace when the trace is clearly
//! nonzero, otherwise the first nonzero entry among `(b, c, a)` is positive.
//! Equal isometries then compare equal entry by entry, which the word
//! enumeration relies on for deduplication.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::tol;

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UhpPoint {
    pub x: f64,
    pub y: f64,
}

impl UhpPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && y > 0.0) {
            return Err(GeometryError::NotInUpperHalfPlane { x, y });
        }
        Ok(Self { x, y })
    }

    /// The imaginary unit, basepoint of every ball in this crate.
    pub const I: UhpPoint = UhpPoint { x: 0.0, y: 1.0 };
}

impl fmt::Display for UhpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point on the boundary ℝ ∪ {∞}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl BoundaryPoint {
    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Order of an elliptic element, or `Unresolved` when no n ≤ 1000 closes
/// the rotation within tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Unresolved,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Unresolved => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Unresolved => f.write_str("non-finite within tolerance"),
        }
    }
}

/// Fixed point, signed rotation angle and order of an elliptic element.
///
/// The angle is the counterclockwise rotation seen after conjugating the
/// fixed point to `i`; it lies in `(-π, π]`. Only `|angle|` enters any bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticDatum {
    pub fixed: UhpPoint,
    pub angle: f64,
    pub order: Order,
}

/// An orientation-preserving isometry of ℍ, stored as a canonical
/// representative of `±[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds an element from matrix entries, rescaling by `1/√det` and
    /// fixing the sign.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let det = a * d - b * c;
        if det <= 0.0 || !det.is_finite() {
            return Err(GeometryError::NonPositiveDeterminant { det });
        }
        Ok(Self::normalized([a, b, c, d]))
    }

    pub fn identity() -> Self {
        Self::IDENTITY
    }

    /// z ↦ z + t
    pub fn translation(t: f64) -> Self {
        Self::canonical_from([1.0, t, 0.0, 1.0])
    }

    /// z ↦ k z, `k > 0`.
    pub fn dilation(k: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(GeometryError::BadParameter(format!("dilation factor {k}")));
        }
        let s = k.sqrt();
        Ok(Self::canonical_from([s, 0.0, 0.0, 1.0 / s]))
    }

    /// The affine map z ↦ y z + x sending `i` to `p`.
    pub fn sending_i_to(p: UhpPoint) -> Self {
        let s = p.y.sqrt();
        Self::canonical_from([s, p.x / s, 0.0, 1.0 / s])
    }

    /// Rotation about `i` by `angle` (counterclockwise).
    pub fn rotation_about_i(angle: f64) -> Self {
        let (s, c) = (angle / 2.0).sin_cos();
        Self::canonical_from([c, s, -s, c])
    }

    fn normalized(m: [f64; 4]) -> Self {
        let det = m[0] * m[3] - m[1] * m[2];
        let k = det.sqrt().recip();
        Self::canonical_from([m[0] * k, m[1] * k, m[2] * k, m[3] * k])
    }

    fn canonical_from(m: [f64; 4]) -> Self {
        // adding 0.0 clears negative zeros so equal matrices print alike
        let [a, b, c, d] = m.map(|v| v + 0.0);
        let flip = if (a + d).abs() > tol::TRACE_ZERO {
            a + d < 0.0
        } else {
            [b, c, a]
                .into_iter()
                .find(|v| v.abs() > tol::ENTRY_ZERO)
                .is_some_and(|v| v < 0.0)
        };
        if flip {
            Self {
                a: -a + 0.0,
                b: -b + 0.0,
                c: -c + 0.0,
                d: -d + 0.0,
            }
        } else {
            Self { a, b, c, d }
        }
    }

    /// Re-applies the sign rule. Exactly idempotent.
    pub fn canonical(self) -> Self {
        Self::canonical_from(self.entries())
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// `self ∘ other`: apply `other` first.
    ///
    /// The product of unimodular matrices is unimodular up to rounding, so
    /// it is not rescaled: for large entries the computed determinant
    /// cancels badly and dividing by its root would add more error than it
    /// removes.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        Self::canonical_from([
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        ])
    }

    pub fn inverse(&self) -> GroupElement {
        Self::canonical_from([self.d, -self.b, -self.c, self.a])
    }

    /// `γ ∘ self ∘ γ⁻¹`.
    pub fn conjugate_by(&self, gamma: &GroupElement) -> GroupElement {
        gamma.compose(self).compose(&gamma.inverse())
    }

    pub fn pow(&self, n: i64) -> GroupElement {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut acc = Self::IDENTITY;
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        acc
    }

    /// Entry-wise comparison of canonical representatives.
    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        self.entries()
            .iter()
            .zip(other.entries())
            .all(|(x, y)| (x - y).abs() <= tol)
    }

    /// Total order on canonical entries, used to sort enumerations.
    pub fn cmp_entries(&self, other: &GroupElement) -> Ordering {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(x, y)| x.total_cmp(&y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Möbius action `(az + b) / (cz + d)`.
    ///
    /// Infallible for unimodular matrices and points with `y > 0`; use
    /// [`GroupElement::checked_apply`] when the input may be degenerate.
    pub fn apply(&self, z: UhpPoint) -> UhpPoint {
        let (re, im) = self.action_parts(z);
        UhpPoint { x: re, y: im }
    }

    pub fn checked_apply(&self, z: UhpPoint) -> Result<UhpPoint> {
        let den_re = self.c * z.x + self.d;
        let den_im = self.c * z.y;
        let modulus = den_re.hypot(den_im);
        if modulus < 1e-300 {
            return Err(GeometryError::Overflow { modulus });
        }
        let (re, im) = self.action_parts(z);
        UhpPoint::new(re, im)
    }

    fn action_parts(&self, z: UhpPoint) -> (f64, f64) {
        let num_re = self.a * z.x + self.b;
        let num_im = self.a * z.y;
        let den_re = self.c * z.x + self.d;
        let den_im = self.c * z.y;
        let n2 = den_re * den_re + den_im * den_im;
        let re = (num_re * den_re + num_im * den_im) / n2;
        // Im part equals det·y / |cz+d|², with det = 1.
        let im = z.y / n2;
        (re, im)
    }

    pub fn apply_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => {
                if self.c == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(self.a / self.c)
                }
            }
            BoundaryPoint::Finite(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite((self.a * x + self.b) / den)
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&Self::IDENTITY, tol::CLASS)
    }

    pub fn classify(&self) -> ElementClass {
        if self.is_identity() {
            return ElementClass::Identity;
        }
        let t = self.trace().abs();
        if t < 2.0 - tol::CLASS {
            ElementClass::Elliptic
        } else if (t - 2.0).abs() <= tol::CLASS {
            ElementClass::Parabolic
        } else {
            ElementClass::Hyperbolic
        }
    }

    pub fn elliptic_datum(&self) -> Result<EllipticDatum> {
        let class = self.classify();
        if class != ElementClass::Elliptic {
            return Err(GeometryError::NotElliptic(class));
        }
        let t = self.trace();
        // 4 - t² = -(a - d)² - 4bc when ad - bc = 1; this form keeps full
        // relative precision for rotations close to the identity
        let amd = self.a - self.d;
        let s = (-amd * amd - 4.0 * self.b * self.c).max(0.0).sqrt();
        // Fixed point: root of c z² + (d - a) z - b = 0 with Im > 0.
        // c ≠ 0 for every elliptic element.
        let fixed = UhpPoint {
            x: amd / (2.0 * self.c) + 0.0,
            y: s / (2.0 * self.c.abs()),
        };
        // Conjugating fixed ↦ i gives [[cos θ/2, sin θ/2], [-sin θ/2, cos θ/2]]
        // whose lower-left entry has the sign of -c.
        let mut angle = -self.c.signum() * 2.0 * s.atan2(t.abs());
        if angle <= -PI || angle > PI {
            angle = PI;
        }
        Ok(EllipticDatum {
            fixed,
            angle,
            order: rotation_order(angle),
        })
    }

    /// The elliptic element with the given fixed point and rotation angle.
    pub fn elliptic_from(fixed: UhpPoint, angle: f64) -> Result<Self> {
        if !angle.is_finite() || angle.abs() > PI {
            return Err(GeometryError::AngleOutOfRange(angle));
        }
        if angle == 0.0 {
            return Err(GeometryError::ZeroAngle);
        }
        let gamma = Self::sending_i_to(fixed);
        Ok(Self::rotation_about_i(angle).conjugate_by(&gamma))
    }

    pub fn translation_length(&self) -> Result<f64> {
        match self.classify() {
            ElementClass::Hyperbolic => Ok(2.0 * (self.trace().abs() / 2.0).acosh()),
            other => Err(GeometryError::NotHyperbolic(other)),
        }
    }

    /// Endpoints of the invariant geodesic, attracting endpoint first.
    pub fn axis(&self) -> Result<(BoundaryPoint, BoundaryPoint)> {
        let class = self.classify();
        if class != ElementClass::Hyperbolic {
            return Err(GeometryError::NotHyperbolic(class));
        }
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if c.abs() < 1e-14 {
            // z ↦ (a/d) z + b/d; finite fixed point b / (d - a).
            let finite = BoundaryPoint::Finite(b / (d - a));
            return Ok(if a.abs() > d.abs() {
                (BoundaryPoint::Infinity, finite)
            } else {
                (finite, BoundaryPoint::Infinity)
            });
        }
        let t = self.trace();
        let r = (t * t - 4.0).sqrt();
        let u = ((a - d) + r) / (2.0 * c);
        let v = ((a - d) - r) / (2.0 * c);
        // g'(u) = 1/(cu + d)²; attracting iff |cu + d| > 1.
        if (c * u + d).abs() > (c * v + d).abs() {
            Ok((BoundaryPoint::Finite(u), BoundaryPoint::Finite(v)))
        } else {
            Ok((BoundaryPoint::Finite(v), BoundaryPoint::Finite(u)))
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Smallest `n ≤ MAX_ORDER` with `n·θ ≡ 0 (mod 2π)` within `n·ORDER_STEP`.
///
/// Only continued-fraction denominators of `|θ|/2π` are tested: any `n`
/// passing the test is close enough to be a convergent (Legendre).
pub fn rotation_order(angle: f64) -> Order {
    let alpha = (angle.abs() / TAU).fract();
    if alpha == 0.0 {
        return Order::Finite(1);
    }
    let closes = |n: u64| {
        let turns = n as f64 * angle.abs() / TAU;
        (turns - turns.round()).abs() * TAU < n as f64 * tol::ORDER_STEP
    };
    let (mut k_prev, mut k) = (1u64, 0u64);
    let mut x = alpha;
    loop {
        let a = x.floor();
        let k_next = a as u64 * k + k_prev;
        if k_next > tol::MAX_ORDER as u64 {
            return Order::Unresolved;
        }
        if k_next >= 1 && closes(k_next) {
            return Order::Finite(k_next as u32);
        }
        k_prev = k;
        k = k_next;
        let frac = x - a;
        if frac < 1e-15 {
            return Order::Unresolved;
        }
        x = frac.recip();
    }
}
