#![allow(dead_code)]

use std::f64::consts::PI;

use fgap_core::{GroupElement, UhpPoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in [-10, 10], kept only when det ≥ 1 so the unimodular
/// rescaling stays well conditioned.
pub fn element(r: &mut impl Rng) -> GroupElement {
    loop {
        let m: [f64; 4] = std::array::from_fn(|_| r.random_range(-10.0..=10.0));
        if m[0] * m[3] - m[1] * m[2] >= 1.0 {
            return GroupElement::new(m[0], m[1], m[2], m[3]).unwrap();
        }
    }
}

/// A point with |x| ≤ 5 and ln y ∈ [-3, 3].
pub fn point(r: &mut impl Rng) -> UhpPoint {
    UhpPoint::new(
        r.random_range(-5.0..=5.0),
        r.random_range(-3.0f64..=3.0).exp(),
    )
    .unwrap()
}

/// Half the draws use 2π/n for n in 2..=12, the rest are uniform in (0, π].
pub fn angle(r: &mut impl Rng) -> f64 {
    let a = if r.random_bool(0.5) {
        2.0 * PI / r.random_range(2..=12) as f64
    } else {
        PI * (1.0 - r.random::<f64>())
    };
    if r.random_bool(0.5) {
        -a
    } else {
        a
    }
}

/// A point at hyperbolic distance at most `radius` from `center`.
pub fn point_near(r: &mut impl Rng, center: UhpPoint, radius: f64) -> UhpPoint {
    let s = r.random_range(0.0..=radius);
    let phi = r.random_range(-PI..PI);
    let w = GroupElement::rotation_about_i(phi).apply(UhpPoint { x: 0.0, y: s.exp() });
    GroupElement::sending_i_to(center).apply(w)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

/// Equality in PSL(2, R): entries agree up to a common sign.
pub fn elements_close(g: &GroupElement, h: &GroupElement, tol: f64) -> bool {
    let (a, b) = (g.entries(), h.entries());
    a.iter().zip(b).all(|(x, y)| close(*x, y, tol))
        || a.iter().zip(b).all(|(x, y)| close(*x, -y, tol))
}

/// Elliptic element with fixed point in the radius-3 ball about `i`. Far
/// outside that ball the matrix entries grow like e^ρ and `cz + d` cancels,
/// so absolute residuals there measure conditioning rather than geometry.
pub fn elliptic(r: &mut impl Rng, theta: f64) -> GroupElement {
    GroupElement::elliptic_from(point_near(r, UhpPoint::I, 3.0), theta).unwrap()
}
