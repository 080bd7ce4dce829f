//! Universal constants, the min-max displacement optimizer, and the
//! inequality checks that make up a verification run.
//!
//! For isometries `g`, `h` define
//!
//! ```text
//! m(z)    = max{ sinh ½ρ(z, gz), sinh ½ρ(z, hz) }
//! M(g, h) = inf_z m(z)
//! ```
//!
//! For a discrete non-elementary pair of elliptics `M(g, h) ≥ C` with
//! `C = √((4cos²(π/7) − 3) / (8cos(π/7) + 7)) ≈ 0.1318`. Evaluated at the
//! fixed point of `g` this forces `sinh ρ(z, w) ≥ C / |sin(θ/2)|`, and with
//! `θ ≤ 2π/3` the elliptic fixed points of such a group are at distance at
//! least `asinh(2C/√3) ≈ 0.1517` from each other.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::elementary::{diagnose_pair, order_two_product_residual};
use crate::error::{GeometryError, Result};
use crate::groups::{EllipticPointSet, GapResult};
use crate::metric::{displacement_identity_residual, half_displacement, GeodesicSegment};
use crate::moebius::{BoundaryPoint, ElementClass, GroupElement, UhpPoint};
use crate::tol;

/// `C = ((4cos²(π/7) − 3) / (8cos(π/7) + 7))^{1/2}`.
pub fn yamada_constant() -> f64 {
    let c = (PI / 7.0).cos();
    ((4.0 * c * c - 3.0) / (8.0 * c + 7.0)).sqrt()
}

/// `2C/√3`: the lower bound on `sinh ρ` for non-elementary pairs.
pub fn theorem_sinh_constant() -> f64 {
    2.0 * yamada_constant() / 3f64.sqrt()
}

/// `asinh(2C/√3)`: the universal lower bound on `ρ`.
pub fn theorem_constant() -> f64 {
    theorem_sinh_constant().asinh()
}

/// `m(z)`, the larger of the two half-displacements.
pub fn minmax_objective(g: &GroupElement, h: &GroupElement, z: UhpPoint) -> f64 {
    half_displacement(g, z).max(half_displacement(h, z))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinMaxResult {
    /// Best `m(z)` found; an upper bound on `M(g, h)`.
    pub value: f64,
    pub argmin: UhpPoint,
    /// Coarse grid spacing, in hyperbolic units along `ln y`.
    pub grid_resolution: f64,
    /// Step size at which local descent stopped.
    pub refined_step: f64,
}

const GRID: usize = 161;
const GEODESIC_SEEDS: usize = 65;
const PAD: f64 = 2.0;

fn project_to_axis(axis: (BoundaryPoint, BoundaryPoint), z: UhpPoint) -> UhpPoint {
    match axis {
        (BoundaryPoint::Finite(u), BoundaryPoint::Infinity)
        | (BoundaryPoint::Infinity, BoundaryPoint::Finite(u)) => UhpPoint {
            x: u,
            y: (z.x - u).hypot(z.y),
        },
        (BoundaryPoint::Finite(u), BoundaryPoint::Finite(v)) => {
            // φ(z) = (z - p)/(z - q) with p > q has det p - q > 0 and
            // sends p ↦ 0, q ↦ ∞
            let (p, q) = if u > v { (u, v) } else { (v, u) };
            let phi = GroupElement::new(1.0, -p, 1.0, -q).expect("distinct endpoints");
            let w = phi.apply(z);
            phi.inverse().apply(UhpPoint {
                x: 0.0,
                y: w.x.hypot(w.y),
            })
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => z,
    }
}

/// Points around which the coarse grid is laid: elliptic fixed points,
/// and for hyperbolic elements the foot of the perpendicular from the
/// other anchors (or from `i`) to the axis.
fn anchors(g: &GroupElement, h: &GroupElement) -> Vec<UhpPoint> {
    let fixed: Vec<UhpPoint> = [g, h]
        .iter()
        .filter_map(|e| e.elliptic_datum().ok().map(|d| d.fixed))
        .collect();
    let reference = fixed.first().copied().unwrap_or(UhpPoint::I);
    let mut out = fixed;
    for e in [g, h] {
        if let Ok(axis) = e.axis() {
            out.push(project_to_axis(axis, reference));
        }
    }
    if out.is_empty() {
        out.push(UhpPoint::I);
    }
    out
}

fn lex_better(a: (f64, UhpPoint), b: (f64, UhpPoint)) -> bool {
    a.0.total_cmp(&b.0)
        .then(a.1.x.total_cmp(&b.1.x))
        .then(a.1.y.total_cmp(&b.1.y))
        .is_lt()
}

/// Compass descent with four directions rotated by `frame`, halving the
/// step after each unsuccessful sweep. Steps are hyperbolic lengths.
fn compass<F: Fn(UhpPoint) -> f64>(
    f: &F,
    mut at: (f64, UhpPoint),
    mut step: f64,
    frame: f64,
) -> (f64, UhpPoint) {
    let dirs: Vec<(f64, f64)> = (0..4)
        .map(|k| (frame + k as f64 * PI / 2.0).sin_cos())
        .map(|(s, c)| (c, s))
        .collect();
    let mut budget = 20_000;
    while step >= tol::DESCENT_STOP && budget > 0 {
        budget -= 1;
        let z = at.1;
        let mut best = at;
        for &(dx, dy) in &dirs {
            let cand = UhpPoint {
                x: z.x + step * z.y * dx,
                y: z.y * (step * dy).exp(),
            };
            let v = f(cand);
            if v < best.0 {
                best = (v, cand);
            }
        }
        if best.0 < at.0 {
            at = best;
        } else {
            step *= 0.5;
        }
    }
    at
}

fn refine<F: Fn(UhpPoint) -> f64>(f: &F, start: (f64, UhpPoint), step0: f64) -> (f64, UhpPoint) {
    const FRAMES: [f64; 4] = [0.0, PI / 8.0, PI / 4.0, 3.0 * PI / 8.0];
    let mut at = start;
    let mut step = step0;
    for _ in 0..50 {
        let before = at.0;
        for frame in FRAMES {
            at = compass(f, at, step, frame);
        }
        if at.0 >= before {
            break;
        }
        step = step0.min(1e-3);
    }
    at
}

/// Golden-section minimization of `m` along the geodesic between two
/// elliptic fixed points. Along that segment `m` is the max of an
/// increasing and a decreasing function, hence unimodal.
fn geodesic_search<F: Fn(UhpPoint) -> f64>(f: &F, seg: &GeodesicSegment) -> (f64, UhpPoint) {
    let eval = |t: f64| {
        let z = seg.point_at(t);
        (f(z), z)
    };
    let mut best = eval(0.0);
    let mut k_best = 0;
    for k in 1..GEODESIC_SEEDS {
        let cand = eval(k as f64 / (GEODESIC_SEEDS - 1) as f64);
        if lex_better(cand, best) {
            best = cand;
            k_best = k;
        }
    }
    let n = (GEODESIC_SEEDS - 1) as f64;
    let mut lo = (k_best.saturating_sub(1)) as f64 / n;
    let mut hi = ((k_best + 1).min(GEODESIC_SEEDS - 1)) as f64 / n;
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (eval(a), eval(b));
    while (hi - lo) * seg.length > 1e-12 {
        if fa.0 <= fb.0 {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = eval(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = eval(b);
        }
    }
    for cand in [fa, fb] {
        if lex_better(cand, best) {
            best = cand;
        }
    }
    best
}

/// Estimates `M(g, h) = inf_z m(z)` by a coarse grid in `(x, ln y)`
/// followed by local descent; for two elliptics the geodesic joining their
/// fixed points is searched as well. The returned value is attained at
/// `argmin`, so it bounds the infimum from above.
pub fn minimize_minmax(g: &GroupElement, h: &GroupElement) -> MinMaxResult {
    let f = |z: UhpPoint| minmax_objective(g, h, z);
    let pts = anchors(g, h);
    let (mut x_lo, mut x_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut l_lo, mut l_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in &pts {
        let dx = p.y * PAD.sinh();
        x_lo = x_lo.min(p.x - dx);
        x_hi = x_hi.max(p.x + dx);
        l_lo = l_lo.min(p.y.ln() - PAD);
        l_hi = l_hi.max(p.y.ln() + PAD);
    }
    let dx = (x_hi - x_lo) / (GRID - 1) as f64;
    let dl = (l_hi - l_lo) / (GRID - 1) as f64;
    let grid_best = (0..GRID)
        .into_par_iter()
        .map(|j| {
            let y = (l_lo + j as f64 * dl).exp();
            let mut best = (f64::INFINITY, UhpPoint::I);
            for i in 0..GRID {
                let z = UhpPoint {
                    x: x_lo + i as f64 * dx,
                    y,
                };
                let cand = (f(z), z);
                if lex_better(cand, best) {
                    best = cand;
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((f64::INFINITY, UhpPoint::I), |a, b| {
            if lex_better(b, a) {
                b
            } else {
                a
            }
        });

    let step0 = dl.max(dx / (l_lo.exp() * 4.0)).min(0.25);
    let mut best = refine(&f, grid_best, step0);

    let (dg, dh) = (g.elliptic_datum(), h.elliptic_datum());
    if let (Ok(dg), Ok(dh)) = (dg, dh) {
        let seed = match GeodesicSegment::new(dg.fixed, dh.fixed) {
            Ok(seg) => geodesic_search(&f, &seg),
            Err(_) => (f(dg.fixed), dg.fixed),
        };
        let cand = refine(&f, seed, 1e-4);
        if lex_better(cand, best) {
            best = cand;
        }
    }

    MinMaxResult {
        value: best.0,
        argmin: best.1,
        grid_resolution: dl,
        refined_step: tol::DESCENT_STOP,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// sinh ½ρ(z, γz) = sinh ρ(z, v)·|sin(θ/2)| for elliptic γ.
    Lemma14,
    /// T_AB = 2ρ(z, w) for order-two A, B.
    Lemma12,
    /// 2cosh ½ρ(z, w) ≥ 1/|sin(θ/2)| on a minimal pair.
    Proposition,
    /// sinh ρ(z, w) ≥ C/|sin(θ/2)| for non-elementary pairs.
    NonElemBound,
    /// M(g, h) ≥ C.
    MardenYamada,
    /// ρ(z, w) ≥ min{l₀/2, asinh(2C/√3)}.
    MainTheorem,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of one inequality `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub claim: Claim,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    pub context: String,
}

impl BoundReport {
    pub fn new(claim: Claim, lhs: f64, rhs: f64, context: impl Into<String>) -> Self {
        Self::with_tolerance(claim, lhs, rhs, tol::REPORT, context)
    }

    pub fn with_tolerance(
        claim: Claim,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        context: impl Into<String>,
    ) -> Self {
        let margin = lhs - rhs;
        Self {
            claim,
            lhs,
            rhs,
            margin,
            pass: margin >= -tolerance,
            context: context.into(),
        }
    }
}

fn smaller_angle(g: &GroupElement, h: &GroupElement) -> Result<f64> {
    let a = g.elliptic_datum()?.angle.abs();
    let b = h.elliptic_datum()?.angle.abs();
    Ok(a.min(b))
}

/// `sinh ρ(z, w) ≥ C / |sin(θ/2)|` for a non-elementary elliptic pair,
/// `θ` the smaller rotation angle.
pub fn check_nonelementary_bound(g: &GroupElement, h: &GroupElement) -> Result<BoundReport> {
    let diag = diagnose_pair(g, h)?;
    if diag.elementary {
        return Err(GeometryError::ElementaryPair);
    }
    let theta = smaller_angle(g, h)?;
    let lhs = diag.fixed_point_distance.sinh();
    let rhs = yamada_constant() / (theta / 2.0).sin().abs();
    Ok(BoundReport::new(
        Claim::NonElemBound,
        lhs,
        rhs,
        format!(
            "orders ({}, {}), rho = {}, theta = {}",
            diag.orders.0, diag.orders.1, diag.fixed_point_distance, theta
        ),
    ))
}

/// `M(g, h) ≥ C` for a non-elementary elliptic pair.
pub fn check_marden_yamada(
    g: &GroupElement,
    h: &GroupElement,
) -> Result<(BoundReport, MinMaxResult)> {
    let diag = diagnose_pair(g, h)?;
    if diag.elementary {
        return Err(GeometryError::ElementaryPair);
    }
    let mm = minimize_minmax(g, h);
    let report = BoundReport::new(
        Claim::MardenYamada,
        mm.value,
        yamada_constant(),
        format!(
            "orders ({}, {}), argmin {}",
            diag.orders.0, diag.orders.1, mm.argmin
        ),
    );
    Ok((report, mm))
}

/// `2cosh(½ d_min) ≥ 1/|sin(θ/2)|` with `θ = 2π / max order` of the pair.
pub fn check_proposition(gap: &GapResult, eps: &EllipticPointSet) -> BoundReport {
    let (i, j) = gap.pair;
    let theta = eps.points[i].angle.min(eps.points[j].angle);
    let lhs = 2.0 * (gap.d_min / 2.0).cosh();
    let rhs = 1.0 / (theta / 2.0).sin().abs();
    BoundReport::new(
        Claim::Proposition,
        lhs,
        rhs,
        format!(
            "d_min = {}, orders ({}, {}), theta = {}",
            gap.d_min, gap.orders.0, gap.orders.1, theta
        ),
    )
}

/// `d_min ≥ min{l₀/2, asinh(2C/√3)}`, with the `l₀/2` term dropped when
/// no elliptic point has order two.
pub fn check_main_theorem(
    gap: &GapResult,
    l0: Option<f64>,
    all_orders_above_two: bool,
) -> Result<BoundReport> {
    let k = theorem_constant();
    let (rhs, context) = if all_orders_above_two {
        (k, format!("all orders > 2; rhs = asinh(2C/sqrt3) = {k}"))
    } else {
        let l0 = l0.ok_or(GeometryError::MissingSystole)?;
        (
            (l0 / 2.0).min(k),
            format!("l0/2 = {}, asinh(2C/sqrt3) = {k}", l0 / 2.0),
        )
    };
    Ok(BoundReport::new(
        Claim::MainTheorem,
        gap.d_min,
        rhs,
        context,
    ))
}

/// Largest displacement-identity residual of `g` over `points`, reported
/// as `contract ≥ residual` with contract 1e-9.
pub fn check_displacement_identity(g: &GroupElement, points: &[UhpPoint]) -> Result<BoundReport> {
    let mut worst = 0.0f64;
    for &z in points {
        worst = worst.max(displacement_identity_residual(g, z)?);
    }
    Ok(BoundReport::new(
        Claim::Lemma14,
        1e-9,
        worst,
        format!("max residual over {} points", points.len()),
    ))
}

/// `|T_AB − 2ρ|` for an order-two pair, reported as `contract ≥ residual`.
pub fn check_order_two_product(a: &GroupElement, b: &GroupElement) -> Result<BoundReport> {
    let r = order_two_product_residual(a, b)?;
    let t = a.compose(b).translation_length()?;
    Ok(BoundReport::new(
        Claim::Lemma12,
        1e-9,
        r,
        format!("T_AB = {t}, residual {r:e}"),
    ))
}

/// True when `classify(g)` is elliptic; used to filter pair checks.
pub fn is_elliptic(g: &GroupElement) -> bool {
    g.classify() == ElementClass::Elliptic
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        certified_min_gap, elliptic_fixed_points, enumerate_elements, modular_group,
        triangle_vertices, EllipticPoint, EnumConfig,
    };
    use crate::metric::distance;

    fn s() -> GroupElement {
        GroupElement::new(0.0, -1.0, 1.0, 0.0).unwrap()
    }
    fn st() -> GroupElement {
        GroupElement::new(0.0, -1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn constants() {
        let c = yamada_constant();
        // mpmath, 40 digits: 0.13184627883660127623...
        assert!((c - 0.131_846_278_836_601_28).abs() < 1e-16);
        assert!(format!("{c}").starts_with("0.1318"));
        let cp = (PI / 7.0).cos();
        assert!((c * c * (8.0 * cp + 7.0) - (4.0 * cp * cp - 3.0)).abs() < 1e-15);
        assert!((theorem_sinh_constant() - 0.152_242_969_155_924_41).abs() < 1e-16);
        assert!((theorem_constant() - 0.151_660_907_291_236_8).abs() < 1e-16);
        assert!((theorem_constant().sinh() - 2.0 * c / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn minmax_same_elliptic_is_zero() {
        let g = GroupElement::elliptic_from(UhpPoint { x: 0.4, y: 0.9 }, 1.0).unwrap();
        let r = minimize_minmax(&g, &g);
        assert!(r.value < 1e-9);
        assert!(distance(r.argmin, UhpPoint { x: 0.4, y: 0.9 }) < 1e-6);
    }

    #[test]
    fn minmax_modular_pair() {
        let r = minimize_minmax(&s(), &st());
        // mpmath: sinh(a) = (√3/2) sinh(ln√3 − a) at a = 0.25541..., value 1/√15
        assert!(
            (r.value - 0.258_198_889_747_161_1).abs() < 1e-9,
            "{}",
            r.value
        );
        assert!((r.value - minmax_objective(&s(), &st(), r.argmin)).abs() < 1e-12);
        // argmin on the connecting geodesic
        let (v, w) = (
            UhpPoint::I,
            UhpPoint {
                x: -0.5,
                y: 0.75f64.sqrt(),
            },
        );
        let d = distance(v, r.argmin) + distance(r.argmin, w) - distance(v, w);
        assert!(d < 1e-6);
    }

    #[test]
    fn minmax_symmetric() {
        let a = minimize_minmax(&s(), &st());
        let b = minimize_minmax(&st(), &s());
        assert!((a.value - b.value).abs() < 1e-9);
    }

    #[test]
    fn minmax_reduction_at_fixed_point() {
        // m(v) = sinh ρ(v, w)·|sin(θ_h/2)| at the fixed point v of g
        let g = s();
        let h = st();
        let v = UhpPoint::I;
        let dh = h.elliptic_datum().unwrap();
        let want = distance(v, dh.fixed).sinh() * (dh.angle / 2.0).sin().abs();
        assert!((minmax_objective(&g, &h, v) - want).abs() < 1e-9);
        assert!((want - 1.0 / 3f64.sqrt() * 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn nonelementary_modular() {
        let r = check_nonelementary_bound(&s(), &st()).unwrap();
        assert!((r.lhs - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((r.rhs - 0.152_242_969_155_924_41).abs() < 1e-12);
        assert!(r.pass);
        assert_eq!(
            check_nonelementary_bound(&s(), &s()),
            Err(GeometryError::ElementaryPair)
        );
        let f = GroupElement::new(1.0, -1.0, 2.0, -1.0).unwrap();
        assert_eq!(
            check_nonelementary_bound(&s(), &f),
            Err(GeometryError::ElementaryPair)
        );
    }

    #[test]
    fn nonelementary_237() {
        let g = crate::groups::triangle_group(2, 3, 7).unwrap();
        let r = check_nonelementary_bound(&g.generators[1], &g.generators[2]).unwrap();
        // mpmath: C/sin(π/7), sinh of the side between the order-3 and order-7 vertices
        assert!((r.rhs - 0.303_874_671_829_723_4).abs() < 1e-12);
        assert!((r.lhs - 0.661_296_985_834_838_3).abs() < 1e-12);
        assert!(r.pass);
        let [_, v2, v3] = triangle_vertices(2, 3, 7).unwrap();
        assert!((distance(v2, v3).sinh() - r.lhs).abs() < 1e-12);
    }

    fn modular_setup() -> (EllipticPointSet, GapResult) {
        let cfg = EnumConfig::new(8, 3.0).unwrap();
        let els = enumerate_elements(&modular_group(), &cfg).unwrap();
        let eps = elliptic_fixed_points(&els, &cfg);
        let gap = certified_min_gap(&eps).unwrap();
        (eps, gap)
    }

    #[test]
    fn proposition_modular() {
        let (eps, gap) = modular_setup();
        let r = check_proposition(&gap, &eps);
        // mpmath: 2cosh(ln√3 / 2) = 2.07590969860408..., 1/sin(π/3) = 1.15470053837925...
        assert!((r.lhs - 2.075_909_698_604_085).abs() < 1e-9);
        assert!((r.rhs - 1.154_700_538_379_251_5).abs() < 1e-12);
        assert!(r.pass);
    }

    #[test]
    fn proposition_synthetic_violation() {
        let mk = |y: f64| EllipticPoint {
            point: UhpPoint { x: 0.0, y },
            order: 7,
            angle: 2.0 * PI / 7.0,
            element: GroupElement::elliptic_from(UhpPoint { x: 0.0, y }, 2.0 * PI / 7.0).unwrap(),
        };
        let eps = EllipticPointSet {
            points: vec![mk(1.0), mk(0.01f64.exp())],
            ball_radius: 3.0,
        };
        let gap = crate::groups::min_elliptic_gap(&eps, 0.0).unwrap();
        assert!((gap.d_min - 0.01).abs() < 1e-15);
        let r = check_proposition(&gap, &eps);
        assert!((r.rhs - 2.304_764_870_962_486_5).abs() < 1e-12);
        assert!((r.lhs - 2.000_025_000_052_083_4).abs() < 1e-12);
        assert!(!r.pass);
    }

    #[test]
    fn proposition_order_two_is_trivial() {
        let gap = GapResult {
            d_min: 0.3,
            pair: (0, 1),
            orders: (2, 2),
            points: (
                UhpPoint::I,
                UhpPoint {
                    x: 0.0,
                    y: 0.3f64.exp(),
                },
            ),
            margin: 1.0,
            interior_certified: true,
        };
        let mk = |p: UhpPoint| EllipticPoint {
            point: p,
            order: 2,
            angle: PI,
            element: GroupElement::elliptic_from(p, PI).unwrap(),
        };
        let eps = EllipticPointSet {
            points: vec![mk(gap.points.0), mk(gap.points.1)],
            ball_radius: 3.0,
        };
        let r = check_proposition(&gap, &eps);
        assert!((r.rhs - 1.0).abs() < 1e-15 && r.lhs >= 2.0 && r.pass);
    }

    #[test]
    fn main_theorem_modular() {
        let (_, gap) = modular_setup();
        let l0 = 2.0 * 1.5f64.acosh();
        let r = check_main_theorem(&gap, Some(l0), false).unwrap();
        assert_eq!(r.rhs, theorem_constant());
        assert!((r.margin - (0.549_306_144_334_054_8 - 0.151_660_907_291_236_8)).abs() < 1e-9);
        assert!(r.pass);
        assert_eq!(
            check_main_theorem(&gap, None, false),
            Err(GeometryError::MissingSystole)
        );
        let r = check_main_theorem(&gap, None, true).unwrap();
        assert_eq!(r.rhs, theorem_constant());
    }

    #[test]
    fn main_theorem_short_systole_branch() {
        let (_, gap) = modular_setup();
        let r = check_main_theorem(&gap, Some(0.1), false).unwrap();
        assert!((r.rhs - 0.05).abs() < 1e-15);
    }

    #[test]
    fn report_tolerance() {
        let r = BoundReport::new(Claim::Proposition, 1.0, 1.0 + 5e-7, "");
        assert!(r.pass);
        let r = BoundReport::new(Claim::Proposition, 1.0, 1.0 + 2e-6, "");
        assert!(!r.pass);
    }

    #[test]
    fn lemma_reports() {
        let pts = [UhpPoint::I, UhpPoint { x: 2.0, y: 0.3 }];
        assert!(check_displacement_identity(&st(), &pts).unwrap().pass);
        let f = GroupElement::new(1.0, -1.0, 2.0, -1.0).unwrap();
        let r = check_order_two_product(&s(), &f).unwrap();
        assert!(r.pass && r.rhs < 1e-12);
    }
}
