//! Preset Fuchsian groups, word enumeration, and the elliptic fixed points
//! they expose inside a hyperbolic ball around `i`.

use std::collections::HashMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::metric::distance;
use crate::moebius::{ElementClass, GroupElement, Order, UhpPoint};
use crate::tol;

/// A named generating set for a discrete group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupPreset {
    pub name: String,
    pub generators: Vec<GroupElement>,
    /// Primitive elliptic elements whose pairs feed the two-generator checks.
    pub elliptic_generators: Vec<GroupElement>,
    pub known_discrete: bool,
    /// Orders of the maximal elliptic cyclic subgroups.
    pub known_orders: Vec<u32>,
    pub notes: String,
}

impl GroupPreset {
    pub fn all_orders_above_two(&self) -> bool {
        self.known_orders.iter().all(|&n| n > 2)
    }
}

/// z ↦ -1/z
fn s_matrix() -> GroupElement {
    GroupElement::new(0.0, -1.0, 1.0, 0.0).expect("unimodular")
}

/// PSL(2, ℤ) generated by `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]`.
pub fn modular_group() -> GroupPreset {
    let s = s_matrix();
    let t = GroupElement::translation(1.0);
    GroupPreset {
        name: "modular".into(),
        generators: vec![s, t],
        elliptic_generators: vec![s, s.compose(&t)],
        known_discrete: true,
        known_orders: vec![2, 3],
        notes: "PSL(2,Z); S has order 2 at i, ST order 3 at (-1+i√3)/2".into(),
    }
}

/// Hecke group generated by `S` and `z ↦ z + 2cos(π/q)`.
pub fn hecke_group(q: u32) -> Result<GroupPreset> {
    if q < 3 {
        return Err(GeometryError::BadParameter(format!(
            "Hecke group needs q >= 3, got {q}"
        )));
    }
    let lambda = if q == 3 {
        1.0
    } else {
        2.0 * (PI / q as f64).cos()
    };
    let s = s_matrix();
    let t = GroupElement::translation(lambda);
    Ok(GroupPreset {
        name: format!("hecke:{q}"),
        generators: vec![s, t],
        elliptic_generators: vec![s, s.compose(&t)],
        known_discrete: true,
        known_orders: vec![2, q],
        notes: format!("translation length λ = 2cos(π/{q}) = {lambda}"),
    })
}

/// Side length opposite the angle `gamma` of a hyperbolic triangle with
/// angles `alpha`, `beta`, `gamma`.
pub fn triangle_side(alpha: f64, beta: f64, gamma: f64) -> f64 {
    ((alpha.cos() * beta.cos() + gamma.cos()) / (alpha.sin() * beta.sin())).acosh()
}

/// Vertices of the triangle with angles π/p, π/q, π/r, placed with the
/// first vertex at `i`, the second straight above it, and the third to
/// the left so that the vertices run counterclockwise.
pub fn triangle_vertices(p: u32, q: u32, r: u32) -> Result<[UhpPoint; 3]> {
    check_signature(p, q, r)?;
    let (alpha, beta, gamma) = (PI / p as f64, PI / q as f64, PI / r as f64);
    let c = triangle_side(alpha, beta, gamma);
    let b = triangle_side(alpha, gamma, beta);
    let v1 = UhpPoint::I;
    let v2 = UhpPoint { x: 0.0, y: c.exp() };
    let v3 = GroupElement::rotation_about_i(alpha).apply(UhpPoint { x: 0.0, y: b.exp() });
    Ok([v1, v2, v3])
}

fn check_signature(p: u32, q: u32, r: u32) -> Result<()> {
    if p < 2 || q < 2 || r < 2 {
        return Err(GeometryError::NotHyperbolicSignature(p, q, r));
    }
    // 1/p + 1/q + 1/r < 1  ⇔  qr + pr + pq < pqr
    let (p64, q64, r64) = (p as u64, q as u64, r as u64);
    if q64 * r64 + p64 * r64 + p64 * q64 >= p64 * q64 * r64 {
        return Err(GeometryError::NotHyperbolicSignature(p, q, r));
    }
    Ok(())
}

/// Orientation-preserving (p, q, r) triangle group.
///
/// Generators `x`, `y`, `z` rotate by 2π/p, 2π/q, 2π/r about the three
/// vertices; each is a product of reflections in two sides, which gives
/// `x y z = 1`.
pub fn triangle_group(p: u32, q: u32, r: u32) -> Result<GroupPreset> {
    let [v1, v2, v3] = triangle_vertices(p, q, r)?;
    let rot = |v: UhpPoint, n: u32| GroupElement::elliptic_from(v, 2.0 * PI / n as f64);
    let gens = vec![rot(v1, p)?, rot(v2, q)?, rot(v3, r)?];
    let mut known_orders = vec![p, q, r];
    known_orders.sort_unstable();
    known_orders.dedup();
    Ok(GroupPreset {
        name: format!("triangle:{p},{q},{r}"),
        generators: gens.clone(),
        elliptic_generators: gens,
        known_discrete: true,
        known_orders,
        notes: format!("vertices {v1}, {v2}, {v3}"),
    })
}

/// Parses `modular`, `hecke:q` or `triangle:p,q,r`.
pub fn parse_preset(spec: &str) -> Result<GroupPreset> {
    let spec = spec.trim();
    let unknown = || GeometryError::UnknownPreset(spec.to_string());
    if spec == "modular" {
        return Ok(modular_group());
    }
    let (kind, args) = spec.split_once(':').ok_or_else(unknown)?;
    let nums = args
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| unknown())?;
    match (kind, nums.as_slice()) {
        ("hecke", [q]) => hecke_group(*q),
        ("triangle", [p, q, r]) => triangle_group(*p, *q, *r),
        _ => Err(unknown()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnumConfig {
    pub max_word_length: usize,
    /// Hyperbolic radius of the ball about `i`.
    pub ball_radius: f64,
    /// Hyperbolic distance under which fixed points merge.
    pub dedup_tol: f64,
    /// Entry-wise tolerance for identifying matrices.
    pub matrix_tol: f64,
    pub word_cap: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            max_word_length: 10,
            ball_radius: 3.0,
            dedup_tol: tol::POINT_DEDUP,
            matrix_tol: tol::MATRIX_DEDUP,
            word_cap: tol::WORD_CAP,
        }
    }
}

impl EnumConfig {
    pub fn new(max_word_length: usize, ball_radius: f64) -> Result<Self> {
        let cfg = Self {
            max_word_length,
            ball_radius,
            ..Self::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_word_length < 1 {
            return Err(GeometryError::BadParameter(
                "max_word_length must be >= 1".into(),
            ));
        }
        if !(self.ball_radius > 0.0 && self.ball_radius.is_finite()) {
            return Err(GeometryError::BadParameter(format!(
                "ball_radius must be positive, got {}",
                self.ball_radius
            )));
        }
        if !(self.dedup_tol > 0.0 && self.matrix_tol > 0.0) {
            return Err(GeometryError::BadParameter(
                "tolerances must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Approximate set of matrices keyed by a coarse grid on the entries.
/// Matches within `tol` always share a cell or sit in adjacent cells near
/// a cell boundary, so only those cells are probed.
struct ElementIndex {
    tol: f64,
    cells: HashMap<[i64; 4], Vec<usize>>,
    items: Vec<GroupElement>,
}

const CELL: f64 = 1e-6;

impl ElementIndex {
    fn new(tol: f64) -> Self {
        Self {
            tol,
            cells: HashMap::new(),
            items: Vec::new(),
        }
    }

    fn cell(g: &GroupElement) -> [i64; 4] {
        g.entries().map(|v| (v / CELL).floor() as i64)
    }

    fn contains(&self, g: &GroupElement) -> bool {
        let entries = g.entries();
        let mut offsets = [[0i64; 3]; 4];
        let mut counts = [1usize; 4];
        for (k, v) in entries.iter().enumerate() {
            let f = v / CELL;
            let frac = f - f.floor();
            if frac < 0.01 {
                offsets[k][counts[k]] = -1;
                counts[k] += 1;
            }
            if frac > 0.99 {
                offsets[k][counts[k]] = 1;
                counts[k] += 1;
            }
        }
        let base = Self::cell(g);
        for i0 in 0..counts[0] {
            for i1 in 0..counts[1] {
                for i2 in 0..counts[2] {
                    for i3 in 0..counts[3] {
                        let key = [
                            base[0] + offsets[0][i0],
                            base[1] + offsets[1][i1],
                            base[2] + offsets[2][i2],
                            base[3] + offsets[3][i3],
                        ];
                        if let Some(ids) = self.cells.get(&key) {
                            if ids.iter().any(|&i| self.items[i].approx_eq(g, self.tol)) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// Inserts unless already present; returns whether it was new.
    fn insert(&mut self, g: GroupElement) -> bool {
        if self.contains(&g) {
            return false;
        }
        self.cells
            .entry(Self::cell(&g))
            .or_default()
            .push(self.items.len());
        self.items.push(g);
        true
    }
}

/// Breadth-first products of generators and their inverses up to
/// `max_word_length`, keeping elements that move `i` by at most
/// `2·ball_radius`. The result is sorted by canonical entries and always
/// contains the identity.
///
/// The frontier is not pruned by the radius, so the kept set is exactly
/// the ball-restricted word ball and is closed under inversion.
pub fn enumerate_elements(preset: &GroupPreset, cfg: &EnumConfig) -> Result<Vec<GroupElement>> {
    cfg.validate()?;
    let mut alphabet = ElementIndex::new(cfg.matrix_tol);
    for g in &preset.generators {
        alphabet.insert(*g);
        alphabet.insert(g.inverse());
    }
    let alphabet = alphabet.items;

    let mut seen = ElementIndex::new(cfg.matrix_tol);
    seen.insert(GroupElement::IDENTITY);
    let mut frontier = vec![GroupElement::IDENTITY];
    for _ in 0..cfg.max_word_length {
        let products: Vec<GroupElement> = frontier
            .par_iter()
            .flat_map_iter(|w| alphabet.iter().map(move |g| w.compose(g)))
            .collect();
        let mut next = Vec::new();
        for p in products {
            if seen.insert(p) {
                next.push(p);
                if seen.items.len() > cfg.word_cap {
                    return Err(GeometryError::BudgetExceeded { cap: cfg.word_cap });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    let limit = 2.0 * cfg.ball_radius;
    let mut kept: Vec<GroupElement> = seen
        .items
        .into_iter()
        .filter(|g| distance(UhpPoint::I, g.apply(UhpPoint::I)) <= limit)
        .collect();
    kept.sort_by(|a, b| a.cmp_entries(b));
    Ok(kept)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticPoint {
    pub point: UhpPoint,
    /// Largest order among enumerated elements fixing the point.
    pub order: u32,
    /// `2π / order`.
    pub angle: f64,
    /// An enumerated element rotating by `+2π/order` about the point
    /// (or the closest available angle).
    pub element: GroupElement,
}

/// Elliptic fixed points inside the ball `B(i, ball_radius)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticPointSet {
    pub points: Vec<EllipticPoint>,
    pub ball_radius: f64,
}

impl EllipticPointSet {
    pub fn depth(&self, k: usize) -> f64 {
        self.ball_radius - distance(UhpPoint::I, self.points[k].point)
    }

    pub fn orders(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.points.iter().map(|p| p.order).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Collects one entry per distinct elliptic fixed point inside the ball.
pub fn elliptic_fixed_points(elements: &[GroupElement], cfg: &EnumConfig) -> EllipticPointSet {
    struct Acc {
        point: UhpPoint,
        order: u32,
        angle: f64,
        element: GroupElement,
    }
    // sorted by x for windowed lookup; |Δx| ≤ y·d for hyperbolic distance d ≪ 1
    let mut acc: Vec<Acc> = Vec::new();
    for g in elements {
        if g.classify() != ElementClass::Elliptic {
            continue;
        }
        let Ok(datum) = g.elliptic_datum() else {
            continue;
        };
        let Order::Finite(order) = datum.order else {
            continue;
        };
        let v = datum.fixed;
        if distance(UhpPoint::I, v) > cfg.ball_radius {
            continue;
        }
        let window = 1.01 * v.y * cfg.dedup_tol.sinh() * 2.0 + 1e-15;
        let lo = acc.partition_point(|a| a.point.x < v.x - window);
        let hit = acc[lo..]
            .iter()
            .take_while(|a| a.point.x <= v.x + window)
            .position(|a| distance(a.point, v) < cfg.dedup_tol)
            .map(|k| k + lo);
        let target = 2.0 * PI / order as f64;
        match hit {
            Some(k) => {
                let a = &mut acc[k];
                let better_angle = (datum.angle - target).abs() < (a.angle - target).abs();
                if order > a.order || (order == a.order && better_angle) {
                    a.order = order;
                    a.angle = datum.angle;
                    a.element = *g;
                }
            }
            None => {
                let at = acc.partition_point(|a| a.point.x < v.x);
                acc.insert(
                    at,
                    Acc {
                        point: v,
                        order,
                        angle: datum.angle,
                        element: *g,
                    },
                );
            }
        }
    }
    let mut points: Vec<EllipticPoint> = acc
        .into_iter()
        .map(|a| EllipticPoint {
            point: a.point,
            order: a.order,
            angle: 2.0 * PI / a.order as f64,
            element: a.element,
        })
        .collect();
    points.sort_by(|p, q| {
        let dp = distance(UhpPoint::I, p.point);
        let dq = distance(UhpPoint::I, q.point);
        dp.total_cmp(&dq)
            .then(p.point.x.total_cmp(&q.point.x))
            .then(p.point.y.total_cmp(&q.point.y))
    });
    EllipticPointSet {
        points,
        ball_radius: cfg.ball_radius,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapResult {
    pub d_min: f64,
    /// Indices into the point set.
    pub pair: (usize, usize),
    pub orders: (u32, u32),
    pub points: (UhpPoint, UhpPoint),
    /// Pairs were restricted to points at least this deep inside the ball.
    pub margin: f64,
    /// `margin ≥ d_min`: every neighbor closer than `d_min` to either point
    /// lies inside the ball, so truncation cannot hide a closer pair.
    pub interior_certified: bool,
}

/// Brute-force minimum over pairs of points lying at least `margin`
/// inside the ball.
pub fn min_elliptic_gap(eps: &EllipticPointSet, margin: f64) -> Result<GapResult> {
    let interior: Vec<usize> = (0..eps.points.len())
        .filter(|&k| eps.depth(k) >= margin)
        .collect();
    if interior.len() < 2 {
        return Err(GeometryError::InsufficientPoints(interior.len()));
    }
    let mut best = (f64::INFINITY, 0, 0);
    for (n, &i) in interior.iter().enumerate() {
        for &j in &interior[n + 1..] {
            let d = distance(eps.points[i].point, eps.points[j].point);
            if d < best.0 {
                best = (d, i, j);
            }
        }
    }
    let (d_min, i, j) = best;
    let (pi, pj) = (&eps.points[i], &eps.points[j]);
    Ok(GapResult {
        d_min,
        pair: (i, j),
        orders: (pi.order, pj.order),
        points: (pi.point, pj.point),
        margin,
        interior_certified: margin + 1e-12 >= d_min,
    })
}

/// Minimal gap with the margin set to the unrestricted minimum, applied once.
pub fn certified_min_gap(eps: &EllipticPointSet) -> Result<GapResult> {
    let first = min_elliptic_gap(eps, 0.0)?;
    match min_elliptic_gap(eps, first.d_min) {
        Ok(g) => Ok(g),
        Err(GeometryError::InsufficientPoints(_)) => Ok(first),
        Err(e) => Err(e),
    }
}

/// Smallest translation length among enumerated hyperbolic elements.
///
/// An upper bound on the systole that becomes exact once the word length
/// reaches a shortest closed geodesic's realization.
pub fn systole_estimate(elements: &[GroupElement]) -> Result<f64> {
    elements
        .iter()
        .filter_map(|g| g.translation_length().ok())
        .min_by(|a, b| a.total_cmp(b))
        .ok_or(GeometryError::NoHyperbolicElements)
}
