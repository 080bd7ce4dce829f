//! End-to-end verification runs and their serialized reports.
//!
//! JSON keys are a stable interface: `preset`, `d_min`, `systole_estimate`,
//! `systole_depth`, and `checks[]` with `claim`, `lhs`, `rhs`, `margin`,
//! `pass`. Floats are written in shortest round-trip form. The CSV output
//! is the same JSON document flattened to `key,value` rows, so both carry
//! identical numbers.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::{
    check_displacement_identity, check_main_theorem, check_marden_yamada,
    check_nonelementary_bound, check_order_two_product, check_proposition, BoundReport,
};
use crate::elementary::diagnose_pair;
use crate::error::{GeometryError, Result};
use crate::groups::{
    certified_min_gap, elliptic_fixed_points, enumerate_elements, parse_preset, systole_estimate,
    EllipticPoint, EllipticPointSet, EnumConfig, GapResult,
};
use crate::metric::distance;
use crate::moebius::{BoundaryPoint, ElementClass, GroupElement, Order, UhpPoint};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            other => Err(GeometryError::BadParameter(format!(
                "unknown format {other:?}"
            ))),
        }
    }
}

/// Every tolerance a run depends on, echoed into the report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub class: f64,
    pub order_step: f64,
    pub max_order: u32,
    pub coincide: f64,
    pub point_dedup: f64,
    pub matrix_dedup: f64,
    pub report: f64,
    pub descent_stop: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            class: tol::CLASS,
            order_step: tol::ORDER_STEP,
            max_order: tol::MAX_ORDER,
            coincide: tol::COINCIDE,
            point_dedup: tol::POINT_DEDUP,
            matrix_dedup: tol::MATRIX_DEDUP,
            report: tol::REPORT,
            descent_stop: tol::DESCENT_STOP,
        }
    }
}

impl Tolerances {
    /// Names accepted by [`Tolerances::apply_override`].
    pub const OVERRIDABLE: [&'static str; 3] = ["report", "point_dedup", "matrix_dedup"];

    pub fn apply_override(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(GeometryError::BadParameter(format!(
                "tolerance {name} must be positive, got {value}"
            )));
        }
        match name {
            "report" => self.report = value,
            "point_dedup" => self.point_dedup = value,
            "matrix_dedup" => self.matrix_dedup = value,
            _ => {
                return Err(GeometryError::BadParameter(format!(
                    "tolerance {name:?} cannot be overridden (allowed: {})",
                    Self::OVERRIDABLE.join(", ")
                )))
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub preset: String,
    pub max_word_length: usize,
    pub ball_radius: f64,
    pub output_format: OutputFormat,
    pub svg_path: Option<PathBuf>,
    pub tolerance_overrides: BTreeMap<String, f64>,
}

impl RunConfig {
    pub fn new(preset: impl Into<String>) -> Self {
        Self {
            preset: preset.into(),
            max_word_length: 10,
            ball_radius: 3.0,
            output_format: OutputFormat::Json,
            svg_path: None,
            tolerance_overrides: BTreeMap::new(),
        }
    }

    pub fn tolerances(&self) -> Result<Tolerances> {
        let mut t = Tolerances::default();
        for (k, v) in &self.tolerance_overrides {
            t.apply_override(k, *v)?;
        }
        Ok(t)
    }

    pub fn enum_config(&self) -> Result<EnumConfig> {
        let t = self.tolerances()?;
        let cfg = EnumConfig {
            max_word_length: self.max_word_length,
            ball_radius: self.ball_radius,
            dedup_tol: t.point_dedup,
            matrix_tol: t.matrix_dedup,
            ..EnumConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub preset: String,
    pub max_word_length: usize,
    pub ball_radius: f64,
    pub element_count: usize,
    pub elliptic_point_count: usize,
    pub orders_found: Vec<u32>,
    pub d_min: Option<f64>,
    pub gap: Option<GapResult>,
    pub systole_estimate: Option<f64>,
    pub systole_depth: usize,
    pub systole_label: String,
    pub checks: Vec<BoundReport>,
    pub not_applicable: Vec<String>,
    pub warnings: Vec<String>,
    pub pass: bool,
    pub tolerances: Tolerances,
}

impl VerifyReport {
    /// 0 when every applicable check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => Ok(self.to_text()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| GeometryError::Io(e.to_string()))
    }

    pub fn to_csv(&self) -> Result<String> {
        to_csv(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "preset            {}", self.preset);
        let _ = writeln!(
            s,
            "enumeration       depth {}, radius {}",
            self.max_word_length, self.ball_radius
        );
        let _ = writeln!(s, "elements          {}", self.element_count);
        let _ = writeln!(
            s,
            "elliptic points   {} (orders {:?})",
            self.elliptic_point_count, self.orders_found
        );
        match &self.gap {
            Some(g) => {
                let _ = writeln!(
                    s,
                    "d_min             {} between orders {} and {}{}",
                    g.d_min,
                    g.orders.0,
                    g.orders.1,
                    if g.interior_certified {
                        ""
                    } else {
                        " (not interior-certified)"
                    }
                );
            }
            None => {
                let _ = writeln!(s, "d_min             n/a");
            }
        }
        match self.systole_estimate {
            Some(l) => {
                let _ = writeln!(s, "systole           {l} [{}]", self.systole_label);
            }
            None => {
                let _ = writeln!(s, "systole           n/a");
            }
        }
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {:<13} lhs {:<24} rhs {:<24} margin {:<24} {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.claim.to_string(),
                num(c.lhs),
                num(c.rhs),
                num(c.margin),
                c.context
            );
        }
        for n in &self.not_applicable {
            let _ = writeln!(s, "n/a  {n}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warn {w}");
        }
        let _ = writeln!(
            s,
            "overall           {}",
            if self.pass { "PASS" } else { "FAIL" }
        );
        s
    }
}

// shortest round-trip digits, exponent form for very small magnitudes
fn num(v: f64) -> String {
    if v != 0.0 && v.abs() < 1e-4 {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

/// Any serializable record as `key,value` rows, nested keys joined by `.`.
pub fn to_csv<T: Serialize>(value: &T) -> Result<String> {
    let value = serde_json::to_value(value).map_err(|e| GeometryError::Io(e.to_string()))?;
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| GeometryError::Io(e.to_string());
    w.write_record(["key", "value"]).map_err(io)?;
    for (k, v) in rows {
        w.write_record([k, v]).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| GeometryError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| GeometryError::Io(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| GeometryError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// One `key  value` line per flattened field.
pub fn to_text<T: Serialize>(value: &T) -> Result<String> {
    let value = serde_json::to_value(value).map_err(|e| GeometryError::Io(e.to_string()))?;
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows.iter().filter(|(_, v)| !v.is_empty()) {
        let _ = writeln!(s, "{k:<width$}  {v}");
    }
    Ok(s)
}

pub fn render<T: Serialize>(value: &T, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json(value),
        OutputFormat::Csv => to_csv(value),
        OutputFormat::Text => to_text(value),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// State shared by the preset pipeline and the point-set pipeline.
struct Checks {
    checks: Vec<BoundReport>,
    not_applicable: Vec<String>,
    warnings: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Self {
            checks: Vec::new(),
            not_applicable: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn push(&mut self, mut r: BoundReport, t: &Tolerances) {
        r.pass = r.margin >= -t.report;
        self.checks.push(r);
    }

    /// Proposition and main theorem on the certified minimal pair.
    fn gap_checks(
        &mut self,
        eps: &EllipticPointSet,
        l0: Option<f64>,
        all_orders_above_two: bool,
        t: &Tolerances,
    ) -> Option<GapResult> {
        let gap = match certified_min_gap(eps) {
            Ok(g) => g,
            Err(e) => {
                self.not_applicable
                    .push(format!("minimal gap, Proposition, MainTheorem: {e}"));
                self.warnings.push(e.to_string());
                return None;
            }
        };
        if !gap.interior_certified {
            self.warnings.push(format!(
                "minimal pair lies within d_min = {} of the ball boundary; not interior-certified",
                gap.d_min
            ));
        }
        self.push(check_proposition(&gap, eps), t);
        match check_main_theorem(&gap, l0, all_orders_above_two) {
            Ok(r) => self.push(r, t),
            Err(e) => self.not_applicable.push(format!("MainTheorem: {e}")),
        }
        Some(gap)
    }
}

fn systole_label(depth: usize) -> String {
    format!("estimate (upper bound at depth {depth})")
}

/// Runs enumeration, harvesting, minimal gap, systole and every applicable
/// bound check for a preset.
pub fn verify(cfg: &RunConfig) -> Result<VerifyReport> {
    verify_with_points(cfg).map(|(r, _)| r)
}

/// [`verify`], also returning the harvested points (for drawing).
pub fn verify_with_points(cfg: &RunConfig) -> Result<(VerifyReport, EllipticPointSet)> {
    let t = cfg.tolerances()?;
    let preset = parse_preset(&cfg.preset)?;
    let ecfg = cfg.enum_config()?;
    let elements = enumerate_elements(&preset, &ecfg)?;
    let eps = elliptic_fixed_points(&elements, &ecfg);
    let systole = systole_estimate(&elements).ok();

    let mut c = Checks::new();
    if systole.is_none() {
        c.warnings
            .push("no hyperbolic elements enumerated; systole unavailable".into());
    }

    let probe: Vec<UhpPoint> = eps.points.iter().take(200).map(|p| p.point).collect();
    for g in &preset.elliptic_generators {
        if !probe.is_empty() {
            let mut r = check_displacement_identity(g, &probe)?;
            r.context = format!("generator {g}: {}", r.context);
            c.push(r, &t);
        }
    }

    match closest_order_two_pair(&eps) {
        Some((a, b)) => {
            let mut r = check_order_two_product(&a.element, &b.element)?;
            r.context = format!("fixed points {} and {}: {}", a.point, b.point, r.context);
            c.push(r, &t);
        }
        None => c
            .not_applicable
            .push("Lemma12: fewer than two order-two points in the ball".into()),
    }

    let gens = &preset.elliptic_generators;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (g, h) = (&gens[i], &gens[j]);
            if diagnose_pair(g, h)?.elementary {
                c.not_applicable
                    .push(format!("generators {i},{j} generate an elementary group"));
                continue;
            }
            let mut r = check_nonelementary_bound(g, h)?;
            r.context = format!("generators {i},{j}: {}", r.context);
            c.push(r, &t);
            let (mut r, _) = check_marden_yamada(g, h)?;
            r.context = format!("generators {i},{j}: {}", r.context);
            c.push(r, &t);
        }
    }

    let gap = c.gap_checks(&eps, systole, preset.all_orders_above_two(), &t);
    let pass = c.checks.iter().all(|r| r.pass);
    let report = VerifyReport {
        preset: preset.name,
        max_word_length: ecfg.max_word_length,
        ball_radius: ecfg.ball_radius,
        element_count: elements.len(),
        elliptic_point_count: eps.points.len(),
        orders_found: eps.orders(),
        d_min: gap.map(|g| g.d_min),
        gap,
        systole_estimate: systole,
        systole_depth: ecfg.max_word_length,
        systole_label: systole_label(ecfg.max_word_length),
        checks: c.checks,
        not_applicable: c.not_applicable,
        warnings: c.warnings,
        pass,
        tolerances: t,
    };
    Ok((report, eps))
}

fn closest_order_two_pair(eps: &EllipticPointSet) -> Option<(EllipticPoint, EllipticPoint)> {
    let twos: Vec<&EllipticPoint> = eps.points.iter().filter(|p| p.order == 2).collect();
    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..twos.len() {
        for j in i + 1..twos.len() {
            let d = distance(twos[i].point, twos[j].point);
            if best.is_none_or(|(b, _, _)| d < b) {
                best = Some((d, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (*twos[i], *twos[j]))
}

/// A hand-supplied elliptic point set, the input of `check-points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSetInput {
    #[serde(default = "default_name")]
    pub name: String,
    pub ball_radius: f64,
    pub points: Vec<PointInput>,
    /// Length of the shortest closed geodesic, if known.
    #[serde(default)]
    pub systole: Option<f64>,
}

fn default_name() -> String {
    "points".into()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointInput {
    pub x: f64,
    pub y: f64,
    pub order: u32,
}

impl PointSetInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| GeometryError::BadParameter(e.to_string()))
    }

    pub fn to_point_set(&self) -> Result<EllipticPointSet> {
        if !(self.ball_radius > 0.0 && self.ball_radius.is_finite()) {
            return Err(GeometryError::BadParameter(
                "ball_radius must be positive".into(),
            ));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                if p.order < 2 {
                    return Err(GeometryError::BadParameter(format!(
                        "order {} < 2",
                        p.order
                    )));
                }
                let point = UhpPoint::new(p.x, p.y)?;
                let angle = 2.0 * PI / p.order as f64;
                Ok(EllipticPoint {
                    point,
                    order: p.order,
                    angle,
                    element: GroupElement::elliptic_from(point, angle)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EllipticPointSet {
            points,
            ball_radius: self.ball_radius,
        })
    }
}

/// Proposition and main-theorem checks on a supplied point set.
pub fn verify_point_set(input: &PointSetInput, tolerances: &Tolerances) -> Result<VerifyReport> {
    let eps = input.to_point_set()?;
    let above_two = eps.points.iter().all(|p| p.order > 2);
    let mut c = Checks::new();
    let gap = c.gap_checks(&eps, input.systole, above_two, tolerances);
    let pass = c.checks.iter().all(|r| r.pass);
    Ok(VerifyReport {
        preset: input.name.clone(),
        max_word_length: 0,
        ball_radius: input.ball_radius,
        element_count: 0,
        elliptic_point_count: eps.points.len(),
        orders_found: eps.orders(),
        d_min: gap.map(|g| g.d_min),
        gap,
        systole_estimate: input.systole,
        systole_depth: 0,
        systole_label: "supplied".into(),
        checks: c.checks,
        not_applicable: c.not_applicable,
        warnings: c.warnings,
        pass,
        tolerances: *tolerances,
    })
}

/// Class-specific data for a single matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub class: ElementClass,
    pub trace: f64,
    pub canonical: [f64; 4],
    pub fixed_point: Option<UhpPoint>,
    pub angle: Option<f64>,
    pub order: Option<Order>,
    pub boundary_fixed_point: Option<BoundaryPoint>,
    pub translation_length: Option<f64>,
    pub axis: Option<(BoundaryPoint, BoundaryPoint)>,
}

pub fn classify_matrix(a: f64, b: f64, c: f64, d: f64) -> Result<Classification> {
    let g = GroupElement::new(a, b, c, d)?;
    let class = g.classify();
    let mut out = Classification {
        class,
        trace: g.trace(),
        canonical: g.entries(),
        fixed_point: None,
        angle: None,
        order: None,
        boundary_fixed_point: None,
        translation_length: None,
        axis: None,
    };
    match class {
        ElementClass::Elliptic => {
            let e = g.elliptic_datum()?;
            out.fixed_point = Some(e.fixed);
            out.angle = Some(e.angle);
            out.order = Some(e.order);
        }
        ElementClass::Parabolic => {
            out.boundary_fixed_point = Some(if g.c().abs() < tol::ENTRY_ZERO {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::Finite((g.a() - g.d()) / (2.0 * g.c()))
            });
        }
        ElementClass::Hyperbolic => {
            out.translation_length = Some(g.translation_length()?);
            out.axis = Some(g.axis()?);
        }
        ElementClass::Identity => {}
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub preset: String,
    pub max_word_length: usize,
    pub ball_radius: f64,
    pub elliptic_point_count: usize,
    pub d_min: f64,
    pub gap: GapResult,
}

pub fn gap_report(cfg: &RunConfig) -> Result<(GapReport, EllipticPointSet)> {
    let preset = parse_preset(&cfg.preset)?;
    let ecfg = cfg.enum_config()?;
    let elements = enumerate_elements(&preset, &ecfg)?;
    let eps = elliptic_fixed_points(&elements, &ecfg);
    let gap = certified_min_gap(&eps)?;
    let report = GapReport {
        preset: preset.name,
        max_word_length: ecfg.max_word_length,
        ball_radius: ecfg.ball_radius,
        elliptic_point_count: eps.points.len(),
        d_min: gap.d_min,
        gap,
    };
    Ok((report, eps))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystoleReport {
    pub preset: String,
    pub max_word_length: usize,
    pub ball_radius: f64,
    pub element_count: usize,
    pub systole_estimate: f64,
    pub systole_depth: usize,
    pub systole_label: String,
}

pub fn systole_report(cfg: &RunConfig) -> Result<SystoleReport> {
    let preset = parse_preset(&cfg.preset)?;
    let ecfg = cfg.enum_config()?;
    let elements = enumerate_elements(&preset, &ecfg)?;
    Ok(SystoleReport {
        preset: preset.name,
        max_word_length: ecfg.max_word_length,
        ball_radius: ecfg.ball_radius,
        element_count: elements.len(),
        systole_estimate: systole_estimate(&elements)?,
        systole_depth: ecfg.max_word_length,
        systole_label: systole_label(ecfg.max_word_length),
    })
}
