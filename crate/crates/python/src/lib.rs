//! Python bindings for `fgap_core`.
//!
//! Report-shaped results (`classify`, `verify`, `gap`, `systole`) cross the
//! boundary as JSON strings with the same keys the CLI emits.

use fgap_core::bounds;
use fgap_core::metric;
use fgap_core::moebius::{ElementClass, Order};
use fgap_core::report::{self, RunConfig};
use fgap_core::{GeometryError, GroupElement, UhpPoint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: GeometryError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A point x + iy of the upper half-plane.
#[pyclass(name = "UhpPoint", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyUhpPoint(UhpPoint);

#[pymethods]
impl PyUhpPoint {
    #[new]
    fn new(x: f64, y: f64) -> PyResult<Self> {
        UhpPoint::new(x, y).map(Self).map_err(err)
    }

    #[getter]
    fn x(&self) -> f64 {
        self.0.x
    }

    #[getter]
    fn y(&self) -> f64 {
        self.0.y
    }

    fn __repr__(&self) -> String {
        format!("UhpPoint({}, {})", self.0.x, self.0.y)
    }
}

/// A canonical unimodular matrix acting on the upper half-plane.
#[pyclass(name = "GroupElement", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyGroupElement(GroupElement);

fn class_name(c: ElementClass) -> &'static str {
    match c {
        ElementClass::Identity => "identity",
        ElementClass::Elliptic => "elliptic",
        ElementClass::Parabolic => "parabolic",
        ElementClass::Hyperbolic => "hyperbolic",
    }
}

#[pymethods]
impl PyGroupElement {
    #[new]
    fn new(a: f64, b: f64, c: f64, d: f64) -> PyResult<Self> {
        GroupElement::new(a, b, c, d).map(Self).map_err(err)
    }

    /// Rotation by `angle` about `fixed`.
    #[staticmethod]
    fn elliptic_from(fixed: PyUhpPoint, angle: f64) -> PyResult<Self> {
        GroupElement::elliptic_from(fixed.0, angle)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn entries(&self) -> (f64, f64, f64, f64) {
        let [a, b, c, d] = self.0.entries();
        (a, b, c, d)
    }

    #[getter]
    fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// One of "identity", "elliptic", "parabolic", "hyperbolic".
    fn classify(&self) -> &'static str {
        class_name(self.0.classify())
    }

    /// `self ∘ other`.
    fn compose(&self, other: PyGroupElement) -> Self {
        Self(self.0.compose(&other.0))
    }

    fn __matmul__(&self, other: PyGroupElement) -> Self {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn apply(&self, z: PyUhpPoint) -> PyUhpPoint {
        PyUhpPoint(self.0.apply(z.0))
    }

    /// `(fixed point, signed angle, order or None)`.
    fn elliptic_datum(&self) -> PyResult<(PyUhpPoint, f64, Option<u32>)> {
        let d = self.0.elliptic_datum().map_err(err)?;
        let order = match d.order {
            Order::Finite(n) => Some(n),
            Order::Unresolved => None,
        };
        Ok((PyUhpPoint(d.fixed), d.angle, order))
    }

    fn translation_length(&self) -> PyResult<f64> {
        self.0.translation_length().map_err(err)
    }

    fn __repr__(&self) -> String {
        let [a, b, c, d] = self.0.entries();
        format!("GroupElement({a}, {b}, {c}, {d})")
    }
}

#[pyfunction]
fn distance(z: PyUhpPoint, w: PyUhpPoint) -> f64 {
    metric::distance(z.0, w.0)
}

#[pyfunction]
fn displacement_identity_residual(g: PyGroupElement, z: PyUhpPoint) -> PyResult<f64> {
    metric::displacement_identity_residual(&g.0, z.0).map_err(err)
}

#[pyfunction]
fn yamada_constant() -> f64 {
    bounds::yamada_constant()
}

#[pyfunction]
fn theorem_constant() -> f64 {
    bounds::theorem_constant()
}

/// `(value, argmin)` of `max(sinh ½ρ(z, gz), sinh ½ρ(z, hz))` over z.
#[pyfunction]
fn minimize_minmax(g: PyGroupElement, h: PyGroupElement) -> (f64, PyUhpPoint) {
    let r = bounds::minimize_minmax(&g.0, &h.0);
    (r.value, PyUhpPoint(r.argmin))
}

/// JSON record describing the matrix [[a, b], [c, d]].
#[pyfunction]
fn classify(a: f64, b: f64, c: f64, d: f64) -> PyResult<String> {
    let r = report::classify_matrix(a, b, c, d).map_err(err)?;
    report::to_json(&r).map_err(err)
}

fn config(preset: &str, depth: usize, radius: f64) -> RunConfig {
    let mut cfg = RunConfig::new(preset);
    cfg.max_word_length = depth;
    cfg.ball_radius = radius;
    cfg
}

/// Full verification report as JSON. Releases the GIL while running.
#[pyfunction]
#[pyo3(signature = (preset, depth = 10, radius = 3.0))]
fn verify(py: Python<'_>, preset: &str, depth: usize, radius: f64) -> PyResult<String> {
    let cfg = config(preset, depth, radius);
    py.detach(|| report::verify(&cfg).and_then(|r| r.to_json()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (preset, depth = 10, radius = 3.0))]
fn gap(py: Python<'_>, preset: &str, depth: usize, radius: f64) -> PyResult<String> {
    let cfg = config(preset, depth, radius);
    py.detach(|| report::gap_report(&cfg).and_then(|(r, _)| report::to_json(&r)))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (preset, depth = 10, radius = 3.0))]
fn systole(py: Python<'_>, preset: &str, depth: usize, radius: f64) -> PyResult<String> {
    let cfg = config(preset, depth, radius);
    py.detach(|| report::systole_report(&cfg).and_then(|r| report::to_json(&r)))
        .map_err(err)
}

#[pymodule]
fn fgap(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUhpPoint>()?;
    m.add_class::<PyGroupElement>()?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(displacement_identity_residual, m)?)?;
    m.add_function(wrap_pyfunction!(yamada_constant, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_constant, m)?)?;
    m.add_function(wrap_pyfunction!(minimize_minmax, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(gap, m)?)?;
    m.add_function(wrap_pyfunction!(systole, m)?)?;
    Ok(())
}
