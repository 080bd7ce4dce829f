use thiserror::Error;

use crate::moebius::ElementClass;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({x}, {y}) is not in the upper half-plane")]
    NotInUpperHalfPlane { x: f64, y: f64 },
    #[error("matrix has non-positive determinant {det}")]
    NonPositiveDeterminant { det: f64 },
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("|cz + d| = {modulus:e} underflows; point is numerically at a pole")]
    Overflow { modulus: f64 },
    #[error("expected an elliptic element, got {0:?}")]
    NotElliptic(ElementClass),
    #[error("expected a hyperbolic element, got {0:?}")]
    NotHyperbolic(ElementClass),
    #[error("rotation angle must be nonzero")]
    ZeroAngle,
    #[error("rotation angle {0} outside [-pi, pi]")]
    AngleOutOfRange(f64),
    #[error("geodesic endpoints coincide")]
    CoincidentPoints,
    #[error("both elements must have order two (got {0} and {1})")]
    WrongOrders(String, String),
    #[error("fixed points coincide")]
    CoincidentFixedPoints,
    #[error("pair generates an elementary group")]
    ElementaryPair,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("signature ({0}, {1}, {2}) is not hyperbolic: 1/p + 1/q + 1/r must be < 1")]
    NotHyperbolicSignature(u32, u32, u32),
    #[error("enumeration exceeded the budget of {cap} elements")]
    BudgetExceeded { cap: usize },
    #[error("need at least two interior elliptic points, found {0}")]
    InsufficientPoints(usize),
    #[error("no hyperbolic elements among the enumerated set")]
    NoHyperbolicElements,
    #[error("systole estimate required but unavailable")]
    MissingSystole,
    #[error("unknown preset {0:?}; expected modular, hecke:q or triangle:p,q,r")]
    UnknownPreset(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
