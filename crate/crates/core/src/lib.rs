//! Hyperbolic-plane machinery for bounding the distance between elliptic
//! fixed points of Fuchsian groups.
//!
//! The crate is organized bottom-up:
//!
//! - [`moebius`]: unimodular matrices acting on the upper half-plane, their
//!   classification, fixed points, rotation angles and axes.
//! - [`metric`]: distance, geodesics and displacement.
//! - [`elementary`]: elementarity of two-generator elliptic subgroups.
//! - [`groups`]: preset groups, word enumeration, elliptic points, minimal
//!   gaps and systole estimates.
//! - [`bounds`]: the constants and the inequality checks.
//! - [`report`] and [`svg`]: the end-to-end verification pipeline and its
//!   serialized outputs.

pub mod bounds;
pub mod elementary;
pub mod error;
pub mod groups;
pub mod metric;
pub mod moebius;
pub mod report;
pub mod svg;
pub mod tol;

pub use error::{GeometryError, Result};
pub use moebius::{BoundaryPoint, ElementClass, EllipticDatum, GroupElement, Order, UhpPoint};
