//! Numerical tolerances shared across the crate.
//!
//! Everything is binary64; the thresholds below sit well above
//! double-precision noise for word lengths up to ~20.

/// |trace| band around 2 separating elliptic, parabolic and hyperbolic
/// elements, also used for the identity test.
pub const CLASS: f64 = 1e-9;

/// Below this |trace| the sign is chosen lexicographically on (b, c, a).
pub const TRACE_ZERO: f64 = 1e-9;

/// Entries smaller than this are treated as zero in the lexicographic
/// sign rule.
pub const ENTRY_ZERO: f64 = 1e-12;

/// Largest finite order searched for an elliptic element.
pub const MAX_ORDER: u32 = 1000;

/// Per-step slack when testing n·θ ≡ 0 (mod 2π); the total slack is n times this.
pub const ORDER_STEP: f64 = 1e-8;

/// Hyperbolic distance under which two fixed points are the same.
pub const COINCIDE: f64 = 1e-8;

/// Hyperbolic distance under which harvested fixed points are merged.
pub const POINT_DEDUP: f64 = 1e-7;

/// Entry-wise tolerance for treating two matrices as the same isometry.
pub const MATRIX_DEDUP: f64 = 1e-9;

/// Uniform slack for bound reports: pass iff margin ≥ -REPORT.
pub const REPORT: f64 = 1e-6;

/// Default cap on elements kept by the word enumeration.
pub const WORD_CAP: usize = 2_000_000;

/// Step size at which the min-max local descent stops.
pub const DESCENT_STOP: f64 = 1e-7;
