//! Numerical tolerances shared across the crate.

/// Default relative threshold for numerical rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Default relative threshold for singular values of tangent-direction stacks.
pub const DEFAULT_TANGENT_TOL: f64 = 1e-8;

/// Minimum ratio between the last retained and first discarded singular value
/// of a tangent-direction stack.
pub const TANGENT_GAP_RATIO: f64 = 1e6;

/// Two nonzero eigenvalues closer than this are treated as repeated.
pub const GENERIC_SPECTRUM_GAP: f64 = 1e-8;

/// Default entrywise tolerance when comparing partial traces.
pub const DEFAULT_PARTIAL_TRACE_TOL: f64 = 1e-8;

/// Eigenvalues closer than this form one degenerate cluster.
pub const DEGENERACY_GAP: f64 = 1e-10;

/// Components below this modulus are skipped when fixing eigenvector phases.
pub const PHASE_THRESHOLD: f64 = 1e-8;

pub const UNIT_NORM: f64 = 1e-12;
pub const UNITARITY: f64 = 1e-10;
pub const BLOCH_BALL: f64 = 1e-10;
pub const PURITY: f64 = 1e-8;

pub(crate) const EIGEN_EPS: f64 = f64::EPSILON;
pub(crate) const EIGEN_MAX_ITER: usize = 10_000;
