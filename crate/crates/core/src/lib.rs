//! Numerical toolkit for the set of N x N density matrices viewed as orbits
//! of pure states on a doubled system.
//!
//! Every density matrix `rho` is the reduced state of a pure state on
//! `C^N (x) C^N` ([`purify`], [`partial_trace_b`]). Two such purifications of
//! the same `rho` differ by a unitary acting on the ancilla alone
//! ([`connecting_unitary`]), so density matrices correspond one-to-one to
//! ancilla-unitary orbits of pure states. The orbits are stratified by
//! Schmidt number, which equals the rank of `rho` ([`strata`]).
//!
//! Random inputs for property testing live in [`sampling`].

// `!(x <= tol)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod matrix;
pub mod purification;
pub mod sampling;
pub mod spectral;
pub mod state;
pub mod strata;
pub mod svd;
pub mod tol;

pub use error::{Error, ErrorClass, Result};
pub use matrix::{max_abs_diff, ComplexMatrix};
pub use purification::{
    apply_local_a, apply_local_b, connecting_unitary, partial_trace_b, purify, schmidt, schmidt_number,
    SchmidtDecomposition,
};
pub use spectral::{numerical_rank, spectral_decompose, SpectralDecomposition};
pub use state::{ray_distance, ray_distance_vectors, validate_density, DensityMatrix, PureState, Unitary};
pub use strata::{
    bloch_rotation, bloch_vector, classify, convex_split, density_from_bloch, pure_cover, stabilizer_dimension,
    stratum_dimension, tangent_space_analysis, tangent_space_rank, BlochVector, ConvexSplit, PureCover, StratumInfo,
    TangentAnalysis,
};

pub use nalgebra;
pub use num_complex::Complex64;
