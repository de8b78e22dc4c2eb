//! Rank strata of the density-matrix set and the qubit Bloch chart.
//!
//! The density matrices of rank `mu` form a stratum of real dimension
//! `mu (2N - mu) - 1`. Its points are orbits of purifications with Schmidt
//! number `mu`; the ancilla unitaries fixing such a purification form
//! `U(N - mu)`, of real dimension `(N - mu)^2`.

mod bloch;
mod split;
mod tangent;

pub use bloch::{bloch_rotation, bloch_vector, density_from_bloch, pauli, BlochVector};
pub use split::{convex_split, pure_cover, ConvexSplit, PureCover};
pub use tangent::{hermitian_to_real, tangent_directions, tangent_space_analysis, tangent_space_rank, TangentAnalysis};

use crate::error::{Error, Result};
use crate::spectral::spectral_decompose;
use crate::state::DensityMatrix;
use crate::tol;

/// Where a density matrix sits in the stratification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumInfo {
    pub n: usize,
    pub mu: usize,
    pub stabilizer_dim: usize,
    pub stratum_dim: usize,
    pub is_pure: bool,
    pub is_full_rank: bool,
}

fn check_rank(n: usize, mu: usize) -> Result<()> {
    if mu == 0 || mu > n {
        return Err(Error::RankOutOfRange { n, mu });
    }
    Ok(())
}

/// Real dimension `mu (2N - mu) - 1` of the rank-`mu` stratum.
pub fn stratum_dimension(n: usize, mu: usize) -> Result<usize> {
    check_rank(n, mu)?;
    Ok(mu * (2 * n - mu) - 1)
}

/// Real dimension `(N - mu)^2` of the stabilizer `U(N - mu)`.
pub fn stabilizer_dimension(n: usize, mu: usize) -> Result<usize> {
    check_rank(n, mu)?;
    Ok((n - mu) * (n - mu))
}

/// Real dimension `2N^2 - 2` of the pure states on the doubled system.
pub fn purification_space_dimension(n: usize) -> usize {
    2 * n * n - 2
}

/// Real dimension `N^2 - 1` of SU(N).
pub fn special_unitary_dimension(n: usize) -> usize {
    n * n - 1
}

/// Classifies `rho` by its numerical rank at relative tolerance `tol`.
pub fn classify(rho: &DensityMatrix, tol: f64) -> Result<StratumInfo> {
    let n = rho.n();
    let mu = spectral_decompose(rho)?.rank(tol);
    Ok(StratumInfo {
        n,
        mu,
        stabilizer_dim: stabilizer_dimension(n, mu)?,
        stratum_dim: stratum_dimension(n, mu)?,
        is_pure: mu == 1,
        is_full_rank: mu == n,
    })
}

/// True when `Tr(rho^2)` is within 1e-8 of one.
pub fn is_pure_by_purity(rho: &DensityMatrix) -> bool {
    (rho.purity() - 1.0).abs() <= tol::PURITY
}
