//! Numerical check of the stratum dimension: the rank of the span of
//! rank-preserving first-order motions at a point.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::outer;
use crate::spectral::spectral_decompose;
use crate::state::DensityMatrix;
use crate::svd::singular_values;
use crate::tol;

/// Singular-value summary of the tangent-direction stack at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentAnalysis {
    pub n: usize,
    pub mu: usize,
    /// Numerical rank of the direction stack.
    pub rank: usize,
    /// Singular values of the stack, descending.
    pub singular_values: Vec<f64>,
    /// Ratio of the last retained to the first discarded singular value;
    /// `None` when nothing is discarded.
    pub gap_ratio: Option<f64>,
}

/// Real coordinates of a Hermitian matrix: the diagonal, then `sqrt(2) Re`
/// and `sqrt(2) Im` of the strict upper triangle, so that the Euclidean inner
/// product matches the Hilbert-Schmidt one.
pub fn hermitian_to_real(h: &DMatrix<Complex64>) -> Vec<f64> {
    let n = h.nrows();
    let s = std::f64::consts::SQRT_2;
    let mut out = Vec::with_capacity(n * n);
    out.extend((0..n).map(|i| h[(i, i)].re));
    for i in 0..n {
        for j in i + 1..n {
            out.push(s * h[(i, j)].re);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(s * h[(i, j)].im);
        }
    }
    out
}

/// Generalized Gell-Mann basis of the traceless Hermitian N x N matrices.
fn traceless_hermitian_basis(n: usize) -> Vec<DMatrix<Complex64>> {
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut basis = Vec::with_capacity(n * n - 1);
    for j in 0..n {
        for k in j + 1..n {
            let mut sym = DMatrix::zeros(n, n);
            sym[(j, k)] = one;
            sym[(k, j)] = one;
            basis.push(sym);
            let mut anti = DMatrix::zeros(n, n);
            anti[(j, k)] = -i;
            anti[(k, j)] = i;
            basis.push(anti);
        }
    }
    for l in 1..n {
        let scale = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut d = DMatrix::zeros(n, n);
        for j in 0..l {
            d[(j, j)] = Complex64::new(scale, 0.0);
        }
        d[(l, l)] = Complex64::new(-scale * l as f64, 0.0);
        basis.push(d);
    }
    basis
}

/// Spanning set of the tangent space at `rho`, as Hermitian matrices.
///
/// Contains the `N^2 - 1` commutator directions `i [H_k, rho]` followed by the
/// `mu - 1` spectral directions `v_k v_k^dagger - v_{k+1} v_{k+1}^dagger` over
/// the eigenvectors with nonzero eigenvalue.
pub fn tangent_directions(rho: &DensityMatrix, mu: usize) -> Result<Vec<DMatrix<Complex64>>> {
    let n = rho.n();
    let spectral = spectral_decompose(rho)?;
    let i = Complex64::new(0.0, 1.0);
    let r = rho.matrix();
    let mut dirs: Vec<DMatrix<Complex64>> = traceless_hermitian_basis(n)
        .iter()
        .map(|h| (h * r - r * h) * i)
        .collect();
    for k in 0..mu.saturating_sub(1) {
        dirs.push(outer(&spectral.eigenvectors[k]) - outer(&spectral.eigenvectors[k + 1]));
    }
    Ok(dirs)
}

/// Rank and singular values of the tangent-direction stack at `rho`.
///
/// Requires distinct nonzero eigenvalues. Singular values above `tol` times
/// the largest are counted, and the counted/discarded boundary must be
/// separated by a factor of at least 1e6.
pub fn tangent_space_analysis(rho: &DensityMatrix, tol: f64) -> Result<TangentAnalysis> {
    let n = rho.n();
    let spectral = spectral_decompose(rho)?;
    let mu = spectral.rank(tol::DEFAULT_RANK_TOL);
    if let Some(gap) = spectral.eigenvalues[..mu]
        .windows(2)
        .map(|w| w[0] - w[1])
        .find(|&g| g < tol::GENERIC_SPECTRUM_GAP)
    {
        return Err(Error::NonGenericSpectrum { gap });
    }

    let dirs = tangent_directions(rho, mu)?;
    let cols = n * n;
    let mut stack = DMatrix::<Complex64>::zeros(dirs.len(), cols);
    for (row, d) in dirs.iter().enumerate() {
        for (col, x) in hermitian_to_real(d).into_iter().enumerate() {
            stack[(row, col)] = Complex64::new(x, 0.0);
        }
    }
    let singular_values = if dirs.is_empty() {
        Vec::new()
    } else {
        singular_values(&stack)?
    };

    let largest = singular_values.first().copied().unwrap_or(0.0);
    let rank = if largest > 0.0 {
        singular_values.iter().filter(|&&s| s > tol * largest).count()
    } else {
        0
    };
    let gap_ratio = (rank > 0 && rank < singular_values.len()).then(|| {
        let discarded = singular_values[rank];
        if discarded > 0.0 {
            singular_values[rank - 1] / discarded
        } else {
            f64::INFINITY
        }
    });
    if let Some(ratio) = gap_ratio {
        if ratio < tol::TANGENT_GAP_RATIO {
            return Err(Error::AmbiguousRank { ratio });
        }
    }

    Ok(TangentAnalysis {
        n,
        mu,
        rank,
        singular_values,
        gap_ratio,
    })
}

/// Numerical dimension of the stratum through `rho`; see
/// [`tangent_space_analysis`].
pub fn tangent_space_rank(rho: &DensityMatrix, tol: f64) -> Result<usize> {
    Ok(tangent_space_analysis(rho, tol)?.rank)
}
