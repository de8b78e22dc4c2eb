//! Purification, partial trace, Schmidt decomposition, and the local unitary
//! that connects two purifications of the same density matrix.
//!
//! A bipartite state is handled through its coefficient matrix `C`
//! (`C[i][j]` is the amplitude of `|i>_A |j>_B`). In that picture
//!
//! * the partial trace over B is `C C^dagger`,
//! * a local unitary `r` on A maps `C -> r C`,
//! * a local unitary `v` on B maps `C -> C v^T`,
//! * the Schmidt decomposition is the singular value decomposition of `C`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{fix_phase, max_abs_diff};
use crate::spectral::{numerical_rank, spectral_decompose};
use crate::state::{DensityMatrix, PureState, Unitary};
use crate::svd::jacobi_svd;
use crate::tol;

/// `|psi> = sum_k q_k |a_k> |b_k>` with `q_k > 0` in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtDecomposition {
    /// Schmidt number: how many coefficients are nonzero.
    pub mu: usize,
    pub coefficients: Vec<f64>,
    pub basis_a: Vec<Vec<Complex64>>,
    pub basis_b: Vec<Vec<Complex64>>,
}

impl SchmidtDecomposition {
    /// Rebuilds the amplitude vector `sum_k q_k a_k (x) b_k`.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let n = self.basis_a.first().map_or(0, Vec::len);
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for k in 0..self.mu {
            for i in 0..n {
                for j in 0..n {
                    out[i * n + j] += self.basis_a[k][i] * self.basis_b[k][j] * self.coefficients[k];
                }
            }
        }
        out
    }
}

/// Canonical purification `sum_i sqrt(lambda_i) |v_i>_A |i>_B`, built from the
/// spectral decomposition with the ancilla in its computational basis.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let spectral = spectral_decompose(rho)?;
    let n = rho.n();
    let c = DMatrix::from_fn(n, n, |i, k| {
        spectral.eigenvectors[k][i] * spectral.eigenvalues[k].max(0.0).sqrt()
    });
    Ok(PureState::from_coefficient_matrix(&c))
}

/// Reduced state on A: `Tr_B |psi><psi| = C C^dagger`.
pub fn partial_trace_b(psi: &PureState) -> DensityMatrix {
    let c = psi.coefficient_matrix();
    DensityMatrix::from_hermitian(&c * c.adjoint())
}

fn sorted_svd(c: DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>, DMatrix<Complex64>)> {
    let svd = jacobi_svd(&c)?;
    Ok((svd.singular_values, svd.u, svd.v.adjoint()))
}

/// Schmidt decomposition from the SVD `C = U S V^dagger`.
///
/// The B-side vectors are the conjugated right singular vectors, so that
/// `C[i][j] = sum_k q_k a_k[i] b_k[j]`. Terms with coefficients at or below
/// `tol` relative to the largest are dropped.
pub fn schmidt(psi: &PureState, tol: f64) -> Result<SchmidtDecomposition> {
    let (values, u, v_t) = sorted_svd(psi.coefficient_matrix())?;
    let mu = numerical_rank(&values, tol);
    let n = psi.n();
    let mut basis_a = Vec::with_capacity(mu);
    let mut basis_b = Vec::with_capacity(mu);
    for k in 0..mu {
        let mut a: Vec<Complex64> = u.column(k).iter().copied().collect();
        let phase = fix_phase(&mut a, tol::PHASE_THRESHOLD);
        // row k of V^dagger is conj(v_k)
        let b: Vec<Complex64> = (0..n).map(|j| v_t[(k, j)] * phase.conj()).collect();
        basis_a.push(a);
        basis_b.push(b);
    }
    Ok(SchmidtDecomposition {
        mu,
        coefficients: values[..mu].to_vec(),
        basis_a,
        basis_b,
    })
}

pub fn schmidt_number(psi: &PureState, tol: f64) -> Result<usize> {
    Ok(schmidt(psi, tol)?.mu)
}

fn check_dimension(psi: &PureState, u: &Unitary) -> Result<()> {
    if psi.n() != u.n() {
        return Err(Error::DimensionMismatch {
            expected: psi.n(),
            found: u.n(),
        });
    }
    Ok(())
}

/// `(I (x) v) |psi>`, i.e. `C -> C v^T`.
pub fn apply_local_b(psi: &PureState, v: &Unitary) -> Result<PureState> {
    check_dimension(psi, v)?;
    let c = psi.coefficient_matrix() * v.matrix().transpose();
    Ok(PureState::from_coefficient_matrix(&c))
}

/// `(r (x) I) |psi>`, i.e. `C -> r C`.
pub fn apply_local_a(psi: &PureState, r: &Unitary) -> Result<PureState> {
    check_dimension(psi, r)?;
    let c = r.matrix() * psi.coefficient_matrix();
    Ok(PureState::from_coefficient_matrix(&c))
}

/// Unitary factor `W = U V^dagger` of the polar decomposition `C = P W`.
fn polar_unitary(c: DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let (_, u, v_t) = sorted_svd(c)?;
    Ok(u * v_t)
}

/// Finds `v` in SU(N) with `(I (x) v)|psi> = |phi>` up to a global phase.
///
/// Both coefficient matrices share the positive polar factor
/// `P = (C C^dagger)^{1/2}` because their partial traces agree, so writing
/// `C_psi = P W_psi` and `C_phi = P W_phi` gives `C_psi (W_psi^dagger W_phi) =
/// C_phi`, hence `v^T = W_psi^dagger W_phi`. The singular value decomposition
/// supplies full unitary polar factors even when `C` is rank deficient; their
/// kernel columns fix the (arbitrary) action of `v` off the support. The
/// result is divided by the principal N-th root of its determinant.
///
/// Fails with [`Error::PartialTraceMismatch`] when the reduced states differ
/// by more than `tol` in some entry.
pub fn connecting_unitary(psi: &PureState, phi: &PureState, tol: f64) -> Result<Unitary> {
    if psi.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: psi.n(),
            found: phi.n(),
        });
    }
    let deviation = max_abs_diff(partial_trace_b(psi).matrix(), partial_trace_b(phi).matrix());
    if !(deviation <= tol) {
        return Err(Error::PartialTraceMismatch { deviation });
    }
    let w_psi = polar_unitary(psi.coefficient_matrix())?;
    let w_phi = polar_unitary(phi.coefficient_matrix())?;
    let v_t = w_psi.adjoint() * w_phi;
    Ok(Unitary::from_dmatrix_unchecked(v_t.transpose()).to_special())
}
