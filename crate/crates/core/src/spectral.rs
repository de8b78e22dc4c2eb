//! Eigendecomposition of density matrices with a reproducible basis choice.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{fix_phase, outer};
use crate::state::DensityMatrix;
use crate::tol;

/// `rho = sum_i lambda_i v_i v_i^dagger` with eigenvalues in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, `eigenvectors[i]` paired with `eigenvalues[i]`.
    pub eigenvectors: Vec<Vec<Complex64>>,
}

impl SpectralDecomposition {
    /// Eigenvectors as the columns of an N x N matrix.
    pub fn eigenvector_matrix(&self) -> DMatrix<Complex64> {
        let n = self.eigenvectors.len();
        DMatrix::from_fn(n, n, |i, k| self.eigenvectors[k][i])
    }

    pub fn reconstruct(&self) -> DMatrix<Complex64> {
        let n = self.eigenvectors.len();
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .fold(DMatrix::zeros(n, n), |acc, (&l, v)| acc + outer(v).scale(l))
    }

    pub fn rank(&self, tol: f64) -> usize {
        numerical_rank(&self.eigenvalues, tol)
    }
}

/// Number of entries strictly above `tol` times the largest entry.
///
/// Returns 0 when no entry is positive.
pub fn numerical_rank(values: &[f64], tol: f64) -> usize {
    let largest = values.iter().copied().fold(0.0, f64::max);
    if largest <= 0.0 {
        return 0;
    }
    let threshold = tol * largest;
    values.iter().filter(|&&x| x > threshold).count()
}

fn lexicographic_real_parts(a: &[Complex64], b: &[Complex64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.re.total_cmp(&y.re) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Spectral decomposition with a deterministic basis.
///
/// Eigenvalues come out in descending order. Each eigenvector has its first
/// component of modulus above 1e-8 made real and positive. Inside a cluster of
/// eigenvalues closer than 1e-10 the vectors are sorted by their real parts,
/// lexicographically and in descending order, so `I/2` yields `e0, e1`.
pub fn spectral_decompose(rho: &DensityMatrix) -> Result<SpectralDecomposition> {
    let n = rho.n();
    let eig = rho
        .matrix()
        .clone()
        .try_symmetric_eigen(tol::EIGEN_EPS, tol::EIGEN_MAX_ITER)
        .ok_or(Error::DecompositionFailure("Hermitian eigensolver did not converge"))?;

    let mut pairs: Vec<(f64, Vec<Complex64>)> = (0..n)
        .map(|k| {
            let mut v: Vec<Complex64> = eig.eigenvectors.column(k).iter().copied().collect();
            fix_phase(&mut v, tol::PHASE_THRESHOLD);
            (eig.eigenvalues[k], v)
        })
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end - 1].0 - pairs[end].0 < tol::DEGENERACY_GAP {
            end += 1;
        }
        // only the vectors move; the values keep their sorted positions
        let mut vectors: Vec<Vec<Complex64>> = pairs[start..end].iter().map(|p| p.1.clone()).collect();
        vectors.sort_by(|a, b| lexicographic_real_parts(b, a));
        for (pair, v) in pairs[start..end].iter_mut().zip(vectors) {
            pair.1 = v;
        }
        start = end;
    }

    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{max_abs_diff, ComplexMatrix};
    use crate::state::validate_density;
    use approx::assert_abs_diff_eq;

    fn density(rows: &[&[f64]]) -> DensityMatrix {
        validate_density(&ComplexMatrix::from_real_rows(rows).unwrap(), 1e-10).unwrap()
    }

    #[test]
    fn maximally_mixed_gives_computational_basis() {
        let s = spectral_decompose(&DensityMatrix::maximally_mixed(2)).unwrap();
        assert_eq!(s.eigenvalues, vec![0.5, 0.5]);
        assert_abs_diff_eq!(s.eigenvectors[0][0].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvectors[1][1].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvectors[0][1].norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn diagonal_input_is_sorted_descending() {
        let s = spectral_decompose(&density(&[&[0.3, 0.0], &[0.0, 0.7]])).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvectors[0][1].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvectors[1][0].re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn plus_state_leading_vector_and_reconstruction() {
        let rho = density(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let s = spectral_decompose(&rho).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.0, epsilon = 1e-14);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(s.eigenvectors[0][0].re, h, epsilon = 1e-14);
        assert_abs_diff_eq!(s.eigenvectors[0][1].re, h, epsilon = 1e-14);
        // v v^dagger of the leading vector alone already reproduces rho
        let leading = outer(&s.eigenvectors[0]);
        assert!(max_abs_diff(&leading, rho.matrix()) < 1e-14);
        assert!(max_abs_diff(&s.reconstruct(), rho.matrix()) < 1e-14);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(numerical_rank(&[0.7, 0.3], 1e-9), 2);
        assert_eq!(numerical_rank(&[1.0, 3e-13], 1e-9), 1);
        assert_eq!(numerical_rank(&[0.5, 0.5, 0.0, 0.0], 1e-9), 2);
        assert_eq!(numerical_rank(&[0.0, 0.0], 1e-9), 0);
        assert_eq!(numerical_rank(&[], 1e-9), 0);
    }

    #[test]
    fn phase_convention_on_complex_input() {
        let m = ComplexMatrix::from_rows(&[
            vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, -0.4)],
            vec![Complex64::new(0.0, 0.4), Complex64::new(0.5, 0.0)],
        ])
        .unwrap();
        let s = spectral_decompose(&validate_density(&m, 1e-10).unwrap()).unwrap();
        for v in &s.eigenvectors {
            assert!(v[0].re > 0.0 && v[0].im == 0.0);
        }
        assert!(max_abs_diff(&s.reconstruct(), m.as_dmatrix()) < 1e-14);
    }
}
