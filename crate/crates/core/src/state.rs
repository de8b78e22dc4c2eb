//! Validated quantum-state carriers: density matrices, bipartite pure states
//! and unitaries.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_deviation, symmetrize, unitarity_deviation, ComplexMatrix};
use crate::tol;

/// An N x N Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Symmetrizes and trace-normalizes a matrix that is already known to be
    /// a density matrix up to rounding.
    pub(crate) fn from_hermitian(m: DMatrix<Complex64>) -> Self {
        let mut m = symmetrize(&m);
        let tr = m.trace().re;
        if tr != 0.0 {
            m.unscale_mut(tr);
        }
        Self { matrix: m }
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn to_complex_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_dmatrix(self.matrix.clone()).expect("density matrix entries are finite")
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        // Tr(rho rho) = sum |rho_ij|^2 for Hermitian rho.
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// The maximally mixed state `I / n`.
    pub fn maximally_mixed(n: usize) -> Self {
        Self {
            matrix: DMatrix::identity(n, n).unscale(n as f64),
        }
    }

    /// The projector onto computational basis state `k`.
    pub fn basis_projector(n: usize, k: usize) -> Self {
        let mut m = DMatrix::zeros(n, n);
        m[(k, k)] = Complex64::new(1.0, 0.0);
        Self { matrix: m }
    }
}

/// Checks the density-matrix axioms at tolerance `tol` and returns the
/// symmetrized, trace-renormalized matrix.
pub fn validate_density(m: &ComplexMatrix, tol: f64) -> Result<DensityMatrix> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let raw = m.as_dmatrix();
    let deviation = hermitian_deviation(raw);
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = raw.trace().re;
    if (trace - 1.0).abs() > tol {
        return Err(Error::TraceNotOne { trace });
    }
    let sym = symmetrize(raw);
    let eigenvalues = sym
        .clone()
        .try_symmetric_eigen(tol::EIGEN_EPS, tol::EIGEN_MAX_ITER)
        .ok_or(Error::DecompositionFailure("Hermitian eigensolver did not converge"))?
        .eigenvalues;
    let min_eigenvalue = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min_eigenvalue < -tol {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(DensityMatrix::from_hermitian(sym))
}

/// A unit vector on the bipartite space A (x) B with both factors of
/// dimension N.
///
/// Amplitude of `|i>_A |j>_B` is stored at flat index `i * N + j`, so the
/// amplitudes read row-major form the N x N coefficient matrix `C[i][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

fn square_root_exact(len: usize) -> Option<usize> {
    let n = (len as f64).sqrt().round() as usize;
    (n * n == len).then_some(n)
}

fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl PureState {
    /// Accepts amplitudes whose norm is within `tol` of one and renormalizes
    /// them exactly.
    pub fn with_tolerance(amplitudes: Vec<Complex64>, tol: f64) -> Result<Self> {
        let n = square_root_exact(amplitudes.len()).ok_or(Error::NotBipartite(amplitudes.len()))?;
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = vector_norm(&amplitudes);
        if !((norm - 1.0).abs() <= tol) {
            return Err(Error::NotNormalized { norm });
        }
        let mut amplitudes = amplitudes;
        for z in &mut amplitudes {
            *z /= norm;
        }
        Ok(Self { n, amplitudes })
    }

    /// Like [`PureState::with_tolerance`] at the type's own 1e-12 norm bound.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(amplitudes, tol::UNIT_NORM)
    }

    /// Scales an arbitrary nonzero vector of length N^2 to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = vector_norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Self::with_tolerance(amplitudes.into_iter().map(|z| z / norm).collect(), 1e-6)
    }

    /// `|k>_A |l>_B`.
    pub fn product_basis(n: usize, k: usize, l: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n * n];
        amplitudes[k * n + l] = Complex64::new(1.0, 0.0);
        Self { n, amplitudes }
    }

    /// `sum_k |k>|k> / sqrt(n)`.
    pub fn maximally_entangled(n: usize) -> Self {
        let c = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n * n];
        for k in 0..n {
            amplitudes[k * n + k] = c;
        }
        Self { n, amplitudes }
    }

    pub(crate) fn from_coefficient_matrix(c: &DMatrix<Complex64>) -> Self {
        let n = c.nrows();
        let mut amplitudes = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                amplitudes.push(c[(i, j)]);
            }
        }
        let norm = vector_norm(&amplitudes);
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self { n, amplitudes }
    }

    /// Subsystem dimension N.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// The N x N matrix `C[i][j]` of amplitudes.
    pub fn coefficient_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.n, self.n, &self.amplitudes)
    }

    /// Multiplies every amplitude by `e^{i theta}`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let phase = Complex64::from_polar(1.0, theta);
        Self {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|z| z * phase).collect(),
        }
    }
}

/// An n x n unitary matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    matrix: DMatrix<Complex64>,
}

impl Unitary {
    /// Validates `U^dagger U = I` within 1e-10 entrywise.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let (rows, cols) = (m.rows(), m.cols());
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        let matrix = m.into_dmatrix();
        let deviation = unitarity_deviation(&matrix);
        if deviation > tol::UNITARITY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_dmatrix_unchecked(matrix: DMatrix<Complex64>) -> Self {
        debug_assert!(unitarity_deviation(&matrix) <= 1e-8);
        Self { matrix }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: DMatrix::identity(n, n),
        }
    }

    /// Pauli X on a qubit, or the cyclic shift `|k> -> |k+1 mod n>` in general.
    pub fn shift(n: usize) -> Self {
        Self {
            matrix: DMatrix::from_fn(n, n, |i, j| {
                if i == (j + 1) % n {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn to_complex_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_dmatrix(self.matrix.clone()).expect("unitary entries are finite")
    }

    pub fn transpose(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.matrix.clone().determinant()
    }

    pub fn compose(&self, other: &Unitary) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Multiplies by a scalar phase `e^{i theta}`.
    pub fn with_phase(&self, theta: f64) -> Self {
        Self {
            matrix: self.matrix.map(|z| z * Complex64::from_polar(1.0, theta)),
        }
    }

    /// Divides by the principal n-th root of the determinant, landing in SU(n).
    pub fn to_special(&self) -> Self {
        let n = self.n();
        if n == 0 {
            return self.clone();
        }
        let det = self.determinant();
        let root = Complex64::from_polar(det.norm().powf(1.0 / n as f64), det.arg() / n as f64);
        Self {
            matrix: self.matrix.map(|z| z / root),
        }
    }
}

/// `sqrt(max(0, 1 - |<a|b>|^2))` for two unit vectors of equal length.
///
/// Evaluated as the norm of the component of one vector orthogonal to the
/// other, `|b - <a|b> a|`, which equals the closed form for unit vectors but
/// does not lose half the digits to cancellation when the rays coincide. The
/// two orientations are averaged so the result is exactly symmetric.
pub fn ray_distance_vectors(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a == b {
        return Ok(0.0);
    }
    let overlap: Complex64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    let residual = |from: &[Complex64], onto: &[Complex64], c: Complex64| -> f64 {
        from.iter()
            .zip(onto)
            .map(|(f, o)| (f - c * o).norm_sqr())
            .sum::<f64>()
            .sqrt()
    };
    let d = 0.5 * (residual(b, a, overlap) + residual(a, b, overlap.conj()));
    Ok(d.clamp(0.0, 1.0))
}

/// Distance between the rays of two pure states; zero iff they agree up to a
/// global phase.
pub fn ray_distance(psi: &PureState, phi: &PureState) -> Result<f64> {
    ray_distance_vectors(psi.amplitudes(), phi.amplitudes())
}
