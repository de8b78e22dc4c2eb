//! Dense complex matrices and the small helpers shared by every module.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A dense complex matrix with finite entries.
///
/// Storage is delegated to [`nalgebra::DMatrix`]; constructors take entries in
/// row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn from_row_major(rows: usize, cols: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Self::from_dmatrix(DMatrix::from_row_slice(rows, cols, entries))
    }

    /// Builds a matrix from a list of rows. All rows must have equal length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut flat = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch {
                    rows: nrows,
                    cols: ncols,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_row_major(nrows, ncols, &flat)
    }

    /// Real-valued rows, convenient for literals in tests and fixtures.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_dmatrix(m: DMatrix<Complex64>) -> Result<Self> {
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        Self(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                ZERO
            }
        }))
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    /// Entries in row-major order.
    pub fn to_row_major(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<Complex64> {
        self.0
    }
}

impl From<ComplexMatrix> for DMatrix<Complex64> {
    fn from(m: ComplexMatrix) -> Self {
        m.0
    }
}

/// Largest entrywise modulus of `a - b`. Panics on shape mismatch.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch in max_abs_diff");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entrywise modulus of `M - M^dagger`.
pub(crate) fn hermitian_deviation(m: &DMatrix<Complex64>) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

/// Largest entrywise modulus of `U^dagger U - I`.
pub(crate) fn unitarity_deviation(u: &DMatrix<Complex64>) -> f64 {
    let n = u.ncols();
    max_abs_diff(&(u.adjoint() * u), &DMatrix::identity(n, n))
}

pub(crate) fn symmetrize(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()).scale(0.5)
}

/// `v v^dagger` for a column vector.
pub(crate) fn outer(v: &[Complex64]) -> DMatrix<Complex64> {
    let n = v.len();
    DMatrix::from_fn(n, n, |i, j| v[i] * v[j].conj())
}

/// Rotates `v` so that its first component with modulus above `threshold` is
/// real and positive. Returns the applied phase factor.
pub(crate) fn fix_phase(v: &mut [Complex64], threshold: f64) -> Complex64 {
    let Some(idx) = v.iter().position(|z| z.norm() > threshold) else {
        return ONE;
    };
    let lead = v[idx];
    let phase = lead.conj() / lead.norm();
    for z in v.iter_mut() {
        *z *= phase;
    }
    v[idx] = Complex64::new(lead.norm(), 0.0);
    phase
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_layout() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(m.get(0, 2), Complex64::new(3.0, 0.0));
        assert_eq!(m.get(1, 0), Complex64::new(4.0, 0.0));
        let flat: Vec<f64> = m.to_row_major().iter().map(|z| z.re).collect();
        assert_eq!(flat, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    }

    #[test]
    fn rejects_bad_shapes_and_nan() {
        assert!(matches!(
            ComplexMatrix::from_row_major(2, 2, &[ONE; 3]),
            Err(Error::ShapeMismatch { found: 3, .. })
        ));
        assert!(matches!(
            ComplexMatrix::from_rows(&[vec![ONE, ONE], vec![ONE]]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert_eq!(
            ComplexMatrix::from_real_rows(&[&[f64::NAN]]),
            Err(Error::NonFinite)
        );
        assert_eq!(
            ComplexMatrix::from_row_major(1, 1, &[Complex64::new(0.0, f64::INFINITY)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn phase_fix_makes_leading_component_positive() {
        let mut v = vec![
            Complex64::new(1e-12, 0.0),
            Complex64::new(0.0, -0.6),
            Complex64::new(0.8, 0.0),
        ];
        fix_phase(&mut v, 1e-8);
        assert!((v[1].re - 0.6).abs() < 1e-15 && v[1].im.abs() < 1e-15);
        assert!((v[2].im - 0.8).abs() < 1e-15);
    }
}
