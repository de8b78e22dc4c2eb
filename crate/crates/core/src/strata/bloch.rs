//! The qubit case: density matrices as points of the unit ball, and SU(2)
//! acting through its adjoint image in SO(3).

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{DensityMatrix, Unitary};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    /// Rejects vectors with norm above `1 + 1e-10`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let r = Self { x, y, z };
        let norm = r.norm();
        if !(norm <= 1.0 + tol::BLOCH_BALL) {
            return Err(Error::OutsideBall { norm });
        }
        Ok(r)
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Pauli matrix `a` in {0, 1, 2} = {x, y, z}, with `sigma_z |0> = +|0>`.
pub fn pauli(a: usize) -> DMatrix<Complex64> {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match a {
        0 => DMatrix::from_row_slice(2, 2, &[o, one, one, o]),
        1 => DMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        2 => DMatrix::from_row_slice(2, 2, &[one, o, o, -one]),
        _ => panic!("Pauli index {a} out of range"),
    }
}

/// `r_a = Tr(rho sigma_a)`.
pub fn bloch_vector(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.n() != 2 {
        return Err(Error::DimensionNotTwo(rho.n()));
    }
    let component = |a| (rho.matrix() * pauli(a)).trace().re;
    BlochVector::new(component(0), component(1), component(2))
}

/// `rho = (I + x sigma_x + y sigma_y + z sigma_z) / 2`.
pub fn density_from_bloch(r: &BlochVector) -> Result<DensityMatrix> {
    let norm = r.norm();
    if !(norm <= 1.0 + tol::BLOCH_BALL) {
        return Err(Error::OutsideBall { norm });
    }
    let m = (DMatrix::identity(2, 2) + pauli(0).scale(r.x) + pauli(1).scale(r.y) + pauli(2).scale(r.z))
        .scale(0.5);
    Ok(DensityMatrix::from_hermitian(m))
}

/// Rotation `R` with `R r(rho) = r(u rho u^dagger)`, from
/// `R_ab = Tr(sigma_a u sigma_b u^dagger) / 2`.
pub fn bloch_rotation(u: &Unitary) -> Result<Matrix3<f64>> {
    if u.n() != 2 {
        return Err(Error::DimensionNotTwo(u.n()));
    }
    let um = u.matrix();
    let ud = um.adjoint();
    let conjugated: Vec<DMatrix<Complex64>> = (0..3).map(|b| um * pauli(b) * &ud).collect();
    Ok(Matrix3::from_fn(|a, b| 0.5 * (pauli(a) * &conjugated[b]).trace().re))
}
