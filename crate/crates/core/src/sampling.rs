//! Seeded random states, unitaries and fixed-rank density matrices.
//!
//! All draws come from xoshiro256** seeded through SplitMix64 (the
//! `seed_from_u64` of `rand_xoshiro`). A uniform in `[0, 1)` is the top 53
//! bits of one output times `2^-53`. One standard complex Gaussian
//! `(x + iy)/sqrt(2)` consumes two uniforms `u1, u2` through Box-Muller:
//! `x + iy = sqrt(-2 ln(1 - u1)) e^{2 pi i u2}`, evaluated with the portable
//! `libm` routines. Matrices are filled row-major. Each public function
//! builds its own generator from the seed, so outputs depend only on the
//! arguments.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::spectral::spectral_decompose;
use crate::state::{DensityMatrix, PureState, Unitary};
use crate::tol;

/// Rejection budget for the `random_*density` samplers.
pub const DEFAULT_MAX_ATTEMPTS: usize = 1000;

/// Default minimum eigenvalue spacing for [`random_generic_density`].
pub const DEFAULT_GENERIC_GAP: f64 = 1e-3;

/// Seed plus shape parameters for one sampling call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub n: usize,
    pub mu: Option<usize>,
}

impl SamplerConfig {
    pub fn new(seed: u64, n: usize, mu: Option<usize>) -> Result<Self> {
        if let Some(mu) = mu {
            if mu == 0 || mu > n {
                return Err(Error::RankOutOfRange { n, mu });
            }
        }
        Ok(Self { seed, n, mu })
    }

    pub fn density(&self) -> Result<DensityMatrix> {
        random_density(self.n, self.mu.unwrap_or(self.n), self.seed)
    }
}

/// Gaussian source over the pinned generator.
struct Gaussian(Xoshiro256StarStar);

impl Gaussian {
    fn new(seed: u64) -> Self {
        Self(Xoshiro256StarStar::seed_from_u64(seed))
    }

    fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn complex(&mut self) -> Complex64 {
        let u1 = self.uniform();
        let u2 = self.uniform();
        let radius = libm::sqrt(-2.0 * libm::log(1.0 - u1)) * std::f64::consts::FRAC_1_SQRT_2;
        let angle = 2.0 * std::f64::consts::PI * u2;
        Complex64::new(radius * libm::cos(angle), radius * libm::sin(angle))
    }

    fn vector(&mut self, len: usize) -> Vec<Complex64> {
        (0..len).map(|_| self.complex()).collect()
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(rows, cols, &self.vector(rows * cols))
    }
}

/// Uniformly distributed unit vector of length `dim` (Haar measure on rays).
pub fn random_ray(dim: usize, seed: u64) -> Vec<Complex64> {
    let mut g = Gaussian::new(seed);
    loop {
        let v = g.vector(dim);
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Uniformly distributed pure state on `C^n (x) C^n`.
pub fn random_pure(n: usize, seed: u64) -> PureState {
    PureState::normalized(random_ray(n * n, seed)).expect("random ray has unit norm")
}

/// Haar-random n x n unitary: QR of a complex Ginibre matrix, with each
/// column of Q multiplied by the phase of the matching diagonal entry of R.
pub fn random_unitary(n: usize, seed: u64) -> Unitary {
    let mut g = Gaussian::new(seed);
    let qr = g.matrix(n, n).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    Unitary::from_dmatrix_unchecked(q)
}

fn induced_density(g: &mut Gaussian, n: usize, mu: usize) -> DensityMatrix {
    let m = g.matrix(n, mu);
    DensityMatrix::from_hermitian(&m * m.adjoint())
}

fn check_rank(n: usize, mu: usize) -> Result<()> {
    if mu == 0 || mu > n {
        return Err(Error::RankOutOfRange { n, mu });
    }
    Ok(())
}

/// `G G^dagger / Tr(G G^dagger)` for an n x mu Ginibre matrix `G`, redrawn in
/// the (measure-zero) event that its numerical rank is not `mu`.
pub fn random_density(n: usize, mu: usize, seed: u64) -> Result<DensityMatrix> {
    check_rank(n, mu)?;
    let mut g = Gaussian::new(seed);
    for _ in 0..DEFAULT_MAX_ATTEMPTS {
        let rho = induced_density(&mut g, n, mu);
        if spectral_decompose(&rho)?.rank(tol::DEFAULT_RANK_TOL) == mu {
            return Ok(rho);
        }
    }
    Err(Error::SamplingExhausted {
        attempts: DEFAULT_MAX_ATTEMPTS,
    })
}

/// Like [`random_density`] but redraws until all nonzero eigenvalues are at
/// least `gap` apart, giving up after `max_attempts` draws.
pub fn random_generic_density_with_attempts(
    n: usize,
    mu: usize,
    seed: u64,
    gap: f64,
    max_attempts: usize,
) -> Result<DensityMatrix> {
    check_rank(n, mu)?;
    let mut g = Gaussian::new(seed);
    for _ in 0..max_attempts {
        let rho = induced_density(&mut g, n, mu);
        let spectral = spectral_decompose(&rho)?;
        if spectral.rank(tol::DEFAULT_RANK_TOL) != mu {
            continue;
        }
        if spectral.eigenvalues[..mu].windows(2).all(|w| w[0] - w[1] >= gap) {
            return Ok(rho);
        }
    }
    Err(Error::SamplingExhausted {
        attempts: max_attempts,
    })
}

pub fn random_generic_density(n: usize, mu: usize, seed: u64, gap: f64) -> Result<DensityMatrix> {
    random_generic_density_with_attempts(n, mu, seed, gap, DEFAULT_MAX_ATTEMPTS)
}

/// Random density matrix of rank `mu` whose nonzero spectrum is exactly
/// `spectrum` (padded with zeros), rotated by a Haar-random unitary.
///
/// Useful for building inputs with prescribed degeneracies.
pub fn random_density_with_spectrum(spectrum: &[f64], seed: u64) -> Result<DensityMatrix> {
    let n = spectrum.len();
    let u = random_unitary(n, seed);
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(spectrum[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let m = u.matrix() * d * u.matrix().adjoint();
    crate::state::validate_density(&crate::matrix::ComplexMatrix::from_dmatrix(m)?, 1e-9)
}
