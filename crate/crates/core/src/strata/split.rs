//! Writing a rank-`mu` state as a convex mixture of rank-`(mu - 1)` states.

use crate::error::{Error, Result};
use crate::matrix::outer;
use crate::spectral::spectral_decompose;
use crate::state::{validate_density, DensityMatrix};

/// `rho = sum_k weights[k] * components[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexSplit {
    pub weights: Vec<f64>,
    pub components: Vec<DensityMatrix>,
}

/// Entrywise tolerance used when re-validating split components.
const COMPONENT_TOL: f64 = 1e-9;

/// Removes one eigenvalue at a time.
///
/// With `rho = sum_k l_k P_k` over the `mu` nonzero eigenvalues, the components
/// are `tau_k = (rho - l_k P_k) / (1 - l_k)` with weights
/// `(1 - l_k) / (mu - 1)`. Summing gives `(mu rho - rho) / (mu - 1) = rho`.
pub fn convex_split(rho: &DensityMatrix, tol: f64) -> Result<ConvexSplit> {
    let spectral = spectral_decompose(rho)?;
    let mu = spectral.rank(tol);
    if mu < 2 {
        return Err(Error::AlreadyPure);
    }
    let mut weights = Vec::with_capacity(mu);
    let mut components = Vec::with_capacity(mu);
    for k in 0..mu {
        let l = spectral.eigenvalues[k];
        let deficit = 1.0 - l;
        if deficit <= tol {
            return Err(Error::DegenerateTotalWeight { eigenvalue: l });
        }
        let tau = (rho.matrix() - outer(&spectral.eigenvectors[k]).scale(l)).unscale(deficit);
        let tau = crate::matrix::ComplexMatrix::from_dmatrix(tau)?;
        components.push(validate_density(&tau, COMPONENT_TOL)?);
        weights.push(deficit / (mu - 1) as f64);
    }
    Ok(ConvexSplit {
        weights,
        components,
    })
}

/// Pure states and weights reached by splitting until every component is pure.
#[derive(Debug, Clone, PartialEq)]
pub struct PureCover {
    /// Number of splitting rounds that were needed.
    pub levels: usize,
    pub weights: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

/// Applies [`convex_split`] recursively down to the pure stratum.
///
/// A rank-`mu` input takes exactly `mu - 1` rounds and produces `mu!` leaves.
pub fn pure_cover(rho: &DensityMatrix, tol: f64) -> Result<PureCover> {
    let mut frontier = vec![(1.0, rho.clone())];
    let mut levels = 0;
    loop {
        let mut next = Vec::new();
        let mut split_any = false;
        for (w, state) in frontier {
            match convex_split(&state, tol) {
                Ok(split) => {
                    split_any = true;
                    next.extend(split.weights.into_iter().map(|x| x * w).zip(split.components));
                }
                Err(Error::AlreadyPure) => next.push((w, state)),
                Err(e) => return Err(e),
            }
        }
        frontier = next;
        if !split_any {
            break;
        }
        levels += 1;
    }
    let (weights, states) = frontier.into_iter().unzip();
    Ok(PureCover {
        levels,
        weights,
        states,
    })
}
