//! Fixed-seed inputs shared by the benchmarks.

use dmstrata::sampling::{random_density, random_generic_density, random_unitary};
use dmstrata::{apply_local_b, purify, DensityMatrix, PureState};

/// Full-rank density matrix of size `n`.
pub fn density(n: usize) -> DensityMatrix {
    random_density(n, n, 0xbe7c + n as u64).expect("full rank is always reachable")
}

/// Density matrix with well-separated nonzero eigenvalues.
pub fn generic_density(n: usize, mu: usize) -> DensityMatrix {
    random_generic_density(n, mu, 0x5eed + n as u64, 1e-3).expect("sampler budget")
}

/// Two purifications of the same rank-`mu` state.
pub fn purification_pair(n: usize, mu: usize) -> (PureState, PureState) {
    let rho = random_density(n, mu, 0xa11ce + n as u64).expect("rank in range");
    let base = purify(&rho).expect("valid input");
    let psi = apply_local_b(&base, &random_unitary(n, 1)).expect("sizes match");
    let phi = apply_local_b(&base, &random_unitary(n, 2)).expect("sizes match");
    (psi, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(density(4).n(), 4);
        assert_eq!(generic_density(5, 3).n(), 5);
        let (psi, phi) = purification_pair(3, 2);
        assert!(dmstrata::connecting_unitary(&psi, &phi, 1e-8).is_ok());
    }
}
