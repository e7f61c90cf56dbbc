//! Inputs shared by the benchmarks.

use jacobi_spectra::harness::{random_jacobi, synthetic_three_spectra, trial_rng};
use jacobi_spectra::{JacobiMatrix, ThreeSpectra};

pub fn sample_matrix(size: usize, seed: u64) -> JacobiMatrix {
    let mut rng = trial_rng(seed, size as u64);
    random_jacobi(&mut rng, size, 0.5..2.0, -1.0..1.0).expect("positive couplings")
}

/// Admissible spectra for a middle split with one common eigenvalue.
///
/// Synthetic rather than computed from a random matrix: for large sizes the
/// spectra of random matrices are not resolvable in double precision.
pub fn sample_spectra(size: usize, seed: u64) -> ThreeSpectra {
    let mut rng = trial_rng(seed, size as u64);
    let site = size.div_ceil(2);
    let doubled = (site - 1).min(size - site).min(1);
    synthetic_three_spectra(&mut rng, size, site, doubled, 0.9, 0.05)
}
