//! Forward and inverse spectral maps for finite Jacobi matrices.
//!
//! Deleting row and column `n` of an `N x N` Jacobi matrix `H` leaves two
//! blocks `H_-` (indices `1..n-1`) and `H_+` (indices `n+1..N`). The
//! eigenvalues of `H`, the merged eigenvalues of the blocks and one sign per
//! block eigenvalue determine `H` uniquely, and every admissible set of such
//! data comes from some `H`:
//!
//! * [`extract_three_spectra`] computes the data from a matrix,
//! * [`validate_three_spectra`] checks admissibility,
//! * [`reconstruct`] recovers the matrix.
//!
//! ```
//! use jacobi_spectra::{extract_three_spectra, reconstruct, ForwardOptions, JacobiMatrix};
//!
//! let h = JacobiMatrix::new(vec![0.3, -0.2, 0.5, 0.1], vec![1.0, 0.7, 1.4]).unwrap();
//! let data = extract_three_spectra(&h, 2, &ForwardOptions::default()).unwrap();
//! let back = reconstruct(&data).unwrap();
//! assert!(h.max_abs_diff(&back) < 1e-12);
//! ```

// NaN must fail the positivity and ordering checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod error;
pub mod forward;
pub mod harness;
pub mod inverse;
mod matrix;
pub mod moment;
mod product;
pub mod resolvent;
mod spectra;
pub mod tridiag;
pub mod validate;

pub use error::{Error, Result};
pub use forward::{extract_three_spectra, split_at_site, ForwardOptions, DEFAULT_MERGE_TOL};
pub use inverse::{interior_coefficients, reconstruct, InteriorBlock};
pub use matrix::{Anchor, JacobiMatrix};
pub use moment::{measure_to_jacobi, reverse_jacobi};
pub use product::SignedLogProduct;
pub use resolvent::g_product_form;
pub use spectra::{DiscreteMeasure, SignedEigenvalue, ThreeSpectra};
pub use tridiag::{eigenvalues, spectral_measure, sturm_count, DEFAULT_EIG_TOL};
pub use validate::{
    validate_three_spectra, validate_three_spectra_with, Rule, ValidationReport, Violation,
};
