//! Forward map: Jacobi matrix to three spectra with sign data.

use crate::error::{Error, Result};
use crate::matrix::{Anchor, JacobiMatrix};
use crate::spectra::{SignedEigenvalue, ThreeSpectra};
use crate::tridiag::{eigenvalues, spectral_measure, DEFAULT_EIG_TOL};

/// Default relative tolerance for declaring an eigenvalue common to both
/// blocks, scaled by `max(1, |mu|)`.
pub const DEFAULT_MERGE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardOptions {
    pub merge_tol: f64,
    pub eig_tol: f64,
}

impl Default for ForwardOptions {
    fn default() -> Self {
        Self {
            merge_tol: DEFAULT_MERGE_TOL,
            eig_tol: DEFAULT_EIG_TOL,
        }
    }
}

/// The blocks left after deleting row and column `site` (1-based). Either
/// side is `None` when empty.
pub fn split_at_site(
    j: &JacobiMatrix,
    site: usize,
) -> Result<(Option<JacobiMatrix>, Option<JacobiMatrix>)> {
    let size = j.size();
    if site == 0 || site > size {
        return Err(Error::SiteOutOfRange { site, size });
    }
    let b = j.diagonal();
    let a = j.off_diagonal();
    let left = (site > 1)
        .then(|| JacobiMatrix::new(b[..site - 1].to_vec(), a[..site - 2].to_vec()))
        .transpose()?;
    let right = (site < size)
        .then(|| JacobiMatrix::new(b[site..].to_vec(), a[site..].to_vec()))
        .transpose()?;
    Ok((left, right))
}

/// Eigenvalues of `j` and of its two blocks around `site`, merged, with sign
/// data. Values common to both blocks (within `merge_tol`) are listed twice
/// with their mean as common value and
/// `sigma = (a_n^2 alpha^+ - a_{n-1}^2 alpha^-) / (a_n^2 alpha^+ + a_{n-1}^2 alpha^-)`.
pub fn extract_three_spectra(
    j: &JacobiMatrix,
    site: usize,
    opts: &ForwardOptions,
) -> Result<ThreeSpectra> {
    let (left, right) = split_at_site(j, site)?;
    let lambda = eigenvalues(j, opts.eig_tol);
    let left_eigs = left
        .as_ref()
        .map(|h| eigenvalues(h, opts.eig_tol))
        .unwrap_or_default();
    let right_eigs = right
        .as_ref()
        .map(|h| eigenvalues(h, opts.eig_tol))
        .unwrap_or_default();

    let pairs = common_pairs(&left_eigs, &right_eigs, opts.merge_tol);

    let mut mu = Vec::with_capacity(j.size() - 1);
    mu.extend(
        left_eigs
            .iter()
            .enumerate()
            .filter(|(k, _)| !pairs.iter().any(|p| p.0 == *k))
            .map(|(_, &v)| SignedEigenvalue::new(v, -1.0)),
    );
    mu.extend(
        right_eigs
            .iter()
            .enumerate()
            .filter(|(l, _)| !pairs.iter().any(|p| p.1 == *l))
            .map(|(_, &v)| SignedEigenvalue::new(v, 1.0)),
    );

    if !pairs.is_empty() {
        // both blocks exist whenever a pair was found
        let left = left.as_ref().expect("left block");
        let right = right.as_ref().expect("right block");
        let left_w = spectral_measure(left, Anchor::Last, opts.eig_tol)?;
        let right_w = spectral_measure(right, Anchor::First, opts.eig_tol)?;
        let a = j.off_diagonal();
        let a_minus_sq = a[site - 2] * a[site - 2];
        let a_plus_sq = a[site - 1] * a[site - 1];
        for &(k, l) in &pairs {
            let minus = a_minus_sq * left_w.weights()[k];
            let plus = a_plus_sq * right_w.weights()[l];
            let sigma = (plus - minus) / (plus + minus);
            let value = 0.5 * (left_eigs[k] + right_eigs[l]);
            mu.push(SignedEigenvalue::new(value, sigma));
            mu.push(SignedEigenvalue::new(value, sigma));
        }
    }
    mu.sort_by(|x, y| x.value.total_cmp(&y.value));

    Ok(ThreeSpectra::new(j.size(), site, lambda, mu))
}

/// Index pairs `(k, l)` with `|left[k] - right[l]| <= tol * max(1, |value|)`,
/// each index used at most once. Both inputs ascending.
fn common_pairs(left: &[f64], right: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let (mut k, mut l) = (0, 0);
    while k < left.len() && l < right.len() {
        let (x, y) = (left[k], right[l]);
        let scale = x.abs().max(y.abs()).max(1.0);
        if (x - y).abs() <= tol * scale {
            pairs.push((k, l));
            k += 1;
            l += 1;
        } else if x < y {
            k += 1;
        } else {
            l += 1;
        }
    }
    pairs
}
