//! Inverse map: three spectra with sign data to the Jacobi matrix.
//!
//! The ratio `prod (z - lambda_j) / prod (z - mu_j)` has partial fractions
//! `z - b_n - sum beta_i / (z - mu_i)`. Each simple `mu_i` yields the residue
//! `beta_i` of its own block; a doubled value, after its `lambda` cancels,
//! yields only the sum `gamma`, which `sigma` splits between the blocks as
//! `(1 - sigma) / 2` and `(1 + sigma) / 2`. Summing the `beta` of a block
//! gives the squared coupling to that block, and the normalized `beta` form
//! its spectral measure.

use crate::error::{Error, Result};
use crate::matrix::{Anchor, JacobiMatrix};
use crate::moment::measure_to_jacobi;
use crate::product::SignedLogProduct;
use crate::resolvent::reduced_poles_and_zeros;
use crate::spectra::{DiscreteMeasure, ThreeSpectra};
use crate::validate::validate_three_spectra;

/// Coefficients of the deleted row and the spectral measures of both blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorBlock {
    /// `a_{n-1}^2`; zero when `site == 1`.
    pub a_minus_sq: f64,
    /// `a_n^2`; zero when `site == N`.
    pub a_plus_sq: f64,
    pub b_n: f64,
    /// Measure of the left block anchored at its last index.
    pub measure_minus: Option<DiscreteMeasure>,
    /// Measure of the right block anchored at its first index.
    pub measure_plus: Option<DiscreteMeasure>,
}

#[derive(Clone, Copy)]
enum Side {
    Minus,
    Plus,
    Both(f64),
}

/// Solves for `a_{n-1}^2`, `a_n^2`, `b_n` and the block measures.
pub fn interior_coefficients(data: &ThreeSpectra) -> Result<InteriorBlock> {
    let report = validate_three_spectra(data);
    if !report.ok {
        return Err(Error::Invalid(report));
    }

    // One entry per distinct mu value, remembering its first merged index.
    let doubled = data.doubled_pairs();
    let mut poles: Vec<(usize, Side)> = Vec::with_capacity(data.mu.len());
    let mut j = 0;
    while j < data.mu.len() {
        if doubled.contains(&j) {
            poles.push((j, Side::Both(data.mu[j].sigma)));
            j += 2;
        } else {
            let side = if data.mu[j].sigma < 0.0 {
                Side::Minus
            } else {
                Side::Plus
            };
            poles.push((j, side));
            j += 1;
        }
    }
    let (lambda, mu) = reduced_poles_and_zeros(data);
    debug_assert_eq!(mu.len(), poles.len());

    let mut minus_nodes = Vec::new();
    let mut minus_beta = Vec::new();
    let mut plus_nodes = Vec::new();
    let mut plus_beta = Vec::new();
    for (p, &(index, side)) in poles.iter().enumerate() {
        let value = mu[p];
        let mut res = SignedLogProduct::one();
        for &l in &lambda {
            res.mul(value - l);
        }
        for (q, &other) in mu.iter().enumerate() {
            if q != p {
                res.div(value - other);
            }
        }
        res.negate();
        let total = res.value();
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::NonPositiveResidue {
                index: index + 1,
                value: total,
            });
        }
        match side {
            Side::Minus => {
                minus_nodes.push(value);
                minus_beta.push(total);
            }
            Side::Plus => {
                plus_nodes.push(value);
                plus_beta.push(total);
            }
            Side::Both(sigma) => {
                let beta_minus = 0.5 * (1.0 - sigma) * total;
                let beta_plus = 0.5 * (1.0 + sigma) * total;
                for beta in [beta_minus, beta_plus] {
                    if !(beta > 0.0) {
                        return Err(Error::NonPositiveResidue {
                            index: index + 1,
                            value: beta,
                        });
                    }
                }
                minus_nodes.push(value);
                minus_beta.push(beta_minus);
                plus_nodes.push(value);
                plus_beta.push(beta_plus);
            }
        }
    }

    let a_minus_sq: f64 = minus_beta.iter().sum();
    let a_plus_sq: f64 = plus_beta.iter().sum();
    let b_n = data.lambda.iter().sum::<f64>() - data.mu_values().sum::<f64>();
    let measure_minus = (!minus_nodes.is_empty())
        .then(|| DiscreteMeasure::new(minus_nodes, minus_beta))
        .transpose()?;
    let measure_plus = (!plus_nodes.is_empty())
        .then(|| DiscreteMeasure::new(plus_nodes, plus_beta))
        .transpose()?;

    Ok(InteriorBlock {
        a_minus_sq,
        a_plus_sq,
        b_n,
        measure_minus,
        measure_plus,
    })
}

/// Rebuilds the Jacobi matrix determined by `data`.
pub fn reconstruct(data: &ThreeSpectra) -> Result<JacobiMatrix> {
    let block = interior_coefficients(data)?;
    let left = block
        .measure_minus
        .as_ref()
        .map(|m| measure_to_jacobi(m, Anchor::Last))
        .transpose()?;
    let right = block
        .measure_plus
        .as_ref()
        .map(|m| measure_to_jacobi(m, Anchor::First))
        .transpose()?;

    let mut b = Vec::with_capacity(data.size);
    let mut a = Vec::with_capacity(data.size - 1);
    if let Some(left) = left {
        let (lb, la) = left.into_parts();
        b.extend(lb);
        a.extend(la);
        a.push(block.a_minus_sq.sqrt());
    }
    b.push(block.b_n);
    if let Some(right) = right {
        a.push(block.a_plus_sq.sqrt());
        let (rb, ra) = right.into_parts();
        b.extend(rb);
        a.extend(ra);
    }
    JacobiMatrix::new(b, a)
}
