use crate::error::{Error, Result};
use crate::product::SignedLogProduct;
use crate::spectra::ThreeSpectra;

/// Relative distance below which `z` counts as hitting a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Diagonal resolvent entry `((H - z)^{-1})_{nn}` evaluated from spectral
/// data alone, as `prod_j (mu_j - z) / prod_j (lambda_j - z)`.
///
/// Each doubled `mu` cancels against its matching `lambda` before evaluation.
/// `data` must be structurally valid (sorted, consistent lengths).
pub fn g_product_form(data: &ThreeSpectra, z: f64) -> Result<f64> {
    let (lambda, mu) = reduced_poles_and_zeros(data);
    for &l in &lambda {
        if (z - l).abs() <= POLE_TOL * l.abs().max(1.0) {
            return Err(Error::Pole { z });
        }
    }
    let mut p = SignedLogProduct::one();
    for m in mu {
        p.mul(m - z);
    }
    for l in lambda {
        p.div(l - z);
    }
    Ok(p.value())
}

/// `(lambda', mu')` with every doubled pair `mu_j = mu_{j+1} = lambda_{j+1}`
/// reduced to the single pole it contributes: one copy of `mu` survives and
/// `lambda_{j+1}` is dropped.
pub(crate) fn reduced_poles_and_zeros(data: &ThreeSpectra) -> (Vec<f64>, Vec<f64>) {
    let doubled = data.doubled_pairs();
    let mut drop_lambda = vec![false; data.lambda.len()];
    let mut drop_mu = vec![false; data.mu.len()];
    for &j in &doubled {
        drop_lambda[j + 1] = true;
        drop_mu[j + 1] = true;
    }
    let lambda = data
        .lambda
        .iter()
        .zip(&drop_lambda)
        .filter(|(_, &d)| !d)
        .map(|(&x, _)| x)
        .collect();
    let mu = data
        .mu
        .iter()
        .zip(&drop_mu)
        .filter(|(_, &d)| !d)
        .map(|(m, _)| m.value)
        .collect();
    (lambda, mu)
}
