//! Jacobi matrix from its spectral measure.
//!
//! Runs the Lanczos recurrence on the diagonal operator of the nodes with
//! starting vector `sqrt(w)`. Every new direction is orthogonalized twice
//! against all previous ones, which keeps the recovered coefficients
//! accurate without resorting to power moments.

use crate::error::{Error, Result};
use crate::matrix::{Anchor, JacobiMatrix};
use crate::spectra::DiscreteMeasure;

/// Recurrence norms below this fraction of the node spread are breakdowns.
pub const BREAKDOWN_TOL: f64 = 1e-12;

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(p, q)| p * q).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    y.iter_mut().zip(x).for_each(|(t, s)| *t += alpha * s);
}

/// The unique Jacobi matrix whose spectral measure at `anchor` is `m`.
pub fn measure_to_jacobi(m: &DiscreteMeasure, anchor: Anchor) -> Result<JacobiMatrix> {
    let j = lanczos(m)?;
    Ok(match anchor {
        Anchor::First => j,
        Anchor::Last => reverse_jacobi(&j),
    })
}

fn lanczos(m: &DiscreteMeasure) -> Result<JacobiMatrix> {
    let x = m.nodes();
    let w = m.weights();
    let size = x.len();
    if let Some(k) = x.windows(2).position(|p| p[0] >= p[1]) {
        return Err(Error::DegenerateMeasure(format!(
            "nodes {} and {} are not distinct and increasing",
            k + 1,
            k + 2
        )));
    }
    if let Some(k) = w.iter().position(|&v| !(v > 0.0)) {
        return Err(Error::DegenerateMeasure(format!(
            "weight {} is not positive",
            k + 1
        )));
    }
    let spread = x[size - 1] - x[0];
    let threshold = BREAKDOWN_TOL * spread;

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(size);
    let mut b = Vec::with_capacity(size);
    let mut a: Vec<f64> = Vec::with_capacity(size.saturating_sub(1));

    let mut q: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();
    let norm = dot(&q, &q).sqrt();
    q.iter_mut().for_each(|t| *t /= norm);

    for k in 0..size {
        let mut r: Vec<f64> = x.iter().zip(&q).map(|(xi, qi)| xi * qi).collect();
        let bk = dot(&q, &r);
        b.push(bk);
        basis.push(q);
        if k + 1 == size {
            break;
        }
        axpy(-bk, &basis[k], &mut r);
        if k > 0 {
            axpy(-a[k - 1], &basis[k - 1], &mut r);
        }
        for _ in 0..2 {
            for v in &basis {
                let c = dot(v, &r);
                axpy(-c, v, &mut r);
            }
        }
        let norm = dot(&r, &r).sqrt();
        if !(norm > threshold) {
            return Err(Error::Breakdown {
                step: k + 1,
                norm,
                threshold,
            });
        }
        a.push(norm);
        r.iter_mut().for_each(|t| *t /= norm);
        q = r;
    }
    JacobiMatrix::new(b, a)
}

/// Index-reversed matrix; swaps the roles of the first and last anchor.
pub fn reverse_jacobi(j: &JacobiMatrix) -> JacobiMatrix {
    j.reversed()
}
