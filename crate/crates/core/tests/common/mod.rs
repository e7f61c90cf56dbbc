//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the solver under test.

#![allow(dead_code)]

use jacobi_spectra::JacobiMatrix;
use nalgebra::DMatrix;

pub fn dense(j: &JacobiMatrix) -> DMatrix<f64> {
    let n = j.size();
    let mut m = DMatrix::zeros(n, n);
    for (i, &b) in j.diagonal().iter().enumerate() {
        m[(i, i)] = b;
    }
    for (i, &a) in j.off_diagonal().iter().enumerate() {
        m[(i, i + 1)] = a;
        m[(i + 1, i)] = a;
    }
    m
}

/// Eigenvalues from a dense symmetric eigendecomposition, ascending.
pub fn dense_eigenvalues(j: &JacobiMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = dense(j)
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Eigenvalues and squared first/last eigenvector components from a dense
/// decomposition, ascending in eigenvalue.
pub fn dense_measure(j: &JacobiMatrix, last: bool) -> (Vec<f64>, Vec<f64>) {
    let eig = dense(j).symmetric_eigen();
    let n = j.size();
    let row = if last { n - 1 } else { 0 };
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| (eig.eigenvalues[k], eig.eigenvectors[(row, k)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}

/// Entry `(i, i)` (0-based) of `(J - z)^{-1}` via a dense LU solve.
pub fn resolvent_entry(j: &JacobiMatrix, z: f64, i: usize) -> f64 {
    let n = j.size();
    let mut m = dense(j);
    for k in 0..n {
        m[(k, k)] -= z;
    }
    let mut e = nalgebra::DVector::zeros(n);
    e[i] = 1.0;
    let x = m.lu().solve(&e).expect("nonsingular shift");
    x[i]
}

/// `det(J - x)` by the three-term recurrence.
pub fn char_poly(j: &JacobiMatrix, x: f64) -> f64 {
    let b = j.diagonal();
    let a = j.off_diagonal();
    let mut prev = 1.0;
    let mut cur = b[0] - x;
    for k in 1..b.len() {
        let next = (b[k] - x) * cur - a[k - 1] * a[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Roots of the characteristic polynomial: sign changes on a uniform grid
/// over a Gershgorin interval, each refined by bisection on the polynomial.
pub fn char_poly_roots(j: &JacobiMatrix, grid: usize) -> Vec<f64> {
    let b = j.diagonal();
    let a = j.off_diagonal();
    let r = b.iter().map(|x| x.abs()).fold(0.0, f64::max)
        + 2.0 * a.iter().fold(0.0, |m: f64, &x| m.max(x))
        + 1.0;
    let (lo, hi) = (-r, r);
    let step = (hi - lo) / grid as f64;
    let mut roots = Vec::new();
    let mut x0 = lo;
    let mut f0 = char_poly(j, x0);
    for k in 1..=grid {
        let x1 = lo + step * k as f64;
        let f1 = char_poly(j, x1);
        if f1 == 0.0 {
            roots.push(x1);
        } else if f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
            let (mut l, mut h, mut fl) = (x0, x1, f0);
            for _ in 0..200 {
                let m = 0.5 * (l + h);
                if m <= l || m >= h {
                    break;
                }
                let fm = char_poly(j, m);
                if (fm < 0.0) == (fl < 0.0) {
                    l = m;
                    fl = fm;
                } else {
                    h = m;
                }
            }
            roots.push(0.5 * (l + h));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

pub fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max)
}
