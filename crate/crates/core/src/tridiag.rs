//! Symmetric tridiagonal eigensolver.
//!
//! Eigenvalues come from Sturm-count bisection, which is exact in the count:
//! the `k`-th value returned has exactly `k - 1` eigenvalues below it. The
//! anchor components needed for spectral measures come from inverse
//! iteration on the pivoted LU factorization of `J - lambda`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Anchor, JacobiMatrix};
use crate::spectra::DiscreteMeasure;

/// Default bisection tolerance, relative to the Gershgorin bound of the
/// spectrum. Bisection runs to rounding level: the inverse map amplifies
/// eigenvalue errors through the gaps between interlaced spectra.
pub const DEFAULT_EIG_TOL: f64 = f64::EPSILON;

/// Weights below this are reported as degenerate rather than clamped.
pub const WEIGHT_FLOOR: f64 = 1e-300;

const INVERSE_ITERATIONS: usize = 3;
const CLUSTER_GAP: f64 = 1e-3;

fn pivot_floor(j: &JacobiMatrix) -> f64 {
    let amax = j.off_diagonal().iter().fold(1.0f64, |m, &x| m.max(x * x));
    f64::MIN_POSITIVE * amax
}

/// Number of eigenvalues of `j` strictly below `x`.
pub fn sturm_count(j: &JacobiMatrix, x: f64) -> usize {
    sturm_count_with_floor(j, x, pivot_floor(j))
}

fn sturm_count_with_floor(j: &JacobiMatrix, x: f64, floor: f64) -> usize {
    let b = j.diagonal();
    let a = j.off_diagonal();
    let mut count = 0;
    let mut q = b[0] - x;
    for i in 0..b.len() {
        if i > 0 {
            q = (b[i] - x) - a[i - 1] * a[i - 1] / q;
        }
        if q.abs() < floor {
            q = -floor;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn spectral_scale(j: &JacobiMatrix) -> f64 {
    let (lo, hi) = j.gershgorin();
    let s = lo.abs().max(hi.abs());
    if s > 0.0 {
        s
    } else {
        1.0
    }
}

/// All eigenvalues of `j` in ascending order, each bisected to a bracket of
/// width `tol` times the Gershgorin bound (or to rounding level).
pub fn eigenvalues(j: &JacobiMatrix, tol: f64) -> Vec<f64> {
    let n = j.size();
    if n == 1 {
        return vec![j.diagonal()[0]];
    }
    let floor = pivot_floor(j);
    let (glo, ghi) = j.gershgorin();
    let scale = spectral_scale(j);
    let abs_tol = tol * scale;
    let pad = 2.0 * f64::EPSILON * scale;
    let (glo, ghi) = (glo - pad, ghi + pad);

    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // invariant: count(lo) <= k < count(hi)
        let mut lo = match out.last() {
            Some(&prev) if sturm_count_with_floor(j, prev, floor) <= k => prev,
            _ => glo,
        };
        let mut hi = ghi;
        loop {
            let mid = 0.5 * (lo + hi);
            let width = hi - lo;
            if width <= abs_tol
                || width <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs())
                || mid <= lo
                || mid >= hi
            {
                break;
            }
            if sturm_count_with_floor(j, mid, floor) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Pivoted LU factorization of a shifted tridiagonal matrix, in the layout
/// of LAPACK `dgttrf`.
struct TridiagLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagLu {
    fn factor(j: &JacobiMatrix, shift: f64, tiny: f64) -> Self {
        let n = j.size();
        let mut d: Vec<f64> = j.diagonal().iter().map(|b| b - shift).collect();
        let mut dl = j.off_diagonal().to_vec();
        let mut du = j.off_diagonal().to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                let mult = dl[i] / d[i];
                dl[i] = mult;
                d[i + 1] -= mult * du[i];
            } else {
                let mult = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = mult;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - mult * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -mult;
                }
                swapped[i] = true;
            }
        }
        for x in d.iter_mut() {
            if x.abs() < tiny {
                *x = if *x < 0.0 { -tiny } else { tiny };
            }
        }
        Self {
            dl,
            d,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, x: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = x[i];
                x[i] = x[i + 1];
                x[i + 1] = temp - self.dl[i] * x[i];
            } else {
                x[i + 1] -= self.dl[i] * x[i];
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            if i + 1 < n {
                s -= self.du[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= self.du2[i] * x[i + 2];
            }
            x[i] = s / self.d[i];
        }
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

fn orthogonalize(v: &mut [f64], against: &[Vec<f64>]) {
    for q in against {
        let dot: f64 = v.iter().zip(q).map(|(x, y)| x * y).sum();
        v.iter_mut().zip(q).for_each(|(x, y)| *x -= dot * y);
    }
}

/// Unit eigenvectors for the given (ascending) eigenvalues, by inverse
/// iteration with reorthogonalization inside clusters.
fn eigenvectors(j: &JacobiMatrix, values: &[f64]) -> Vec<Vec<f64>> {
    let n = j.size();
    let scale = j.norm_inf().max(f64::MIN_POSITIVE);
    let tiny = f64::EPSILON * scale;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f1a_c0b1);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(values.len());
    let mut cluster_start = 0;
    for (k, &lambda) in values.iter().enumerate() {
        if k > 0 && lambda - values[k - 1] > CLUSTER_GAP * scale {
            cluster_start = k;
        }
        let lu = TridiagLu::factor(j, lambda, tiny);
        let mut v: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        normalize(&mut v);
        for _ in 0..INVERSE_ITERATIONS {
            lu.solve(&mut v);
            let cluster = &vectors[cluster_start..k];
            orthogonalize(&mut v, cluster);
            normalize(&mut v);
        }
        vectors.push(v);
    }
    vectors
}

/// Spectral measure of `j` anchored at its first or last basis vector:
/// nodes are the eigenvalues, weights the squared anchor components of the
/// normalized eigenvectors.
pub fn spectral_measure(j: &JacobiMatrix, anchor: Anchor, tol: f64) -> Result<DiscreteMeasure> {
    let values = eigenvalues(j, tol);
    let n = values.len();
    if n == 1 {
        return DiscreteMeasure::new(values, vec![1.0]);
    }
    let scale = spectral_scale(j);
    if let Some(k) = values.windows(2).position(|w| w[1] - w[0] <= tol * scale) {
        return Err(Error::Degenerate(format!(
            "eigenvalues {} and {} coincide within tolerance ({} vs {})",
            k + 1,
            k + 2,
            values[k],
            values[k + 1]
        )));
    }
    let index = match anchor {
        Anchor::First => 0,
        Anchor::Last => n - 1,
    };
    let weights: Vec<f64> = eigenvectors(j, &values)
        .iter()
        .map(|v| v[index] * v[index])
        .collect();
    if let Some(k) = weights.iter().position(|&w| !(w >= WEIGHT_FLOOR)) {
        return Err(Error::Degenerate(format!(
            "weight of eigenvalue {} is {:e}, below {WEIGHT_FLOOR:e}",
            k + 1,
            weights[k]
        )));
    }
    DiscreteMeasure::new(values, weights)
}
