use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real symmetric tridiagonal matrix with strictly positive off-diagonal.
///
/// `b` holds the `N` diagonal entries, `a` the `N - 1` off-diagonal ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct JacobiMatrix {
    b: Vec<f64>,
    a: Vec<f64>,
}

#[derive(Deserialize)]
struct RawMatrix {
    b: Vec<f64>,
    a: Vec<f64>,
}

impl TryFrom<RawMatrix> for JacobiMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        JacobiMatrix::new(raw.b, raw.a)
    }
}

impl JacobiMatrix {
    pub fn new(b: Vec<f64>, a: Vec<f64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidMatrix("empty diagonal".into()));
        }
        if a.len() + 1 != b.len() {
            return Err(Error::InvalidMatrix(format!(
                "expected {} off-diagonal entries, got {}",
                b.len() - 1,
                a.len()
            )));
        }
        if let Some(k) = b.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidMatrix(format!("b[{k}] is not finite")));
        }
        if let Some(k) = a.iter().position(|&x| !(x.is_finite() && x > 0.0)) {
            return Err(Error::InvalidMatrix(format!(
                "a[{k}] = {} must be finite and positive",
                a[k]
            )));
        }
        Ok(Self { b, a })
    }

    /// The 1×1 matrix `(b)`.
    pub fn scalar(b: f64) -> Result<Self> {
        Self::new(vec![b], Vec::new())
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.b
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.a
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.b, self.a)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let n = self.size();
        (0..n)
            .map(|i| {
                let left = if i > 0 { self.a[i - 1] } else { 0.0 };
                let right = if i + 1 < n { self.a[i] } else { 0.0 };
                self.b[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Gershgorin enclosure `[lo, hi]` of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.size();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.a[i - 1] } else { 0.0 };
            let right = if i + 1 < n { self.a[i] } else { 0.0 };
            lo = lo.min(self.b[i] - left - right);
            hi = hi.max(self.b[i] + left + right);
        }
        (lo, hi)
    }

    pub fn trace(&self) -> f64 {
        self.b.iter().sum()
    }

    /// Index-reversed copy: `b_k -> b_{N+1-k}`, `a_k -> a_{N-k}`.
    pub fn reversed(&self) -> Self {
        Self {
            b: self.b.iter().rev().copied().collect(),
            a: self.a.iter().rev().copied().collect(),
        }
    }

    /// Largest entrywise difference between two matrices of the same size.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.size(), other.size(), "size mismatch");
        self.b
            .iter()
            .zip(&other.b)
            .chain(self.a.iter().zip(&other.a))
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// Which basis vector anchors a spectral measure.
///
/// The minus-side m-function is anchored at the last index of its block,
/// the plus-side one at the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anchor {
    First,
    Last,
}
