use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One entry `(mu_j, sigma_j)` of the merged interior spectrum.
///
/// `sigma` is `-1` for an eigenvalue of the left block only, `+1` for the
/// right block only, and lies strictly inside `(-1, 1)` for a value common to
/// both blocks, where it encodes how the residue splits between the sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedEigenvalue {
    pub value: f64,
    pub sigma: f64,
}

impl SignedEigenvalue {
    pub fn new(value: f64, sigma: f64) -> Self {
        Self { value, sigma }
    }
}

/// Spectra of a Jacobi matrix and of the two blocks left after deleting
/// row and column `site`.
///
/// Fields are not checked on construction; use
/// [`validate_three_spectra`](crate::validate_three_spectra).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeSpectra {
    #[serde(rename = "N")]
    pub size: usize,
    /// 1-based index of the deleted row/column.
    pub site: usize,
    pub lambda: Vec<f64>,
    pub mu: Vec<SignedEigenvalue>,
}

impl ThreeSpectra {
    pub fn new(size: usize, site: usize, lambda: Vec<f64>, mu: Vec<SignedEigenvalue>) -> Self {
        Self {
            size,
            site,
            lambda,
            mu,
        }
    }

    /// Sorts `lambda` and `mu` ascending. Ties in `mu` are ordered by sigma so
    /// the result does not depend on the input permutation.
    pub fn canonicalize(&mut self) {
        self.lambda.sort_by(f64::total_cmp);
        self.mu.sort_by(|x, y| {
            x.value
                .total_cmp(&y.value)
                .then(x.sigma.total_cmp(&y.sigma))
        });
    }

    pub fn canonicalized(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn mu_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.mu.iter().map(|m| m.value)
    }

    /// Merged indices `j` with `mu[j].value == mu[j + 1].value`.
    pub fn doubled_pairs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut j = 0;
        while j + 1 < self.mu.len() {
            if self.mu[j].value == self.mu[j + 1].value {
                out.push(j);
                j += 2;
            } else {
                j += 1;
            }
        }
        out
    }
}

/// Finitely supported probability measure on the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl DiscreteMeasure {
    /// Builds a measure from strictly increasing nodes and positive weights.
    /// Weights are rescaled to sum to one.
    pub fn new(nodes: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::DegenerateMeasure("no nodes".into()));
        }
        if nodes.len() != weights.len() {
            return Err(Error::DegenerateMeasure(format!(
                "{} nodes but {} weights",
                nodes.len(),
                weights.len()
            )));
        }
        if let Some(k) = nodes.iter().position(|x| !x.is_finite()) {
            return Err(Error::DegenerateMeasure(format!("node {k} is not finite")));
        }
        if let Some(k) = nodes.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::DegenerateMeasure(format!(
                "nodes {k} and {} are not strictly increasing",
                k + 1
            )));
        }
        if let Some(k) = weights.iter().position(|&w| !(w.is_finite() && w > 0.0)) {
            return Err(Error::DegenerateMeasure(format!(
                "weight {k} = {} is not positive",
                weights[k]
            )));
        }
        let total: f64 = weights.iter().sum();
        let weights = weights.into_iter().map(|w| w / total).collect();
        Ok(Self { nodes, weights })
    }

    pub fn point(node: f64) -> Result<Self> {
        Self::new(vec![node], vec![1.0])
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_i w_i / (x_i - z)`, the Stieltjes transform of the measure.
    pub fn stieltjes(&self, z: f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w / (x - z))
            .sum()
    }

    /// `k`-th raw moment.
    pub fn moment(&self, k: i32) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * x.powi(k))
            .sum()
    }
}
