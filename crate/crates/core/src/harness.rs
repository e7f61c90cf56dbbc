//! Seeded generators and the forward/inverse round-trip harness.

use std::ops::Range;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::forward::{extract_three_spectra, split_at_site, ForwardOptions};
use crate::inverse::reconstruct;
use crate::matrix::JacobiMatrix;
use crate::spectra::{SignedEigenvalue, ThreeSpectra};
use crate::tridiag::eigenvalues;

/// Generator for trial `trial` of a run seeded with `seed`. Each trial owns
/// its own stream, so results do not depend on evaluation order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Jacobi matrix with `b_k` uniform in `b_range` and `a_k` uniform in
/// `a_range` (which must be positive).
pub fn random_jacobi<R: Rng>(
    rng: &mut R,
    size: usize,
    a_range: Range<f64>,
    b_range: Range<f64>,
) -> Result<JacobiMatrix> {
    let b = (0..size)
        .map(|_| rng.random_range(b_range.clone()))
        .collect();
    let a = (0..size.saturating_sub(1))
        .map(|_| rng.random_range(a_range.clone()))
        .collect();
    JacobiMatrix::new(b, a)
}

/// Valid three-spectra data with `doubled` common eigenvalues. Distinct `mu`
/// values are at least `min_gap` apart; each `lambda` strictly between two
/// simple neighbours sits in the middle 80% of their gap. Common values get
/// `sigma` uniform in `(-sigma_max, sigma_max)`.
///
/// Panics if `doubled > min(site - 1, size - site)`.
pub fn synthetic_three_spectra<R: Rng>(
    rng: &mut R,
    size: usize,
    site: usize,
    doubled: usize,
    sigma_max: f64,
    min_gap: f64,
) -> ThreeSpectra {
    assert!(site >= 1 && site <= size);
    assert!(
        doubled <= (site - 1).min(size - site),
        "too many common values"
    );
    if size == 1 {
        return ThreeSpectra::new(1, 1, vec![rng.random_range(-1.0..1.0)], Vec::new());
    }

    let distinct = size - 1 - doubled;
    let mut values = Vec::with_capacity(distinct);
    let mut v = rng.random_range(-1.0..0.0);
    for _ in 0..distinct {
        values.push(v);
        v += min_gap + rng.random_range(0.0..0.5);
    }

    // side per distinct value: Some(sigma) for common ones
    let common: Vec<usize> = sample(rng, distinct, doubled).into_vec();
    let simple: Vec<usize> = (0..distinct).filter(|i| !common.contains(i)).collect();
    let minus_simple = site - 1 - doubled;
    let minus_pick = sample(rng, simple.len(), minus_simple).into_vec();

    let mut mu = Vec::with_capacity(size - 1);
    for (i, &value) in values.iter().enumerate() {
        if common.contains(&i) {
            let sigma = rng.random_range(-sigma_max..sigma_max);
            mu.push(SignedEigenvalue::new(value, sigma));
            mu.push(SignedEigenvalue::new(value, sigma));
        } else {
            let pos = simple.iter().position(|&s| s == i).unwrap();
            let sigma = if minus_pick.contains(&pos) { -1.0 } else { 1.0 };
            mu.push(SignedEigenvalue::new(value, sigma));
        }
    }

    let mut lambda = Vec::with_capacity(size);
    lambda.push(mu[0].value - min_gap - rng.random_range(0.0..0.5));
    for j in 0..size - 2 {
        let (lo, hi) = (mu[j].value, mu[j + 1].value);
        if lo == hi {
            lambda.push(lo);
        } else {
            lambda.push(lo + (hi - lo) * rng.random_range(0.1..0.9));
        }
    }
    lambda.push(mu[size - 2].value + min_gap + rng.random_range(0.0..0.5));

    ThreeSpectra::new(size, site, lambda, mu)
}

/// `max |reconstruct(extract(H, n)) - H|` over the given sites, divided by
/// `1 + ||H||_inf`.
pub fn roundtrip_error(h: &JacobiMatrix, sites: &[usize], opts: &ForwardOptions) -> Result<f64> {
    let scale = 1.0 + h.norm_inf();
    let mut worst = 0.0f64;
    for &site in sites {
        let data = extract_three_spectra(h, site, opts)?;
        let back = reconstruct(&data)?;
        worst = worst.max(h.max_abs_diff(&back) / scale);
    }
    Ok(worst)
}

/// Which sites a round-trip run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sites {
    All,
    One(usize),
}

impl Sites {
    pub fn list(self, size: usize) -> Vec<usize> {
        match self {
            Sites::All => (1..=size).collect(),
            Sites::One(n) => vec![n],
        }
    }
}

#[derive(Debug, Clone)]
pub struct RoundtripConfig {
    pub size: usize,
    pub sites: Sites,
    pub trials: usize,
    pub seed: u64,
    pub a_range: Range<f64>,
    pub b_range: Range<f64>,
    pub tol: f64,
    pub forward: ForwardOptions,
}

impl Default for RoundtripConfig {
    fn default() -> Self {
        Self {
            size: 8,
            sites: Sites::All,
            trials: 100,
            seed: 0,
            a_range: 0.5..2.0,
            b_range: -1.0..1.0,
            tol: 1e-8,
            forward: ForwardOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial: usize,
    /// Scaled error, or `None` when reconstruction failed.
    pub error: Option<f64>,
    /// Failure explanation, including a suspected false merge or split.
    pub diagnosis: Option<String>,
}

impl TrialOutcome {
    pub fn passed(&self, tol: f64) -> bool {
        matches!(self.error, Some(e) if e <= tol)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundtripReport {
    pub trials: Vec<TrialOutcome>,
    pub tol: f64,
}

impl RoundtripReport {
    pub fn all_passed(&self) -> bool {
        self.trials.iter().all(|t| t.passed(self.tol))
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialOutcome> {
        self.trials.iter().filter(|t| !t.passed(self.tol))
    }

    /// Largest finite error, if any trial completed.
    pub fn max_error(&self) -> Option<f64> {
        self.trials.iter().filter_map(|t| t.error).reduce(f64::max)
    }

    pub fn median_error(&self) -> Option<f64> {
        let mut errs: Vec<f64> = self.trials.iter().filter_map(|t| t.error).collect();
        if errs.is_empty() {
            return None;
        }
        errs.sort_by(f64::total_cmp);
        let m = errs.len() / 2;
        Some(if errs.len() % 2 == 1 {
            errs[m]
        } else {
            0.5 * (errs[m - 1] + errs[m])
        })
    }
}

/// Runs `cfg.trials` seeded forward/inverse round trips.
pub fn run_roundtrip(cfg: &RoundtripConfig) -> Result<RoundtripReport> {
    let sites = cfg.sites.list(cfg.size);
    let mut trials = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut rng = trial_rng(cfg.seed, trial as u64);
        let h = random_jacobi(&mut rng, cfg.size, cfg.a_range.clone(), cfg.b_range.clone())?;
        let outcome = match roundtrip_error(&h, &sites, &cfg.forward) {
            Ok(error) if error <= cfg.tol => TrialOutcome {
                trial,
                error: Some(error),
                diagnosis: None,
            },
            Ok(error) => TrialOutcome {
                trial,
                error: Some(error),
                diagnosis: Some(diagnose(&h, &sites, &cfg.forward)),
            },
            Err(e) => TrialOutcome {
                trial,
                error: None,
                diagnosis: Some(format!("{e}; {}", diagnose(&h, &sites, &cfg.forward))),
            },
        };
        trials.push(outcome);
    }
    Ok(RoundtripReport {
        trials,
        tol: cfg.tol,
    })
}

/// Closest approach between the two block spectra at each site, classified
/// against the merge tolerance.
fn diagnose(h: &JacobiMatrix, sites: &[usize], opts: &ForwardOptions) -> String {
    let mut notes = Vec::new();
    for &site in sites {
        let Ok((Some(left), Some(right))) = split_at_site(h, site) else {
            continue;
        };
        let le = eigenvalues(&left, opts.eig_tol);
        let re = eigenvalues(&right, opts.eig_tol);
        let (gap, at) = le
            .iter()
            .flat_map(|x| re.iter().map(move |y| ((x - y).abs(), *x)))
            .fold(
                (f64::INFINITY, 0.0),
                |acc, g| if g.0 < acc.0 { g } else { acc },
            );
        let tol = opts.merge_tol * at.abs().max(1.0);
        if gap <= tol && gap > 1e3 * f64::EPSILON * at.abs().max(1.0) {
            notes.push(format!(
                "site {site}: possible false merge (block gap {gap:e})"
            ));
        } else if gap > tol && gap < 1e3 * tol {
            notes.push(format!(
                "site {site}: possible false split (block gap {gap:e})"
            ));
        }
    }
    if notes.is_empty() {
        "no near-common block eigenvalues".into()
    } else {
        notes.join("; ")
    }
}
