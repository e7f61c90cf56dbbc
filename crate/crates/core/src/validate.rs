//! Admissibility check for three-spectra data.
//!
//! Rules, with indices 1-based in all diagnostics:
//!
//! * `a` — `lambda` strictly increasing.
//! * `b` — interlacing: `lambda_1 < mu_1`, `mu_{N-1} < lambda_N` and
//!   `lambda_j <= mu_j <= lambda_{j+1}`.
//! * `c` — no `mu` value occurs more than twice.
//! * `d` — a simple `mu_j` lies strictly inside `(lambda_j, lambda_{j+1})`
//!   and carries `sigma_j = ±1`.
//! * `e` — a doubled pair `mu_j = mu_{j+1}` coincides with `lambda_{j+1}` and
//!   carries one common `sigma` in `(-1, 1)`.
//! * `f` — the number of left-block (right-block) eigenvalues implied by the
//!   signs is `site - 1` (`N - site`).
//!
//! Shape problems (lengths, site range, non-finite numbers, `sigma` outside
//! `[-1, 1]`) are reported under `structure`.

use std::fmt;

use crate::spectra::ThreeSpectra;

/// Default relative tolerance for the equality `lambda_{j+1} = mu_j` of a
/// doubled pair.
pub const DEFAULT_EQ_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Structure,
    LambdaOrder,
    Interlacing,
    Multiplicity,
    SimpleInterior,
    DoubledPair,
    SideCount,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Structure => "structure",
            Rule::LambdaOrder => "a",
            Rule::Interlacing => "b",
            Rule::Multiplicity => "c",
            Rule::SimpleInterior => "d",
            Rule::DoubledPair => "e",
            Rule::SideCount => "f",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
    /// 1-based indices into `lambda` or `mu`, as named in the message.
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn rules(&self) -> Vec<Rule> {
        let mut rules: Vec<Rule> = self.violations.iter().map(|v| v.rule).collect();
        rules.sort();
        rules.dedup();
        rules
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "rule {}: {} {:?}", v.rule, v.message, v.indices)?;
        }
        Ok(())
    }
}

struct Collector(Vec<Violation>);

impl Collector {
    fn push(&mut self, rule: Rule, indices: Vec<usize>, message: String) {
        self.0.push(Violation {
            rule,
            message,
            indices,
        });
    }
}

/// Checks `data` against rules `a`–`f` with the default tolerance.
pub fn validate_three_spectra(data: &ThreeSpectra) -> ValidationReport {
    validate_three_spectra_with(data, DEFAULT_EQ_TOL)
}

/// Checks `data` with relative tolerance `eq_tol` for the equalities between
/// a doubled `mu` and its `lambda` (scaled by `max(1, |mu|)`). All strict
/// inequalities are exact.
pub fn validate_three_spectra_with(data: &ThreeSpectra, eq_tol: f64) -> ValidationReport {
    let mut out = Collector(Vec::new());
    if !check_structure(data, &mut out) {
        return ValidationReport::from_violations(out.0);
    }

    let lambda = &data.lambda;
    let mu = &data.mu;
    let n_total = data.size;
    let slack = |x: f64| eq_tol * x.abs().max(1.0);

    // (a)
    for j in 0..lambda.len().saturating_sub(1) {
        if lambda[j] >= lambda[j + 1] {
            out.push(
                Rule::LambdaOrder,
                vec![j + 1, j + 2],
                format!(
                    "lambda_{} = {} is not below lambda_{} = {}",
                    j + 1,
                    lambda[j],
                    j + 2,
                    lambda[j + 1]
                ),
            );
        }
    }

    if mu.is_empty() {
        check_side_counts(data, 0, 0, 0, &mut out);
        return ValidationReport::from_violations(out.0);
    }

    // (b)
    for j in 0..mu.len() - 1 {
        if mu[j].value > mu[j + 1].value {
            out.push(
                Rule::Interlacing,
                vec![j + 1, j + 2],
                format!("mu_{} and mu_{} are not ascending", j + 1, j + 2),
            );
        }
    }
    if !(lambda[0] < mu[0].value) {
        out.push(
            Rule::Interlacing,
            vec![1],
            format!(
                "lambda_1 = {} is not below mu_1 = {}",
                lambda[0], mu[0].value
            ),
        );
    }
    let last = mu.len() - 1;
    if !(mu[last].value < lambda[n_total - 1]) {
        out.push(
            Rule::Interlacing,
            vec![last + 1],
            format!(
                "mu_{} = {} is not below lambda_{} = {}",
                last + 1,
                mu[last].value,
                n_total,
                lambda[n_total - 1]
            ),
        );
    }
    for (j, m) in mu.iter().enumerate() {
        let v = m.value;
        if v < lambda[j] - slack(v) || v > lambda[j + 1] + slack(v) {
            out.push(
                Rule::Interlacing,
                vec![j + 1],
                format!(
                    "mu_{} = {} outside [lambda_{}, lambda_{}] = [{}, {}]",
                    j + 1,
                    v,
                    j + 1,
                    j + 2,
                    lambda[j],
                    lambda[j + 1]
                ),
            );
        }
    }

    // Runs of equal values: length 1 simple, 2 doubled, more is rule (c).
    let mut minus = 0usize;
    let mut plus = 0usize;
    let mut doubled = 0usize;
    let mut start = 0;
    while start < mu.len() {
        let mut end = start + 1;
        while end < mu.len() && mu[end].value == mu[start].value {
            end += 1;
        }
        match end - start {
            1 => {
                let j = start;
                let v = mu[j].value;
                if !(lambda[j] < v && v < lambda[j + 1]) {
                    out.push(
                        Rule::SimpleInterior,
                        vec![j + 1],
                        format!(
                            "simple mu_{} = {} must lie strictly between lambda_{} = {} and lambda_{} = {}",
                            j + 1,
                            v,
                            j + 1,
                            lambda[j],
                            j + 2,
                            lambda[j + 1]
                        ),
                    );
                }
                let s = mu[j].sigma;
                if s == -1.0 {
                    minus += 1;
                } else if s == 1.0 {
                    plus += 1;
                } else {
                    out.push(
                        Rule::SimpleInterior,
                        vec![j + 1],
                        format!("simple mu_{} has sigma = {s}, expected -1 or +1", j + 1),
                    );
                }
            }
            2 => {
                let j = start;
                doubled += 1;
                let v = mu[j].value;
                if (lambda[j + 1] - v).abs() > slack(v) {
                    out.push(
                        Rule::DoubledPair,
                        vec![j + 1, j + 2],
                        format!(
                            "doubled mu_{} = mu_{} = {} differs from lambda_{} = {}",
                            j + 1,
                            j + 2,
                            v,
                            j + 2,
                            lambda[j + 1]
                        ),
                    );
                }
                let (s0, s1) = (mu[j].sigma, mu[j + 1].sigma);
                if s0 != s1 {
                    out.push(
                        Rule::DoubledPair,
                        vec![j + 1, j + 2],
                        format!(
                            "doubled mu_{} and mu_{} carry different sigma {s0} and {s1}",
                            j + 1,
                            j + 2
                        ),
                    );
                }
                for (k, s) in [(j, s0), (j + 1, s1)] {
                    if !(s > -1.0 && s < 1.0) {
                        out.push(
                            Rule::DoubledPair,
                            vec![k + 1],
                            format!("doubled mu_{} has sigma = {s}, expected (-1, 1)", k + 1),
                        );
                    }
                }
            }
            len => out.push(
                Rule::Multiplicity,
                (start + 1..=end).collect(),
                format!(
                    "value {} occurs {len} times in mu, at most 2 allowed",
                    mu[start].value
                ),
            ),
        }
        start = end;
    }

    check_side_counts(data, minus, plus, doubled, &mut out);
    ValidationReport::from_violations(out.0)
}

fn check_structure(data: &ThreeSpectra, out: &mut Collector) -> bool {
    let before = out.0.len();
    let n = data.size;
    if n == 0 {
        out.push(Rule::Structure, vec![], "N must be at least 1".into());
        return false;
    }
    if data.lambda.len() != n {
        out.push(
            Rule::Structure,
            vec![],
            format!("expected {n} lambda values, got {}", data.lambda.len()),
        );
    }
    if data.mu.len() != n - 1 {
        out.push(
            Rule::Structure,
            vec![],
            format!("expected {} mu values, got {}", n - 1, data.mu.len()),
        );
    }
    if data.site == 0 || data.site > n {
        out.push(
            Rule::Structure,
            vec![],
            format!("site {} outside 1..={n}", data.site),
        );
    }
    for (j, x) in data.lambda.iter().enumerate() {
        if !x.is_finite() {
            out.push(
                Rule::Structure,
                vec![j + 1],
                format!("lambda_{} is not finite", j + 1),
            );
        }
    }
    for (j, m) in data.mu.iter().enumerate() {
        if !m.value.is_finite() {
            out.push(
                Rule::Structure,
                vec![j + 1],
                format!("mu_{} is not finite", j + 1),
            );
        }
        if !(m.sigma >= -1.0 && m.sigma <= 1.0) {
            out.push(
                Rule::Structure,
                vec![j + 1],
                format!("sigma_{} = {} outside [-1, 1]", j + 1, m.sigma),
            );
        }
    }
    out.0.len() == before
}

fn check_side_counts(
    data: &ThreeSpectra,
    minus: usize,
    plus: usize,
    doubled: usize,
    out: &mut Collector,
) {
    let want_minus = data.site - 1;
    let want_plus = data.size - data.site;
    if minus + doubled != want_minus {
        out.push(
            Rule::SideCount,
            vec![],
            format!(
                "left block has {} eigenvalues ({minus} simple + {doubled} shared), site {} needs {want_minus}",
                minus + doubled,
                data.site
            ),
        );
    }
    if plus + doubled != want_plus {
        out.push(
            Rule::SideCount,
            vec![],
            format!(
                "right block has {} eigenvalues ({plus} simple + {doubled} shared), site {} needs {want_plus}",
                plus + doubled,
                data.site
            ),
        );
    }
}
