//! `jacobi-spectra`: forward and inverse three-spectra maps on JSON files.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jacobi_spectra::harness::{run_roundtrip, RoundtripConfig, Sites};
use jacobi_spectra::{
    eigenvalues, extract_three_spectra, reconstruct, spectral_measure, validate_three_spectra,
    Anchor, Error, ForwardOptions, JacobiMatrix, ThreeSpectra, DEFAULT_EIG_TOL, DEFAULT_MERGE_TOL,
};
use serde::Serialize;

const EXIT_TOLERANCE: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_SITE: u8 = 3;
const EXIT_INVALID: u8 = 4;
const EXIT_RECONSTRUCTION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "jacobi-spectra",
    version,
    about = "Jacobi matrices from three spectra and back"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the three spectra and sign data of a matrix file.
    Forward {
        /// Matrix file, `-` for stdin.
        matrix: PathBuf,
        /// 1-based index of the deleted row and column.
        #[arg(long)]
        site: usize,
        #[arg(long, default_value_t = DEFAULT_MERGE_TOL)]
        merge_tol: f64,
        #[arg(long, default_value_t = DEFAULT_EIG_TOL)]
        eig_tol: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reconstruct the matrix from a spectra file.
    Inverse {
        /// Spectra file, `-` for stdin.
        spectra: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a spectra file for admissibility.
    Validate { spectra: PathBuf },
    /// Eigenvalues of a matrix file, or its spectral measure with `--anchor`.
    Eig {
        matrix: PathBuf,
        #[arg(long, value_enum)]
        anchor: Option<AnchorArg>,
        #[arg(long, default_value_t = DEFAULT_EIG_TOL)]
        eig_tol: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded forward-then-inverse round trips on random matrices.
    Roundtrip {
        #[arg(long, default_value_t = 8)]
        size: usize,
        /// A site index or `all`.
        #[arg(long, default_value = "all")]
        site: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Off-diagonal range `lo,hi`.
        #[arg(long, default_value = "0.5,2")]
        a_range: String,
        /// Diagonal range `lo,hi`.
        #[arg(long, default_value = "-1,1")]
        b_range: String,
        /// Bound on `max |H' - H| / (1 + ||H||_inf)`.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MERGE_TOL)]
        merge_tol: f64,
        #[arg(long, default_value_t = DEFAULT_EIG_TOL)]
        eig_tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AnchorArg {
    First,
    Last,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidMatrix(_) => EXIT_MALFORMED,
            Error::SiteOutOfRange { .. } => EXIT_SITE,
            Error::Invalid(_) => EXIT_INVALID,
            _ => EXIT_RECONSTRUCTION,
        };
        fail(code, e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("finite values serialize");
    text.push('\n');
    let res = match output {
        Some(path) if path != Path::new("-") => fs::write(path, text),
        _ => io::stdout().write_all(text.as_bytes()),
    };
    res.map_err(|e| fail(EXIT_MALFORMED, format!("write failed: {e}")))
}

fn parse_range(s: &str) -> Result<Range<f64>, Failure> {
    let bad = || {
        fail(
            EXIT_MALFORMED,
            format!("range `{s}` must be `lo,hi` with lo < hi"),
        )
    };
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(bad());
    }
    Ok(lo..hi)
}

#[derive(Serialize)]
struct Eigenvalues {
    eigenvalues: Vec<f64>,
}

#[derive(Serialize)]
struct Measure<'a> {
    nodes: &'a [f64],
    weights: &'a [f64],
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Forward {
            matrix,
            site,
            merge_tol,
            eig_tol,
            output,
        } => {
            let h: JacobiMatrix = read_json(&matrix)?;
            let opts = ForwardOptions { merge_tol, eig_tol };
            let data = extract_three_spectra(&h, site, &opts)?;
            let report = validate_three_spectra(&data);
            if !report.ok {
                eprintln!("warning: spectra not resolvable in double precision:\n{report}");
            }
            write_json(&data, output.as_deref())
        }
        Command::Inverse { spectra, output } => {
            let data: ThreeSpectra = read_json(&spectra)?;
            let report = validate_three_spectra(&data);
            if !report.ok {
                return Err(fail(EXIT_INVALID, format!("validation failed:\n{report}")));
            }
            let h = reconstruct(&data)?;
            write_json(&h, output.as_deref())
        }
        Command::Validate { spectra } => {
            let data: ThreeSpectra = read_json(&spectra)?;
            let report = validate_three_spectra(&data);
            print!("{report}");
            if report.ok {
                Ok(())
            } else {
                Err(fail(EXIT_INVALID, "validation failed"))
            }
        }
        Command::Eig {
            matrix,
            anchor,
            eig_tol,
            output,
        } => {
            let h: JacobiMatrix = read_json(&matrix)?;
            match anchor {
                None => write_json(
                    &Eigenvalues {
                        eigenvalues: eigenvalues(&h, eig_tol),
                    },
                    output.as_deref(),
                ),
                Some(a) => {
                    let anchor = match a {
                        AnchorArg::First => Anchor::First,
                        AnchorArg::Last => Anchor::Last,
                    };
                    let m = spectral_measure(&h, anchor, eig_tol)?;
                    write_json(
                        &Measure {
                            nodes: m.nodes(),
                            weights: m.weights(),
                        },
                        output.as_deref(),
                    )
                }
            }
        }
        Command::Roundtrip {
            size,
            site,
            trials,
            seed,
            a_range,
            b_range,
            tol,
            merge_tol,
            eig_tol,
        } => {
            if size == 0 || trials == 0 {
                return Err(fail(EXIT_MALFORMED, "size and trials must be at least 1"));
            }
            let sites = if site == "all" {
                Sites::All
            } else {
                let n: usize = site.parse().map_err(|_| {
                    fail(
                        EXIT_MALFORMED,
                        format!("site `{site}` is not an index or `all`"),
                    )
                })?;
                if n == 0 || n > size {
                    return Err(fail(EXIT_SITE, format!("site {n} out of range 1..={size}")));
                }
                Sites::One(n)
            };
            let a_range = parse_range(&a_range)?;
            if a_range.start <= 0.0 {
                return Err(fail(EXIT_MALFORMED, "a-range must be positive"));
            }
            let cfg = RoundtripConfig {
                size,
                sites,
                trials,
                seed,
                a_range,
                b_range: parse_range(&b_range)?,
                tol,
                forward: ForwardOptions { merge_tol, eig_tol },
            };
            let report = run_roundtrip(&cfg)?;
            let mut out = io::stdout().lock();
            for t in &report.trials {
                let err = t.error.map_or("failed".to_string(), |e| format!("{e:.3e}"));
                let _ = writeln!(out, "trial {}: error {err}", t.trial);
            }
            let fmt = |x: Option<f64>| x.map_or("n/a".to_string(), |e| format!("{e:.3e}"));
            let _ = writeln!(
                out,
                "summary: trials {} max {} median {} tol {:e}",
                report.trials.len(),
                fmt(report.max_error()),
                fmt(report.median_error()),
                tol
            );
            let failures: Vec<_> = report.failures().collect();
            if failures.is_empty() {
                return Ok(());
            }
            for f in &failures {
                eprintln!(
                    "FAIL seed {seed} trial {}: {}",
                    f.trial,
                    f.diagnosis.as_deref().unwrap_or("")
                );
            }
            Err(fail(
                EXIT_TOLERANCE,
                format!(
                    "{} of {} trials exceed tolerance",
                    failures.len(),
                    report.trials.len()
                ),
            ))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
