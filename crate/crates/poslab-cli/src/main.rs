//! Command-line front end for the positivity toolkit.
//!
//! Four subcommands: `gen` writes matrix files, `classify` runs checkers
//! and reports verdicts, `dettable` tabulates exact determinants of the
//! integer-point kernel, and `verify-theorem` runs the full certification
//! pipeline on given or seeded random point sets.
//!
//! Exit codes are uniform across subcommands: 0 when everything asked for
//! is certified yes, 1 when something is certified no, 2 when something is
//! undetermined and nothing is refuted, 3 on usage or input errors. All
//! report output is deterministic byte for byte unless `--timings` is
//! given.

mod classify;
mod dettable;
mod gen;
mod matrix_file;
mod theorem;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

use poslab::kernels::KernelSpec;
use poslab::numerics::{parse_rational, parse_rational_list, PrecisionSchedule, Rational};
use poslab::positivity::CheckConfig;

#[derive(Parser)]
#[command(
    name = "poslab",
    version,
    about = "Certified positivity classification for structured kernel matrices"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a matrix file for a kernel family
    Gen(gen::GenArgs),
    /// Run positivity checkers and report verdicts
    Classify(classify::ClassifyArgs),
    /// Tabulate exact determinants of the integer-point kernel
    Dettable(dettable::DettableArgs),
    /// Certify the power kernel on given or seeded random point sets
    VerifyTheorem(theorem::TheoremArgs),
}

/// Kernel family selection shared by `gen` and `classify`.
#[derive(Args, Clone)]
pub struct SpecArgs {
    /// Family: power, matrix-a, log, cauchy, sum, ones, hilbert, min, pascal
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated rational points, e.g. 1/2,3/2 (point families)
    #[arg(long)]
    points: Option<String>,
    /// Matrix order (size families)
    #[arg(long)]
    n: Option<usize>,
    /// Shift parameter of the cauchy family, default 0
    #[arg(long)]
    lambda: Option<String>,
}

impl SpecArgs {
    fn points(&self) -> Result<Vec<Rational>, String> {
        let raw = self
            .points
            .as_deref()
            .ok_or("this family needs --points")?;
        parse_rational_list(raw).map_err(|e| e.to_string())
    }

    fn order(&self) -> Result<usize, String> {
        self.n.ok_or_else(|| "this family needs --n".to_string())
    }

    /// Builds and validates the spec; `None` when no family was given.
    pub fn to_spec(&self) -> Result<Option<KernelSpec>, String> {
        let family = match self.family.as_deref() {
            Some(f) => f,
            None => return Ok(None),
        };
        let spec = match family {
            "power" => KernelSpec::Power {
                points: self.points()?,
            },
            "matrix-a" => KernelSpec::MatrixA { n: self.order()? },
            "log" => KernelSpec::Log {
                points: self.points()?,
            },
            "cauchy" => KernelSpec::Cauchy {
                points: self.points()?,
                lambda: match self.lambda.as_deref() {
                    Some(l) => parse_rational(l).map_err(|e| e.to_string())?,
                    None => Rational::new(),
                },
            },
            "sum" => KernelSpec::Sum {
                points: self.points()?,
            },
            "ones" => KernelSpec::Ones { n: self.order()? },
            "hilbert" => KernelSpec::Hilbert { n: self.order()? },
            "min" => KernelSpec::Min { n: self.order()? },
            "pascal" => KernelSpec::Pascal { n: self.order()? },
            other => {
                return Err(format!(
                    "unknown family '{other}' (expected power, matrix-a, log, cauchy, sum, ones, hilbert, min, pascal)"
                ))
            }
        };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(Some(spec))
    }
}

/// Resolves the precision cap: flag beats the POSLAB_PRECISION_MAX
/// environment variable, which beats the built-in default.
pub fn resolve_config(flag: Option<u32>) -> Result<CheckConfig, String> {
    let cap = match flag {
        Some(v) => Some(v),
        None => match std::env::var("POSLAB_PRECISION_MAX") {
            Ok(s) => Some(
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| "POSLAB_PRECISION_MAX must be a positive integer".to_string())?,
            ),
            Err(_) => None,
        },
    };
    if cap == Some(0) {
        return Err("precision cap must be at least 1".to_string());
    }
    Ok(CheckConfig {
        schedule: cap.map(PrecisionSchedule::with_cap).unwrap_or_default(),
    })
}

/// Writes a report to the chosen sink. Reports always end in a newline so
/// files and pipes compose.
pub fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            let mut text = content.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let write = writeln!(stdout, "{content}").and_then(|_| stdout.flush());
            write.map_err(|e| format!("cannot write report: {e}"))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not errors; everything else is usage
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(3);
        }
    };
    let result = match cli.cmd {
        Cmd::Gen(args) => gen::run(args),
        Cmd::Classify(args) => classify::run(args),
        Cmd::Dettable(args) => dettable::run(args),
        Cmd::VerifyTheorem(args) => theorem::run(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(3);
        }
    }
}
