//! `poslab classify`: run positivity checkers and report one row per class.

use clap::Args;
use serde::Serialize;
use serde_json::value::RawValue;
use std::path::PathBuf;
use std::time::Instant;

use crate::{emit, matrix_file, resolve_config, SpecArgs};
use poslab::kernels::{generate, KernelSpec};
use poslab::numerics::{parse_rational_list, Matrix, Rational};
use poslab::positivity::{
    check_cnd, check_cpd, check_cpd_nonsingular, check_hankel_stp, check_infdiv, check_pd,
    check_psd, check_stp_fekete, check_tp_bruteforce, default_power_grid, CheckConfig,
    Certificate, Outcome, PositivityClass, Verdict, Witness,
};

#[derive(Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Classify a matrix file instead of a family spec
    #[arg(long, conflicts_with = "family")]
    matrix: Option<PathBuf>,
    /// Comma-separated classes: psd, pd, cpd, cnd, cpd-nonsingular, infdiv, tp, stp
    #[arg(long)]
    classes: String,
    /// Hadamard exponents sampled by the infdiv check, e.g. 1/2,1,2
    #[arg(long)]
    r_grid: Option<String>,
    /// Precision cap in bits (default 4096; POSLAB_PRECISION_MAX overrides)
    #[arg(long)]
    precision_max: Option<u32>,
    /// Largest order the tp minor enumeration accepts
    #[arg(long, default_value_t = 6)]
    bruteforce_cap: usize,
    /// Report format: json or csv (csv drops certificates and witnesses)
    #[arg(long, default_value = "json")]
    format: String,
    /// Add wall-clock milliseconds per row; makes output nondeterministic
    #[arg(long)]
    timings: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<Box<RawValue>>,
    class: &'static str,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    precision: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<u64>,
}

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::CertifiedYes => "yes",
        Outcome::CertifiedNo => "no",
        Outcome::Undetermined => "undetermined",
    }
}

fn dispatch(
    class: PositivityClass,
    m: &Matrix,
    cfg: &CheckConfig,
    grid: &[Rational],
    cap: usize,
) -> poslab::error::Result<Verdict> {
    match class {
        PositivityClass::Psd => check_psd(m, cfg),
        PositivityClass::Pd => check_pd(m, cfg),
        PositivityClass::Cpd => check_cpd(m, cfg),
        PositivityClass::Cnd => check_cnd(m, cfg),
        PositivityClass::CpdNonsingular => check_cpd_nonsingular(m, cfg),
        PositivityClass::InfDiv => check_infdiv(m, cfg, grid),
        PositivityClass::TotallyPositive => check_tp_bruteforce(m, cfg, cap),
        // the contiguous-minor criterion decides strictness both ways and
        // does not need the Hankel shape, but prefer the shifted-pair test
        // when it applies: two definiteness checks instead of O(n^4) minors
        PositivityClass::StrictlyTotallyPositive => {
            if m.is_hankel() {
                check_hankel_stp(m, cfg)
            } else {
                check_stp_fekete(m, cfg)
            }
        }
    }
}

pub fn run(args: ClassifyArgs) -> Result<i32, String> {
    let cfg = resolve_config(args.precision_max)?;
    let grid = match args.r_grid.as_deref() {
        Some(raw) => parse_rational_list(raw).map_err(|e| e.to_string())?,
        None => default_power_grid(),
    };

    let classes: Vec<PositivityClass> = args
        .classes
        .split(',')
        .map(|s| {
            let s = s.trim();
            PositivityClass::parse(s).ok_or_else(|| {
                format!(
                    "unknown class '{s}' (expected psd, pd, cpd, cnd, cpd-nonsingular, infdiv, tp, stp)"
                )
            })
        })
        .collect::<Result<_, _>>()?;
    if classes.is_empty() {
        return Err("no classes requested".to_string());
    }

    let (matrix, spec): (Matrix, Option<KernelSpec>) = match (&args.matrix, args.spec.to_spec()?) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let loaded = matrix_file::load(&text)?;
            (loaded.matrix, loaded.spec)
        }
        (None, Some(spec)) => (generate(&spec).map_err(|e| e.to_string())?, Some(spec)),
        (None, None) => return Err("classify needs --family or --matrix".to_string()),
        (Some(_), Some(_)) => unreachable!("clap rejects --matrix with --family"),
    };

    let mut rows = Vec::with_capacity(classes.len());
    for class in classes {
        let started = Instant::now();
        let verdict =
            dispatch(class, &matrix, &cfg, &grid, args.bruteforce_cap).map_err(|e| e.to_string())?;
        let wall_ms = args
            .timings
            .then(|| started.elapsed().as_millis().min(u64::MAX as u128) as u64);
        rows.push(Row {
            spec: spec
                .as_ref()
                .map(|s| RawValue::from_string(s.to_json()).expect("spec json is valid")),
            class: class.name(),
            outcome: outcome_str(verdict.outcome),
            precision: verdict.precision,
            certificate: verdict.certificate,
            witness: verdict.witness,
            wall_ms,
        });
    }

    let report = match args.format.as_str() {
        "json" => serde_json::to_string(&rows).expect("rows serialize"),
        "csv" => {
            let mut text = String::from("family,class,outcome,precision\n");
            for row in &rows {
                let family = spec.as_ref().map(|s| s.family()).unwrap_or("-");
                let precision = row.precision.map(|p| p.to_string()).unwrap_or_default();
                text.push_str(&format!(
                    "{family},{},{},{precision}\n",
                    row.class, row.outcome
                ));
            }
            text.pop();
            text
        }
        other => return Err(format!("unknown format '{other}' (expected json or csv)")),
    };
    emit(args.out.as_ref(), &report)?;

    if rows.iter().any(|r| r.outcome == "no") {
        Ok(1)
    } else if rows.iter().any(|r| r.outcome == "undetermined") {
        Ok(2)
    } else {
        Ok(0)
    }
}
