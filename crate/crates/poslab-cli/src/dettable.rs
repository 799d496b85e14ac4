//! `poslab dettable`: exact determinants of the integer-point kernel.
//!
//! No closed form for these determinants is known; the table is the
//! toolkit's empirical answer, computed by fraction-free elimination.

use clap::Args;
use serde::Serialize;
use std::path::PathBuf;

use crate::emit;
use poslab::kernels::{generate, KernelSpec};
use poslab::numerics::{det_exact, format_rational};

#[derive(Args)]
pub struct DettableArgs {
    /// Largest order to tabulate (from 1)
    #[arg(long)]
    n_max: usize,
    /// Report format: json or csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct DetRow {
    n: usize,
    det: String,
}

pub fn run(args: DettableArgs) -> Result<i32, String> {
    if args.n_max == 0 {
        return Err("--n-max must be at least 1".to_string());
    }
    let mut rows = Vec::with_capacity(args.n_max);
    for n in 1..=args.n_max {
        let m = generate(&KernelSpec::MatrixA { n }).map_err(|e| e.to_string())?;
        let exact = m.as_exact().expect("integer-point kernel is exact");
        rows.push(DetRow {
            n,
            det: format_rational(&det_exact(&exact)),
        });
    }
    let report = match args.format.as_str() {
        "json" => serde_json::to_string(&rows).expect("rows serialize"),
        "csv" => {
            let mut text = String::from("n,det\n");
            for row in &rows {
                text.push_str(&format!("{},{}\n", row.n, row.det));
            }
            text.pop();
            text
        }
        other => return Err(format!("unknown format '{other}' (expected json or csv)")),
    };
    emit(args.out.as_ref(), &report)?;
    Ok(0)
}
