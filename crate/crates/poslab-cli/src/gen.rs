//! `poslab gen`: write a matrix file for a kernel family.

use clap::Args;
use std::path::PathBuf;

use crate::{emit, matrix_file, SpecArgs};
use poslab::kernels::generate;

/// Default precision for enclosure entries in generated files. High enough
/// that downstream sign decisions on desk-scale matrices usually succeed,
/// small enough that files stay readable.
const DEFAULT_FILE_PRECISION: u32 = 128;

#[derive(Args)]
pub struct GenArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Bits of precision for enclosure entries (irrational matrices only)
    #[arg(long)]
    precision_max: Option<u32>,
    /// Output format; matrix files are always json
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: GenArgs) -> Result<i32, String> {
    if args.format != "json" {
        return Err("matrix files are json only".to_string());
    }
    let spec = args
        .spec
        .to_spec()?
        .ok_or("gen needs --family".to_string())?;
    let prec = match args.precision_max {
        Some(0) => return Err("precision must be at least 1".to_string()),
        Some(p) => p.max(2),
        None => DEFAULT_FILE_PRECISION,
    };
    let m = generate(&spec).map_err(|e| e.to_string())?;
    emit(args.out.as_ref(), &matrix_file::render(&spec, &m, prec))?;
    Ok(0)
}
