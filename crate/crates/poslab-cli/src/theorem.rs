//! `poslab verify-theorem`: run the full certification pipeline.
//!
//! Each instance gets the whole battery: infinite divisibility, positive
//! definiteness, the sampled Hadamard-power grid, and the total-positivity
//! probes when the order allows them. Instances are either one explicit
//! point set or a batch of seeded random ones.

use clap::Args;
use serde::Serialize;
use std::path::PathBuf;

use crate::{emit, resolve_config};
use poslab::kernels::sample_points;
use poslab::numerics::{parse_rational_list, Rational};
use poslab::positivity::{
    certify_power_kernel, default_power_grid, TheoremOptions, TheoremReport, TheoremStatus,
};

#[derive(Args)]
pub struct TheoremArgs {
    /// Comma-separated strictly increasing positive points
    #[arg(long, conflicts_with = "random")]
    points: Option<String>,
    /// Draw random point sets instead of using --points
    #[arg(long)]
    random: bool,
    /// Number of random instances
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// Points per random instance
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Seed for the random instance stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Hadamard exponents to sample, e.g. 1/2,1,2
    #[arg(long)]
    r_grid: Option<String>,
    /// Precision cap in bits (default 4096; POSLAB_PRECISION_MAX overrides)
    #[arg(long)]
    precision_max: Option<u32>,
    /// Largest order the total-positivity probes enumerate minors for
    #[arg(long, default_value_t = 6)]
    bruteforce_cap: usize,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Summary {
    run: usize,
    certified: usize,
    undetermined: usize,
    falsified: usize,
}

#[derive(Serialize)]
struct TheoremRun {
    instances: Vec<TheoremReport>,
    summary: Summary,
}

pub fn run(args: TheoremArgs) -> Result<i32, String> {
    let cfg = resolve_config(args.precision_max)?;
    let grid = match args.r_grid.as_deref() {
        Some(raw) => parse_rational_list(raw).map_err(|e| e.to_string())?,
        None => default_power_grid(),
    };
    let opts = TheoremOptions {
        grid,
        minor_cap: args.bruteforce_cap,
    };

    let instances: Vec<Vec<Rational>> = if args.random {
        if args.count == 0 {
            return Err("--count must be at least 1".to_string());
        }
        // instance i draws from seed + i, so prefixes of a longer run
        // coincide with shorter runs at the same seed
        (0..args.count)
            .map(|i| sample_points(args.seed.wrapping_add(i as u64), args.n))
            .collect()
    } else {
        let raw = args
            .points
            .as_deref()
            .ok_or("verify-theorem needs --points or --random")?;
        vec![parse_rational_list(raw).map_err(|e| e.to_string())?]
    };

    let mut reports = Vec::with_capacity(instances.len());
    for points in &instances {
        reports.push(certify_power_kernel(points, &cfg, &opts).map_err(|e| e.to_string())?);
    }

    let count_status = |s: TheoremStatus| {
        reports
            .iter()
            .filter(|r| r.theorem_status == s)
            .count()
    };
    let summary = Summary {
        run: reports.len(),
        certified: count_status(TheoremStatus::Certified),
        undetermined: count_status(TheoremStatus::Undetermined),
        falsified: count_status(TheoremStatus::Falsified),
    };
    eprintln!(
        "run {}, certified {}, undetermined {}, falsified {}",
        summary.run, summary.certified, summary.undetermined, summary.falsified
    );
    let code = if summary.falsified > 0 {
        1
    } else if summary.undetermined > 0 {
        2
    } else {
        0
    };

    let report = TheoremRun {
        instances: reports,
        summary,
    };
    emit(
        args.out.as_ref(),
        &serde_json::to_string(&report).expect("report serializes"),
    )?;
    Ok(code)
}
