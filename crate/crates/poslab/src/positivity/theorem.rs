//! End-to-end certification for power kernels.
//!
//! The pipeline generates `[(p_i + p_j)^(p_i + p_j)]` for the requested
//! points, certifies infinite divisibility and definiteness, re-certifies a
//! grid of individual Hadamard powers, and runs whichever total-positivity
//! routes apply. The aggregated statuses keep the established claims
//! (divisibility and definiteness) separate from the strict-total-positivity
//! question, which the minor routes can only probe instance by instance.

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::transform::{entrywise_exp, hadamard_power};
use crate::kernels::{generate, KernelSpec};
use crate::numerics::matrix::Matrix;
use crate::numerics::rational::format_rational;

use super::checks::{
    check_cpd_nonsingular, check_infdiv, check_pd, check_psd, default_power_grid, CheckConfig,
};
use super::total::{check_hankel_stp, check_stp_bruteforce, check_tp_bruteforce, DEFAULT_MINOR_CAP};
use super::verdict::{Outcome, Verdict};

/// Positive definiteness of the entrywise exponential `[exp(m_ij)]`.
///
/// The conclusion only follows for conditionally positive definite
/// exponents, so the exponent matrix must first certify as such on nonzero
/// zero-sum vectors; anything weaker is refused rather than silently
/// reported on.
pub fn check_exp_pd(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    let pre = check_cpd_nonsingular(m, cfg)?;
    if !pre.is_yes() {
        return Err(Error::PreconditionUnverified(format!(
            "exponent matrix not certified cpd-nonsingular (outcome: {})",
            match pre.outcome {
                Outcome::CertifiedYes => "yes",
                Outcome::CertifiedNo => "no",
                Outcome::Undetermined => "undetermined",
            }
        )));
    }
    check_pd(&entrywise_exp(m), cfg)
}

/// Aggregated status over a set of verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremStatus {
    /// Every component certified `yes`.
    #[serde(rename = "certified")]
    Certified,
    /// Some component certified `no`.
    #[serde(rename = "falsified")]
    Falsified,
    /// No refutation, but at least one component stayed open.
    #[serde(rename = "undetermined")]
    Undetermined,
}

/// One sampled Hadamard power and its semidefiniteness verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerCheck {
    pub r: String,
    pub verdict: Verdict,
}

/// Everything the power-kernel pipeline certified, refuted or left open.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub points: Vec<String>,
    /// Infinite divisibility of the kernel matrix.
    pub infdiv: Verdict,
    /// Definiteness of the kernel matrix itself.
    pub pd: Verdict,
    /// Semidefiniteness of each sampled Hadamard power.
    pub powers: Vec<PowerCheck>,
    /// Exhaustive minor scan, when the dimension is within the cap.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tp_minors: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stp_minors: Option<Verdict>,
    /// Shift-pair route, when the points are equally spaced so the matrix
    /// is Hankel.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stp_hankel: Option<Verdict>,
    /// Status over divisibility, definiteness and the sampled powers.
    pub theorem_status: TheoremStatus,
    /// Status over the total-positivity probes, absent when none could run.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjecture_status: Option<TheoremStatus>,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<TheoremReport> {
        serde_json::from_str(s).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }
}

/// Options for [`certify_power_kernel`].
#[derive(Clone, Debug)]
pub struct TheoremOptions {
    /// Hadamard powers to certify individually.
    pub grid: Vec<Rational>,
    /// Dimension cap for the exhaustive minor scans.
    pub minor_cap: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            grid: default_power_grid(),
            minor_cap: DEFAULT_MINOR_CAP,
        }
    }
}

/// Runs the whole certification pipeline for the power kernel on `points`.
pub fn certify_power_kernel(
    points: &[Rational],
    cfg: &CheckConfig,
    opts: &TheoremOptions,
) -> Result<TheoremReport> {
    let spec = KernelSpec::Power {
        points: points.to_vec(),
    };
    let m = generate(&spec)?;

    let infdiv = check_infdiv(&m, cfg, &opts.grid)?;
    let pd = check_pd(&m, cfg)?;
    let mut powers = Vec::with_capacity(opts.grid.len());
    for r in &opts.grid {
        let powered = hadamard_power(&m, r, cfg.schedule)?;
        powers.push(PowerCheck {
            r: format_rational(r),
            verdict: check_psd(&powered, cfg)?,
        });
    }

    let within_cap = m.n() <= opts.minor_cap;
    let tp_minors = within_cap
        .then(|| check_tp_bruteforce(&m, cfg, opts.minor_cap))
        .transpose()?;
    let stp_minors = within_cap
        .then(|| check_stp_bruteforce(&m, cfg, opts.minor_cap))
        .transpose()?;
    let stp_hankel = m
        .is_hankel()
        .then(|| check_hankel_stp(&m, cfg))
        .transpose()?;

    let mut core: Vec<&Verdict> = vec![&infdiv, &pd];
    core.extend(powers.iter().map(|p| &p.verdict));
    let theorem_status = aggregate(&core);

    let probes: Vec<&Verdict> = [&tp_minors, &stp_minors, &stp_hankel]
        .into_iter()
        .filter_map(|v| v.as_ref())
        .collect();
    let conjecture_status = (!probes.is_empty()).then(|| aggregate(&probes));

    Ok(TheoremReport {
        points: points.iter().map(format_rational).collect(),
        infdiv,
        pd,
        powers,
        tp_minors,
        stp_minors,
        stp_hankel,
        theorem_status,
        conjecture_status,
    })
}

fn aggregate(verdicts: &[&Verdict]) -> TheoremStatus {
    if verdicts.iter().any(|v| v.is_no()) {
        TheoremStatus::Falsified
    } else if verdicts.iter().all(|v| v.is_yes()) {
        TheoremStatus::Certified
    } else {
        TheoremStatus::Undetermined
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::Scalar;
    use crate::positivity::verdict::{Certificate, PositivityClass, Witness};
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn rats(list: &[&str]) -> Vec<Rational> {
        list.iter().map(|s| rat(s)).collect()
    }

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn exponential_of_certified_kernel_is_definite() {
        // the entrywise exp of [(p_i+p_j) ln(p_i+p_j)] is the power kernel
        let log = generate(&KernelSpec::Log {
            points: rats(&["1/2", "1", "3/2"]),
        })
        .unwrap();
        let v = check_exp_pd(&log, &cfg()).unwrap();
        assert!(v.is_yes());
        assert_eq!(v.class, PositivityClass::Pd);
    }

    #[test]
    fn exponential_check_refuses_unverified_exponents() {
        let m = Matrix::from_entries(
            2,
            vec![
                Scalar::zero(),
                Scalar::one(),
                Scalar::one(),
                Scalar::zero(),
            ],
        );
        let err = check_exp_pd(&m, &cfg()).unwrap_err();
        assert!(matches!(err, Error::PreconditionUnverified(_)));
        assert!(err.to_string().contains("outcome: no"));
    }

    #[test]
    fn equally_spaced_points_certify_everything() {
        let report =
            certify_power_kernel(&rats(&["1/2", "3/2", "5/2"]), &cfg(), &TheoremOptions::default())
                .unwrap();
        assert_eq!(report.theorem_status, TheoremStatus::Certified);
        assert_eq!(report.conjecture_status, Some(TheoremStatus::Certified));
        assert!(report.infdiv.is_yes());
        assert!(report.pd.is_yes());
        assert_eq!(report.powers.len(), 5);
        assert!(report.powers.iter().all(|p| p.verdict.is_yes()));
        assert!(report.stp_hankel.is_some());
        assert!(report.tp_minors.unwrap().is_yes());
        assert!(report.stp_minors.unwrap().is_yes());
    }

    #[test]
    fn uneven_points_skip_the_pair_route() {
        let report =
            certify_power_kernel(&rats(&["1/2", "1", "2"]), &cfg(), &TheoremOptions::default())
                .unwrap();
        assert!(report.stp_hankel.is_none());
        assert_eq!(report.theorem_status, TheoremStatus::Certified);
        assert_eq!(report.conjecture_status, Some(TheoremStatus::Certified));
    }

    #[test]
    fn minor_probes_respect_the_cap() {
        let opts = TheoremOptions {
            minor_cap: 2,
            ..TheoremOptions::default()
        };
        let report = certify_power_kernel(&rats(&["1/2", "3/2", "5/2"]), &cfg(), &opts).unwrap();
        assert!(report.tp_minors.is_none());
        assert!(report.stp_minors.is_none());
        // the pair route has no dimension cap
        assert!(report.stp_hankel.is_some());
        assert_eq!(report.conjecture_status, Some(TheoremStatus::Certified));
    }

    #[test]
    fn report_survives_a_json_round_trip() {
        let report =
            certify_power_kernel(&rats(&["1/2", "3/2"]), &cfg(), &TheoremOptions::default())
                .unwrap();
        let json = report.to_json();
        let back = TheoremReport::from_json(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn invalid_points_are_rejected_up_front() {
        let err = certify_power_kernel(&rats(&["3", "1"]), &cfg(), &TheoremOptions::default())
            .unwrap_err();
        assert!(matches!(err, Error::InvalidPoints));
    }

    #[test]
    fn aggregation_separates_refutation_from_openness() {
        let yes = Verdict::yes(PositivityClass::Psd, Certificate::Vacuous, None);
        let no = Verdict::no(
            PositivityClass::Psd,
            Witness::Minor {
                rows: vec![0],
                cols: vec![0],
                value: crate::positivity::verdict::ValueRepr::Exact { exact: "-1".into() },
            },
            None,
        );
        let open = Verdict::undetermined(PositivityClass::Psd, 4096);
        assert_eq!(aggregate(&[&yes, &yes]), TheoremStatus::Certified);
        assert_eq!(aggregate(&[&yes, &no, &open]), TheoremStatus::Falsified);
        assert_eq!(aggregate(&[&yes, &open]), TheoremStatus::Undetermined);
    }
}
