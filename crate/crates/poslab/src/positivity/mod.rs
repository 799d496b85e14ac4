//! Classification of symmetric matrices into positivity classes, with
//! certificates for `yes` answers and replayable witnesses for `no`.

pub mod checks;
pub mod compress;
pub mod heuristic;
pub mod theorem;
pub mod total;
pub mod verdict;
pub mod verify;

pub use checks::{
    check_cnd, check_cpd, check_cpd_in_basis, check_cpd_nonsingular, check_infdiv, check_pd,
    check_psd, default_power_grid, CheckConfig,
};
pub use compress::CompressionBasis;
pub use theorem::{
    certify_power_kernel, check_exp_pd, PowerCheck, TheoremOptions, TheoremReport, TheoremStatus,
};
pub use total::{
    check_hankel_stp, check_stp_bruteforce, check_stp_fekete, check_tp_bruteforce,
    DEFAULT_MINOR_CAP,
};
pub use verdict::{
    Certificate, MinorValue, Outcome, PositivityClass, ValueRepr, Verdict, Witness,
};
pub use verify::verify_witness;
