//! Kernel families: generation, transforms, reductions, and diagnostics.

pub mod generate;
pub mod integral;
pub mod reduction;
pub mod sample;
pub mod spec;
pub mod transform;

pub use generate::generate;
pub use integral::{verify_log_integral, IntegralCheck};
pub use reduction::{rational_reduction, Reduction};
pub use sample::sample_points;
pub use spec::{validate_points, KernelSpec};
pub use transform::{entrywise_exp, entrywise_log, hadamard_power, hankel_shift};
