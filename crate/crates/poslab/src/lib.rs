//! Certified positivity classification for structured kernel matrices.
//!
//! The library decides whether matrices of the form `[(p_i + p_j)^(p_i + p_j)]`
//! and their relatives are positive semidefinite, conditionally positive
//! definite, infinitely divisible, or totally positive. Every yes carries a
//! certificate and every no carries a witness; when the arithmetic cannot
//! decide at the configured precision, the answer is an honest
//! "undetermined" rather than a guess.

// indexed loops throughout the elimination and rotation kernels mirror the
// usual linear-algebra notation; iterator chains would obscure the math
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod kernels;
pub mod numerics;
pub mod positivity;

pub use error::{Error, Result};
