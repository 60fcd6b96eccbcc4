//! Exact Bell numbers, Bell polynomials, Stirling numbers of the second kind and
//! derangement numbers, together with mechanical verifiers for the congruences
//! relating them modulo a prime.
//!
//! - [`exact`]: arbitrary-precision sequences and independent oracles.
//! - [`modp`]: prime-field scalars and polynomials, streamed tables mod `p`.
//! - [`lab`]: one verifier per congruence family and the parallel sweep runner.
//! - [`harness`]: sweep configuration and JSON/CSV/text reports.

pub mod error;
pub mod exact;
pub mod harness;
pub mod lab;
mod limits;
pub mod modp;

pub use error::{Error, Result};
pub use limits::Limits;
