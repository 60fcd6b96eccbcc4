//! One verifier per congruence family. Each assembles both sides from
//! independent primitives and reports pass/fail with witnesses.
//!
//! Rational terms such as `B_k / (-n)^k` are evaluated in `F_p` through the
//! inverse of `-n`, which exists exactly when `p` does not divide `n`; cases with
//! `p | n` are reported as skipped. Polynomial congruences with p-integral
//! coefficients are checked as equalities in `F_p[x]`.

mod case;
mod report;
mod sweep;
mod tables;
mod verify;

pub use case::{CongruenceCase, Identity};
pub use report::{Status, VerificationReport};
pub use sweep::run_sweep;
pub use tables::SharedTables;

use crate::error::Result;
use crate::limits::Limits;
use crate::modp::{PrimeModulus, PrimePower};

/// Checks a single case, building only the tables it needs.
pub fn verify(case: &CongruenceCase, limits: &Limits) -> Result<VerificationReport> {
    case.check_limits(limits)?;
    SharedTables::for_cases([case], limits, None)?.verify(case)
}

pub fn verify_sun_zagier(p: PrimeModulus, n: u64, limits: &Limits) -> Result<VerificationReport> {
    verify(&CongruenceCase::SunZagier { p, n }, limits)
}

pub fn verify_prime_power_sun_zagier(
    q: PrimePower,
    n: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::PrimePowerSunZagier { q, n }, limits)
}

pub fn verify_polynomial_sun_zagier(
    q: PrimePower,
    n: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::PolynomialSunZagier { q, n }, limits)
}

pub fn verify_touchard(
    p: PrimeModulus,
    m: u32,
    n: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::Touchard { p, m, n }, limits)
}

pub fn verify_gertsch_robert(q: PrimePower, n: u64, limits: &Limits) -> Result<VerificationReport> {
    verify(&CongruenceCase::GertschRobert { q, n }, limits)
}

pub fn verify_binomial_ratio(
    q: PrimePower,
    j: u64,
    k: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::BinomialRatio { q, j, k }, limits)
}

pub fn verify_bell_polynomial_at_prime_power(
    q: PrimePower,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::BellPolynomialAtPrimePower { q }, limits)
}

pub fn verify_bell_polynomial_recurrence(
    n_max: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::BellPolynomialRecurrence { n_max }, limits)
}

pub fn verify_binomial_alternation(
    q: PrimePower,
    j: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    verify(&CongruenceCase::BinomialAlternation { q, j }, limits)
}
