//! Exact arbitrary-precision sequences: Bell numbers and polynomials, Stirling
//! numbers of the second kind, derangements, generalized binomials, and the
//! independent oracles (EGF expansion, explicit Stirling sum) used to cross-check
//! them.

mod binomial;
mod egf;
mod poly;
mod root_ratio;
mod sequences;
mod series;

pub(crate) use binomial::next_pascal_row;
pub use binomial::{binomial, PascalTriangle};
pub use egf::egf_bell_oracle;
pub use poly::IntPolynomial;
pub use root_ratio::{root_ratio_monotonicity, RootRatioStep};
pub use sequences::{
    bell_numbers, bell_numbers_by_recurrence, bell_polynomial, bell_polynomial_via_recurrence,
    bell_polynomials, derangements, factorial, stirling2_explicit, stirling2_table, Stirling2Rows,
};
pub use series::{Rational, RationalSeries};

/// `BigInt` re-exported so downstream crates need not depend on `num-bigint`.
pub use num_bigint::BigInt;
