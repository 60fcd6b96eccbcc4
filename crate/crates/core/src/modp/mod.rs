//! Prime-field arithmetic: certified prime moduli, residues, dense polynomials
//! over `F_p`, streamed Stirling/Bell tables mod `p`, and p-adic valuation.

pub mod cache;
mod poly;
mod prime;
mod scalar;
mod tables;

pub use cache::StirlingCache;
pub use poly::{poly_add, poly_equal, poly_mul_by_xpow, poly_scale, poly_sub, ModPolynomial};
pub use prime::{is_prime, primes_in, PrimeModulus, PrimePower};
pub use scalar::{mod_inverse, valued_unit_of, ModScalar, ValuedUnit};
pub use tables::{
    bell_numbers_modp, bell_polynomials_modp, binomial_lucas, binomial_modp, stirling2_table_modp,
    Stirling2RowsModp,
};
