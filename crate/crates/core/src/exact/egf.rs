use num_bigint::BigInt;
use num_traits::One;

use super::series::{Rational, RationalSeries};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Bell numbers read off the exponential generating function `exp(exp(x) - 1)`.
///
/// Each `n! * [x^n]` must be an integer; a fractional value is reported as
/// [`Error::InexactArithmetic`].
pub fn egf_bell_oracle(n_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    limits.check_bell_index(n_max as u64)?;
    let series = RationalSeries::exp_minus_one(n_max).exp()?;
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(n_max + 1);
    for (n, c) in series.coeffs().iter().enumerate() {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        let v = c * Rational::from_integer(fact.clone());
        if !v.is_integer() {
            return Err(Error::InexactArithmetic(format!(
                "n! [x^n] exp(exp(x)-1) is fractional at n={n}"
            )));
        }
        out.push(v.to_integer());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let v = egf_bell_oracle(8, &Limits::default()).unwrap();
        let expected: Vec<BigInt> = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(v, expected);
        assert_eq!(
            egf_bell_oracle(0, &Limits::default()).unwrap(),
            vec![BigInt::one()]
        );
    }
}
