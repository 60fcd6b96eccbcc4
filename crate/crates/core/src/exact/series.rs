use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Formal power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    /// Series with every coefficient zero, truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Builds a series from the first `order + 1` values of `f`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `exp(x) - 1`, i.e. `sum_{k >= 1} x^k / k!`.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut fact = BigInt::one();
        Self::from_fn(order, |k| {
            if k == 0 {
                return Rational::zero();
            }
            fact *= BigInt::from(k);
            Rational::new(BigInt::one(), fact.clone())
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// `exp(self)` for a series with zero constant term.
    ///
    /// Uses `g' = f' g`, i.e. `n g_n = sum_{k=1}^{n} k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "series exponential needs a zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut g = Vec::with_capacity(order + 1);
        g.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                acc += fk * &g[n - k] * Rational::from_integer(BigInt::from(k));
            }
            g.push(acc / Rational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: g })
    }
}
