use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with arbitrary-precision integer coefficients, index = degree.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has no
/// coefficients and two equal polynomials have identical vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `self += s * other`, in place.
    pub fn add_scaled(&mut self, other: &Self, s: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src * s;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

/// Renders sparse ascending terms, e.g. `x + 3*x^2 + x^3`.
fn render_terms<'a, I>(terms: I, f: &mut fmt::Formatter<'_>) -> fmt::Result
where
    I: IntoIterator<Item = (usize, &'a BigInt)>,
{
    let mut first = true;
    for (d, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        match (d, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => f.write_str("x")?,
            (1, false) => write!(f, "{mag}*x")?,
            (_, true) => write!(f, "x^{d}")?,
            (_, false) => write!(f, "{mag}*x^{d}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(self.coeffs.iter().enumerate(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 3, 1]).to_string(), "x + 3*x^2 + x^3");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-2, 0, -1]).to_string(), "-2 - x^2");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[0, 1, 1]);
        assert!((&a - &a).is_zero());
        assert_eq!(a.shift(2), p(&[0, 0, 0, 1, 1]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(12));
        assert_eq!(&a + &p(&[1, 0, -1]), p(&[1, 1]));
        assert_eq!(IntPolynomial::monomial(3), p(&[0, 0, 0, 1]));
    }
}
