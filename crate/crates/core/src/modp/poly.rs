use std::fmt;

use super::prime::PrimeModulus;
use super::scalar::ModScalar;
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, index = degree, trailing zeros trimmed.
///
/// Coefficients are stored as raw residues; [`ModPolynomial::coeff`] hands out
/// [`ModScalar`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    modulus: PrimeModulus,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    pub fn zero(modulus: PrimeModulus) -> Self {
        Self {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::monomial(modulus, 0, ModScalar::one(modulus))
    }

    /// `c * x^d`.
    pub fn monomial(modulus: PrimeModulus, d: usize, c: ModScalar) -> Self {
        assert_eq!(c.modulus(), modulus, "mixed moduli in polynomial");
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c.residue();
        Self::from_residues(modulus, coeffs)
    }

    /// Reduces every value mod `p` and trims.
    pub fn from_residues(modulus: PrimeModulus, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c = modulus.reduce_u64(*c);
        }
        let mut out = Self { modulus, coeffs };
        out.trim();
        out
    }

    pub fn from_i64s(modulus: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_residues(
            modulus,
            coeffs.iter().map(|&c| modulus.reduce_i64(c)).collect(),
        )
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> ModScalar {
        ModScalar::new(self.coeffs.get(d).copied().unwrap_or(0), self.modulus)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: ModScalar) -> ModScalar {
        assert_eq!(x.modulus(), self.modulus, "mixed moduli in polynomial");
        let m = self.modulus;
        let r = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| m.add(m.mul(acc, x.residue()), c));
        ModScalar::new(r, m)
    }

    /// `self += s * x^shift * other`, in place.
    pub fn add_scaled_shifted(
        &mut self,
        other: &ModPolynomial,
        s: ModScalar,
        shift: usize,
    ) -> Result<()> {
        self.check(other.modulus)?;
        self.check(s.modulus())?;
        if s.is_zero() || other.is_zero() {
            return Ok(());
        }
        let m = self.modulus;
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        let sr = s.residue();
        for (dst, &c) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *dst = m.add(*dst, m.mul(c, sr));
        }
        self.trim();
        Ok(())
    }

    fn check(&self, other: PrimeModulus) -> Result<()> {
        if self.modulus != other {
            return Err(Error::ModulusMismatch(self.modulus.get(), other.get()));
        }
        Ok(())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

pub fn poly_add(lhs: &ModPolynomial, rhs: &ModPolynomial) -> Result<ModPolynomial> {
    let mut out = lhs.clone();
    out.add_scaled_shifted(rhs, ModScalar::one(lhs.modulus), 0)?;
    Ok(out)
}

pub fn poly_sub(lhs: &ModPolynomial, rhs: &ModPolynomial) -> Result<ModPolynomial> {
    let mut out = lhs.clone();
    out.add_scaled_shifted(rhs, -ModScalar::one(lhs.modulus), 0)?;
    Ok(out)
}

pub fn poly_scale(poly: &ModPolynomial, s: ModScalar) -> Result<ModPolynomial> {
    let mut out = ModPolynomial::zero(poly.modulus);
    out.add_scaled_shifted(poly, s, 0)?;
    Ok(out)
}

/// `poly * x^k`.
pub fn poly_mul_by_xpow(poly: &ModPolynomial, k: usize) -> ModPolynomial {
    if poly.is_zero() {
        return poly.clone();
    }
    let mut coeffs = vec![0; k];
    coeffs.extend_from_slice(&poly.coeffs);
    ModPolynomial {
        modulus: poly.modulus,
        coeffs,
    }
}

pub fn poly_equal(lhs: &ModPolynomial, rhs: &ModPolynomial) -> Result<bool> {
    lhs.check(rhs.modulus)?;
    Ok(lhs.coeffs == rhs.coeffs)
}

impl fmt::Display for ModPolynomial {
    /// Sparse ascending terms with least nonnegative residues, e.g. `x + 2*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{d}")?,
                _ => write!(f, "{c}*x^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
