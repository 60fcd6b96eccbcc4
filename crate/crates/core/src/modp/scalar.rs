use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::prime::PrimeModulus;
use crate::error::{Error, Result};

/// A residue in `[0, p)`.
///
/// Mixing residues of different moduli in an operator is a contract violation and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModScalar {
    residue: u64,
    modulus: PrimeModulus,
}

impl ModScalar {
    pub fn new(residue: u64, modulus: PrimeModulus) -> Self {
        Self {
            residue: modulus.reduce_u64(residue),
            modulus,
        }
    }

    pub fn from_i64(v: i64, modulus: PrimeModulus) -> Self {
        Self {
            residue: modulus.reduce_i64(v),
            modulus,
        }
    }

    pub fn from_bigint(v: &BigInt, modulus: PrimeModulus) -> Self {
        let r = v.mod_floor(&BigInt::from(modulus.get()));
        Self {
            residue: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::new(1, modulus)
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, e: u64) -> Self {
        Self {
            residue: self.modulus.pow(self.residue, e),
            modulus: self.modulus,
        }
    }

    /// `(-1)^e`.
    pub fn sign(e: u64, modulus: PrimeModulus) -> Self {
        Self::from_i64(if e.is_multiple_of(2) { 1 } else { -1 }, modulus)
    }

    fn same(self, other: Self) -> PrimeModulus {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in residue arithmetic"
        );
        self.modulus
    }
}

impl Add for ModScalar {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let m = self.same(rhs);
        Self {
            residue: m.add(self.residue, rhs.residue),
            modulus: m,
        }
    }
}

impl Sub for ModScalar {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let m = self.same(rhs);
        Self {
            residue: m.sub(self.residue, rhs.residue),
            modulus: m,
        }
    }
}

impl Mul for ModScalar {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let m = self.same(rhs);
        Self {
            residue: m.mul(self.residue, rhs.residue),
            modulus: m,
        }
    }
}

impl Neg for ModScalar {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            residue: self.modulus.sub(0, self.residue),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Multiplicative inverse by Fermat's little theorem, `s^(p-2)`.
pub fn mod_inverse(s: ModScalar) -> Result<ModScalar> {
    if s.is_zero() {
        return Err(Error::ZeroInverse(s.modulus.get()));
    }
    Ok(s.pow(s.modulus.get() - 2))
}

/// `n = p^valuation * u` with `p` not dividing `u`; `unit` is `u mod p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuedUnit {
    pub valuation: u64,
    pub unit: ModScalar,
}

pub fn valued_unit_of(n: &BigInt, p: PrimeModulus) -> Result<ValuedUnit> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let pb = BigInt::from(p.get());
    let mut u = n.abs();
    let mut valuation = 0;
    loop {
        let (q, r) = u.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        u = q;
        valuation += 1;
    }
    if n.is_negative() {
        u = -u;
    }
    Ok(ValuedUnit {
        valuation,
        unit: ModScalar::from_bigint(&u, p),
    })
}
