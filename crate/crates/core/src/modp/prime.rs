use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A certified prime `p` with `2 <= p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 63).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces a signed machine integer into `[0, p)`.
    pub fn reduce_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce_u64(self, v: u64) -> u64 {
        v % self.0
    }

    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub(crate) fn pow(self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `p^a` with `a >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    modulus: PrimeModulus,
    a: u32,
    value: u64,
}

impl PrimePower {
    pub fn new(modulus: PrimeModulus, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidArgument(
                "prime-power exponent must be >= 1".into(),
            ));
        }
        let value = modulus
            .get()
            .checked_pow(a)
            .ok_or_else(|| Error::InvalidArgument(format!("{modulus}^{a} overflows u64")))?;
        Ok(Self { modulus, a, value })
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn p(self) -> u64 {
        self.modulus.get()
    }

    pub fn exponent(self) -> u32 {
        self.a
    }

    pub fn value(self) -> u64 {
        self.value
    }

    /// `p^1, p^2, ..., p^a`.
    pub fn powers(self) -> impl Iterator<Item = u64> {
        let p = self.p();
        (1..=self.a).map(move |r| p.pow(r))
    }
}

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below `2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n={n}");
        }
    }

    #[test]
    fn large_values() {
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(PrimeModulus::new(4).is_err());
        assert!(matches!(
            PrimeModulus::new(1),
            Err(Error::ModulusOutOfRange(1))
        ));
        assert!(matches!(
            PrimeModulus::new(u64::MAX),
            Err(Error::ModulusOutOfRange(_))
        ));
    }

    #[test]
    fn prime_power_value() {
        let q = PrimePower::new(PrimeModulus::new(3).unwrap(), 2).unwrap();
        assert_eq!(q.value(), 9);
        assert_eq!(q.powers().collect::<Vec<_>>(), vec![3, 9]);
        assert!(PrimePower::new(PrimeModulus::new(3).unwrap(), 0).is_err());
        assert!(PrimePower::new(PrimeModulus::new(3).unwrap(), 60).is_err());
    }

    #[test]
    fn serde_rejects_composites() {
        let p: PrimeModulus = serde_json::from_str("7").unwrap();
        assert_eq!(p.get(), 7);
        assert!(serde_json::from_str::<PrimeModulus>("9").is_err());
    }
}
