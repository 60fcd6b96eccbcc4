use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp::{PrimeModulus, PrimePower};

/// The congruence families that can be checked.
///
/// Wire names (used on the command line and in reports) are the `serde` names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `sum_{k=1}^{p-1} B_k / (-n)^k == (-1)^(n-1) D_{n-1} (mod p)`.
    #[serde(rename = "sun_zagier")]
    SunZagier,
    /// Sum up to `p^a - 1`, right side multiplied by `a`.
    #[serde(rename = "thm1_1")]
    PrimePowerSunZagier,
    /// The Bell-polynomial form of the prime-power congruence, in `F_p[x]`.
    #[serde(rename = "thm1_2")]
    PolynomialSunZagier,
    /// `B_{p^m + n} == m B_n + B_{n+1} (mod p)`.
    #[serde(rename = "touchard")]
    Touchard,
    /// `B_{p^a + n}(x) == B_{n+1}(x) + B_n(x) sum_{r=1}^a x^{p^r}`.
    #[serde(rename = "gertsch_robert")]
    GertschRobert,
    /// `binom(p^a-1-k, j) / binom(-1-k, j) == 1` as p-adic numbers.
    #[serde(rename = "lemma2_1_i")]
    BinomialRatio,
    /// `B_{p^a}(x) == sum_{r=0}^a x^{p^r}`.
    #[serde(rename = "lemma2_1_ii")]
    BellPolynomialAtPrimePower,
    /// `B_{m+1}(x) = x sum_k binom(m,k) B_k(x)` over the integers.
    #[serde(rename = "recurrence2_1")]
    BellPolynomialRecurrence,
    /// `binom(p^a - 1, j) == (-1)^j (mod p)`.
    #[serde(rename = "binom_corollary")]
    BinomialAlternation,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::SunZagier,
        Identity::PrimePowerSunZagier,
        Identity::PolynomialSunZagier,
        Identity::Touchard,
        Identity::GertschRobert,
        Identity::BinomialRatio,
        Identity::BellPolynomialAtPrimePower,
        Identity::BellPolynomialRecurrence,
        Identity::BinomialAlternation,
    ];

    pub fn wire_name(self) -> &'static str {
        match self {
            Identity::SunZagier => "sun_zagier",
            Identity::PrimePowerSunZagier => "thm1_1",
            Identity::PolynomialSunZagier => "thm1_2",
            Identity::Touchard => "touchard",
            Identity::GertschRobert => "gertsch_robert",
            Identity::BinomialRatio => "lemma2_1_i",
            Identity::BellPolynomialAtPrimePower => "lemma2_1_ii",
            Identity::BellPolynomialRecurrence => "recurrence2_1",
            Identity::BinomialAlternation => "binom_corollary",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.wire_name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Identity::ALL.iter().map(|i| i.wire_name()).collect();
                Error::InvalidArgument(format!(
                    "unknown identity '{s}' (expected one of: {})",
                    known.join(", ")
                ))
            })
    }
}

/// One parameter tuple for one identity.
///
/// The derived ordering sorts by identity, then `p`, `a`, `n`, `j`, `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CongruenceCase {
    SunZagier { p: PrimeModulus, n: u64 },
    PrimePowerSunZagier { q: PrimePower, n: u64 },
    PolynomialSunZagier { q: PrimePower, n: u64 },
    Touchard { p: PrimeModulus, m: u32, n: u64 },
    GertschRobert { q: PrimePower, n: u64 },
    BinomialRatio { q: PrimePower, j: u64, k: u64 },
    BellPolynomialAtPrimePower { q: PrimePower },
    BellPolynomialRecurrence { n_max: u64 },
    BinomialAlternation { q: PrimePower, j: u64 },
}

impl CongruenceCase {
    pub fn identity(&self) -> Identity {
        match self {
            CongruenceCase::SunZagier { .. } => Identity::SunZagier,
            CongruenceCase::PrimePowerSunZagier { .. } => Identity::PrimePowerSunZagier,
            CongruenceCase::PolynomialSunZagier { .. } => Identity::PolynomialSunZagier,
            CongruenceCase::Touchard { .. } => Identity::Touchard,
            CongruenceCase::GertschRobert { .. } => Identity::GertschRobert,
            CongruenceCase::BinomialRatio { .. } => Identity::BinomialRatio,
            CongruenceCase::BellPolynomialAtPrimePower { .. } => {
                Identity::BellPolynomialAtPrimePower
            }
            CongruenceCase::BellPolynomialRecurrence { .. } => Identity::BellPolynomialRecurrence,
            CongruenceCase::BinomialAlternation { .. } => Identity::BinomialAlternation,
        }
    }

    pub fn modulus(&self) -> Option<PrimeModulus> {
        match *self {
            CongruenceCase::SunZagier { p, .. } | CongruenceCase::Touchard { p, .. } => Some(p),
            CongruenceCase::PrimePowerSunZagier { q, .. }
            | CongruenceCase::PolynomialSunZagier { q, .. }
            | CongruenceCase::GertschRobert { q, .. }
            | CongruenceCase::BinomialRatio { q, .. }
            | CongruenceCase::BellPolynomialAtPrimePower { q }
            | CongruenceCase::BinomialAlternation { q, .. } => Some(q.modulus()),
            CongruenceCase::BellPolynomialRecurrence { .. } => None,
        }
    }

    pub fn p(&self) -> Option<u64> {
        self.modulus().map(PrimeModulus::get)
    }

    /// The prime-power exponent; for Touchard this is `m`.
    pub fn a(&self) -> Option<u32> {
        match *self {
            CongruenceCase::Touchard { m, .. } => Some(m),
            CongruenceCase::PrimePowerSunZagier { q, .. }
            | CongruenceCase::PolynomialSunZagier { q, .. }
            | CongruenceCase::GertschRobert { q, .. }
            | CongruenceCase::BinomialRatio { q, .. }
            | CongruenceCase::BellPolynomialAtPrimePower { q }
            | CongruenceCase::BinomialAlternation { q, .. } => Some(q.exponent()),
            CongruenceCase::SunZagier { .. } => Some(1),
            CongruenceCase::BellPolynomialRecurrence { .. } => None,
        }
    }

    /// `n`; for the recurrence check this is `n_max`.
    pub fn n(&self) -> Option<u64> {
        match *self {
            CongruenceCase::SunZagier { n, .. }
            | CongruenceCase::PrimePowerSunZagier { n, .. }
            | CongruenceCase::PolynomialSunZagier { n, .. }
            | CongruenceCase::Touchard { n, .. }
            | CongruenceCase::GertschRobert { n, .. } => Some(n),
            CongruenceCase::BellPolynomialRecurrence { n_max } => Some(n_max),
            _ => None,
        }
    }

    pub fn j(&self) -> Option<u64> {
        match *self {
            CongruenceCase::BinomialRatio { j, .. }
            | CongruenceCase::BinomialAlternation { j, .. } => Some(j),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<u64> {
        match *self {
            CongruenceCase::BinomialRatio { k, .. } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for CongruenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity())?;
        let fields = [
            ("p", self.p()),
            ("a", self.a().map(u64::from)),
            ("n", self.n()),
            ("j", self.j()),
            ("k", self.k()),
        ];
        for (name, v) in fields {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.wire_name().parse::<Identity>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.wire_name()));
        }
        assert!("thm9".parse::<Identity>().is_err());
    }

    #[test]
    fn ordering_follows_identity_then_parameters() {
        let p3 = PrimeModulus::new(3).unwrap();
        let p5 = PrimeModulus::new(5).unwrap();
        let mut cases = [
            CongruenceCase::Touchard { p: p3, m: 0, n: 0 },
            CongruenceCase::SunZagier { p: p5, n: 1 },
            CongruenceCase::SunZagier { p: p3, n: 2 },
            CongruenceCase::SunZagier { p: p3, n: 1 },
        ];
        cases.sort();
        let shown: Vec<_> = cases.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            [
                "sun_zagier p=3 a=1 n=1",
                "sun_zagier p=3 a=1 n=2",
                "sun_zagier p=5 a=1 n=1",
                "touchard p=3 a=0 n=0",
            ]
        );
    }
}
