use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::{CongruenceCase, Identity};
use crate::limits::Limits;
use crate::modp::{primes_in, PrimeModulus, PrimePower};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidArgument(format!(
                "unknown format '{s}' (expected json, csv or text)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSpec {
    pub format: Format,
    /// `None` writes to stdout.
    pub path: Option<PathBuf>,
}

/// A verification sweep: which identities, over which parameter ranges.
///
/// Ranges are inclusive `[min, max]`. Identities that need `a >= 1` or `n >= 1`
/// clip the lower end; Touchard reads its exponent `m` from `a_range`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub identities: Vec<Identity>,
    pub prime_range: [u64; 2],
    pub a_range: [u32; 2],
    pub n_range: [u64; 2],
    /// Pins `j` for the binomial identities instead of enumerating it.
    pub j: Option<u64>,
    /// Pins `k` for the binomial-ratio identity instead of enumerating it.
    pub k: Option<u64>,
    pub caps: Limits,
    pub parallelism: usize,
    pub output: OutputSpec,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            identities: Identity::ALL.to_vec(),
            prime_range: [2, 13],
            a_range: [1, 2],
            n_range: [1, 30],
            j: None,
            k: None,
            caps: Limits::default(),
            parallelism: 1,
            output: OutputSpec::default(),
        }
    }
}

impl SweepConfig {
    /// Reads a TOML file, or JSON when the extension is `.json`.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Self = if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(e.to_string()))?
        } else {
            toml::from_str(&text).map_err(|e| Error::InvalidArgument(e.to_string()))?
        };
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(format!("empty {what}")));
        if self.identities.is_empty() {
            return bad("identity list");
        }
        if self.prime_range[0] > self.prime_range[1] {
            return bad("prime range");
        }
        if self.a_range[0] > self.a_range[1] {
            return bad("a range");
        }
        if self.n_range[0] > self.n_range[1] {
            return bad("n range");
        }
        if self.parallelism == 0 {
            return Err(Error::InvalidArgument("parallelism must be >= 1".into()));
        }
        Ok(())
    }

    fn primes(&self) -> Result<Vec<PrimeModulus>> {
        let primes = primes_in(self.prime_range[0], self.prime_range[1]);
        if primes.is_empty() {
            if self.prime_range[0] == self.prime_range[1] {
                return Err(Error::NotPrime(self.prime_range[0]));
            }
            return Err(Error::InvalidArgument(format!(
                "no primes in [{}, {}]",
                self.prime_range[0], self.prime_range[1]
            )));
        }
        primes.into_iter().map(PrimeModulus::new).collect()
    }

    /// Prime powers `p^a` with `a >= 1` within `max_prime_power`.
    ///
    /// Pairs above the cap are dropped; if every requested pair is above it the
    /// result is a resource-limit error.
    fn prime_powers(&self, primes: &[PrimeModulus]) -> Result<Vec<PrimePower>> {
        let mut out = Vec::new();
        let mut smallest_dropped: Option<u64> = None;
        for &p in primes {
            for a in self.a_range[0].max(1)..=self.a_range[1] {
                match PrimePower::new(p, a) {
                    Ok(q) if q.value() <= self.caps.max_prime_power => out.push(q),
                    Ok(q) => {
                        smallest_dropped =
                            Some(smallest_dropped.map_or(q.value(), |s| s.min(q.value())))
                    }
                    Err(_) => smallest_dropped = Some(u64::MAX),
                }
            }
        }
        if out.is_empty() {
            if let Some(requested) = smallest_dropped {
                return Err(Error::ResourceLimit {
                    what: "prime power",
                    requested,
                    cap: self.caps.max_prime_power,
                });
            }
        }
        Ok(out)
    }

    fn n_values(&self, min: u64) -> impl Iterator<Item = u64> + Clone {
        self.n_range[0].max(min)..=self.n_range[1]
    }

    /// Expands the configuration into its grid of cases, ascending.
    pub fn cases(&self) -> Result<Vec<CongruenceCase>> {
        self.validate()?;
        let primes = self.primes()?;
        let mut identities = self.identities.clone();
        identities.sort();
        identities.dedup();
        let mut cases = Vec::new();
        for id in identities {
            match id {
                Identity::SunZagier => {
                    for &p in &primes {
                        cases.extend(self.n_values(1).map(|n| CongruenceCase::SunZagier { p, n }));
                    }
                }
                Identity::PrimePowerSunZagier => {
                    for q in self.prime_powers(&primes)? {
                        cases.extend(
                            self.n_values(1)
                                .map(|n| CongruenceCase::PrimePowerSunZagier { q, n }),
                        );
                    }
                }
                Identity::PolynomialSunZagier => {
                    for q in self.prime_powers(&primes)? {
                        cases.extend(
                            self.n_values(1)
                                .map(|n| CongruenceCase::PolynomialSunZagier { q, n }),
                        );
                    }
                }
                Identity::Touchard => {
                    for &p in &primes {
                        for m in self.a_range[0]..=self.a_range[1] {
                            let Some(pm) = p.get().checked_pow(m) else {
                                continue;
                            };
                            cases.extend(
                                self.n_values(0)
                                    .filter(|n| pm + n < self.caps.max_bell_index)
                                    .map(|n| CongruenceCase::Touchard { p, m, n }),
                            );
                        }
                    }
                }
                Identity::GertschRobert => {
                    for q in self.prime_powers(&primes)? {
                        cases.extend(
                            self.n_values(0)
                                .map(|n| CongruenceCase::GertschRobert { q, n }),
                        );
                    }
                }
                Identity::BinomialRatio => {
                    for q in self.prime_powers(&primes)? {
                        let top = q.value() - 1;
                        let js: Vec<u64> = match self.j {
                            Some(j) => vec![j],
                            None => (0..=top).collect(),
                        };
                        for j in js {
                            let ks: Vec<u64> = match self.k {
                                Some(k) => vec![k],
                                None => (0..=top.saturating_sub(j)).collect(),
                            };
                            cases.extend(ks.into_iter().map(|k| CongruenceCase::BinomialRatio {
                                q,
                                j,
                                k,
                            }));
                        }
                    }
                }
                Identity::BellPolynomialAtPrimePower => {
                    for q in self.prime_powers(&primes)? {
                        cases.push(CongruenceCase::BellPolynomialAtPrimePower { q });
                    }
                }
                Identity::BellPolynomialRecurrence => {
                    cases.push(CongruenceCase::BellPolynomialRecurrence {
                        n_max: self.n_range[1],
                    });
                }
                Identity::BinomialAlternation => {
                    for q in self.prime_powers(&primes)? {
                        match self.j {
                            Some(j) => cases.push(CongruenceCase::BinomialAlternation { q, j }),
                            None => cases.extend(
                                (0..q.value())
                                    .map(|j| CongruenceCase::BinomialAlternation { q, j }),
                            ),
                        }
                    }
                }
            }
        }
        cases.sort();
        cases.dedup();
        Ok(cases)
    }
}
