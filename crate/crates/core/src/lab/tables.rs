use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::case::CongruenceCase;
use crate::error::{Error, Result};
use crate::exact::{derangements, PascalTriangle};
use crate::limits::{check, Limits};
use crate::modp::{
    bell_numbers_modp, bell_polynomials_modp, ModPolynomial, PrimeModulus, StirlingCache,
};

/// Pascal rows beyond this are not materialized; binomials are computed directly.
const PASCAL_TABLE_MAX: usize = 1024;

/// Largest table index each case family needs, merged across a grid.
#[derive(Debug, Default, Clone)]
pub(crate) struct Requirements {
    bell_modp: BTreeMap<PrimeModulus, usize>,
    polys_modp: BTreeMap<PrimeModulus, usize>,
    derangements: Option<usize>,
    pascal: Option<usize>,
}

impl Requirements {
    fn bell(&mut self, p: PrimeModulus, idx: u64) {
        let e = self.bell_modp.entry(p).or_default();
        *e = (*e).max(idx as usize);
    }

    fn polys(&mut self, p: PrimeModulus, idx: u64) {
        let e = self.polys_modp.entry(p).or_default();
        *e = (*e).max(idx as usize);
    }

    fn derangement(&mut self, idx: u64) {
        self.derangements = Some(self.derangements.unwrap_or(0).max(idx as usize));
    }

    fn pascal(&mut self, row: u64) {
        if row as usize <= PASCAL_TABLE_MAX {
            self.pascal = Some(self.pascal.unwrap_or(0).max(row as usize));
        }
    }
}

impl CongruenceCase {
    /// Rejects cases whose tables would breach `limits` or whose parameters are malformed.
    pub fn check_limits(&self, limits: &Limits) -> Result<()> {
        match *self {
            CongruenceCase::SunZagier { p, n } => {
                limits.check_bell_index(p.get() - 1)?;
                positive(n)?;
                limits.check_bell_index(n - 1)
            }
            CongruenceCase::PrimePowerSunZagier { q, n } => {
                limits.check_prime_power(q.value())?;
                limits.check_bell_index(q.value() - 1)?;
                positive(n)?;
                limits.check_bell_index(n - 1)
            }
            CongruenceCase::PolynomialSunZagier { q, n } => {
                limits.check_prime_power(q.value())?;
                limits.check_poly_degree(q.value() - 1)?;
                positive(n)?;
                limits.check_bell_index(n)
            }
            CongruenceCase::Touchard { p, m, n } => {
                let top = p
                    .get()
                    .checked_pow(m)
                    .and_then(|pm| pm.checked_add(n)?.checked_add(1))
                    .ok_or_else(|| Error::InvalidArgument("p^m + n overflows".into()))?;
                limits.check_bell_index(top)
            }
            CongruenceCase::GertschRobert { q, n } => {
                limits.check_prime_power(q.value())?;
                let top = q
                    .value()
                    .checked_add(n)
                    .ok_or_else(|| Error::InvalidArgument("p^a + n overflows".into()))?;
                limits.check_poly_degree(top)
            }
            CongruenceCase::BinomialRatio { q, j, k } => {
                limits.check_prime_power(q.value())?;
                if j.checked_add(k).is_none_or(|s| s >= q.value()) {
                    return Err(Error::InvalidArgument(format!(
                        "hypothesis j + k <= p^a - 1 violated (j={j}, k={k}, p^a={})",
                        q.value()
                    )));
                }
                Ok(())
            }
            CongruenceCase::BellPolynomialAtPrimePower { q } => {
                limits.check_prime_power(q.value())?;
                limits.check_poly_degree(q.value())
            }
            CongruenceCase::BellPolynomialRecurrence { n_max } => limits.check_bell_index(n_max),
            CongruenceCase::BinomialAlternation { q, j } => {
                limits.check_prime_power(q.value())?;
                check("binomial index j", j, q.value() - 1)
            }
        }
    }

    pub(crate) fn require(&self, req: &mut Requirements) {
        match *self {
            CongruenceCase::SunZagier { p, n } => {
                req.bell(p, p.get() - 1);
                req.derangement(n - 1);
            }
            CongruenceCase::PrimePowerSunZagier { q, n } => {
                req.bell(q.modulus(), q.value() - 1);
                req.derangement(n - 1);
            }
            CongruenceCase::PolynomialSunZagier { q, .. } => {
                req.polys(q.modulus(), q.value() - 1);
            }
            CongruenceCase::Touchard { p, m, n } => {
                req.bell(p, p.get().pow(m) + n + 1);
            }
            CongruenceCase::GertschRobert { q, n } => {
                req.polys(q.modulus(), q.value() + n);
            }
            CongruenceCase::BinomialRatio { q, .. }
            | CongruenceCase::BinomialAlternation { q, .. } => req.pascal(q.value() - 1),
            CongruenceCase::BellPolynomialAtPrimePower { q } => {
                req.polys(q.modulus(), q.value());
            }
            CongruenceCase::BellPolynomialRecurrence { .. } => {}
        }
    }
}

fn positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "n must be a positive integer".into(),
        ));
    }
    Ok(())
}

/// Tables shared read-only by every case of a sweep.
///
/// Bell numbers mod `p` come from the Bell triangle, Bell polynomials mod `p`
/// from Stirling rows; neither is derived from a congruence under test.
#[derive(Debug)]
pub struct SharedTables {
    pub(crate) limits: Limits,
    pub(crate) bell_modp: HashMap<PrimeModulus, Vec<u64>>,
    pub(crate) polys_modp: HashMap<PrimeModulus, Vec<ModPolynomial>>,
    pub(crate) derangements: Vec<BigInt>,
    pub(crate) pascal: Option<PascalTriangle>,
}

impl SharedTables {
    /// Builds every table the given cases need. Cases must already pass
    /// [`CongruenceCase::check_limits`].
    pub fn for_cases<'a>(
        cases: impl IntoIterator<Item = &'a CongruenceCase>,
        limits: &Limits,
        cache: Option<&StirlingCache>,
    ) -> Result<Self> {
        let mut req = Requirements::default();
        for case in cases {
            case.require(&mut req);
        }
        Self::build(&req, limits, cache)
    }

    pub(crate) fn build(
        req: &Requirements,
        limits: &Limits,
        cache: Option<&StirlingCache>,
    ) -> Result<Self> {
        let (bells, (polys, (ders, pascal))) = rayon::join(
            || {
                req.bell_modp
                    .par_iter()
                    .map(|(&p, &n)| Ok((p, bell_numbers_modp(n, p, limits)?)))
                    .collect::<Result<HashMap<_, _>>>()
            },
            || {
                rayon::join(
                    || {
                        req.polys_modp
                            .par_iter()
                            .map(|(&p, &n)| Ok((p, polys_for(p, n, limits, cache)?)))
                            .collect::<Result<HashMap<_, _>>>()
                    },
                    || {
                        rayon::join(
                            || match req.derangements {
                                Some(n) => derangements(n, limits),
                                None => Ok(Vec::new()),
                            },
                            || req.pascal.map(PascalTriangle::new),
                        )
                    },
                )
            },
        );
        Ok(Self {
            limits: *limits,
            bell_modp: bells?,
            polys_modp: polys?,
            derangements: ders?,
            pascal,
        })
    }

    pub(crate) fn bells(&self, p: PrimeModulus, need: u64) -> Result<&[u64]> {
        self.bell_modp
            .get(&p)
            .filter(|t| t.len() as u64 > need)
            .map(Vec::as_slice)
            .ok_or_else(|| missing("bell numbers mod p", p, need))
    }

    pub(crate) fn polys(&self, p: PrimeModulus, need: u64) -> Result<&[ModPolynomial]> {
        self.polys_modp
            .get(&p)
            .filter(|t| t.len() as u64 > need)
            .map(Vec::as_slice)
            .ok_or_else(|| missing("bell polynomials mod p", p, need))
    }

    pub(crate) fn derangement(&self, n: u64) -> Result<&BigInt> {
        self.derangements
            .get(n as usize)
            .ok_or_else(|| Error::InvalidArgument(format!("derangement table lacks D_{n}")))
    }
}

fn polys_for(
    p: PrimeModulus,
    n: usize,
    limits: &Limits,
    cache: Option<&StirlingCache>,
) -> Result<Vec<ModPolynomial>> {
    match cache {
        Some(cache) => {
            limits.check_poly_degree(n as u64)?;
            Ok(cache
                .rows(p, n, limits)?
                .into_iter()
                .map(|row| ModPolynomial::from_residues(p, row))
                .collect())
        }
        None => bell_polynomials_modp(n, p, limits),
    }
}

fn missing(what: &str, p: PrimeModulus, need: u64) -> Error {
    Error::InvalidArgument(format!("{what} for p={p} not built up to index {need}"))
}
