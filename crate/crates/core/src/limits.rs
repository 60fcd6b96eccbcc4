use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps shared by every size-dependent operation.
///
/// Defaults keep every single operation well under a minute on a desktop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest index for exact Bell/Stirling/derangement tables.
    pub max_bell_index: u64,
    /// Largest `p^a` any verifier or mod-p polynomial table may use.
    pub max_prime_power: u64,
    /// Largest degree of a materialized mod-p Bell polynomial table.
    pub max_poly_degree: u64,
    /// Largest number of streamed mod-p Stirling rows.
    pub max_stirling_modp_rows: u64,
    /// Largest `n_max` for the root-ratio experiment.
    pub max_root_ratio: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_bell_index: 5000,
            max_prime_power: 4096,
            max_poly_degree: 8192,
            max_stirling_modp_rows: 20000,
            max_root_ratio: 200,
        }
    }
}

pub(crate) fn check(what: &'static str, requested: u64, cap: u64) -> Result<()> {
    if requested > cap {
        Err(Error::ResourceLimit {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}

impl Limits {
    pub fn check_bell_index(&self, n: u64) -> Result<()> {
        check("bell index", n, self.max_bell_index)
    }

    pub fn check_prime_power(&self, q: u64) -> Result<()> {
        check("prime power", q, self.max_prime_power)
    }

    pub fn check_poly_degree(&self, d: u64) -> Result<()> {
        check("polynomial degree", d, self.max_poly_degree)
    }

    pub fn check_modp_rows(&self, n: u64) -> Result<()> {
        check("mod-p stirling rows", n, self.max_stirling_modp_rows)
    }

    pub fn check_root_ratio(&self, n: u64) -> Result<()> {
        check("root-ratio n_max", n, self.max_root_ratio)
    }
}
