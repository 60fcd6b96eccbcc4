//! Python bindings: exact sequences, mod-p helpers and the congruence verifiers.

use std::time::Duration;

use bellcong::exact::{self, BigInt};
use bellcong::harness::{ReportDocument, SweepConfig};
use bellcong::lab::{self, CongruenceCase, Identity, Status, VerificationReport};
use bellcong::modp::{self, ModScalar, PrimeModulus, PrimePower};
use bellcong::{Error, Limits};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(bellcong_py, BellcongError, PyException);
create_exception!(bellcong_py, ResourceLimitError, BellcongError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => ResourceLimitError::new_err(e.to_string()),
        _ => BellcongError::new_err(e.to_string()),
    }
}

fn prime(p: u64) -> PyResult<PrimeModulus> {
    PrimeModulus::new(p).map_err(py_err)
}

fn prime_power(p: u64, a: u32) -> PyResult<PrimePower> {
    PrimePower::new(prime(p)?, a).map_err(py_err)
}

/// A prime power `p^a` with `a >= 1`.
#[pyclass(name = "PrimePower", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyPrimePower(PrimePower);

#[pymethods]
impl PyPrimePower {
    #[new]
    fn new(p: u64, a: u32) -> PyResult<Self> {
        prime_power(p, a).map(Self)
    }

    #[getter]
    fn p(&self) -> u64 {
        self.0.p()
    }

    #[getter]
    fn a(&self) -> u32 {
        self.0.exponent()
    }

    #[getter]
    fn value(&self) -> u64 {
        self.0.value()
    }

    fn __repr__(&self) -> String {
        format!("PrimePower(p={}, a={})", self.0.p(), self.0.exponent())
    }
}

/// Outcome of one verified case.
#[pyclass(name = "Report", frozen, get_all)]
struct PyReport {
    identity: String,
    p: Option<u64>,
    a: Option<u32>,
    n: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
    /// "pass", "fail", "skipped_hypothesis" or "error".
    status: String,
    /// Skipped hypothesis or error message.
    detail: Option<String>,
    lhs: String,
    rhs: String,
    elapsed_ms: f64,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({} {}: {} vs {})",
            self.identity, self.status, self.lhs, self.rhs
        )
    }
}

impl From<VerificationReport> for PyReport {
    fn from(r: VerificationReport) -> Self {
        let (status, detail) = match r.status {
            Status::Pass => ("pass", None),
            Status::Fail => ("fail", None),
            Status::SkippedHypothesis { hypothesis } => ("skipped_hypothesis", Some(hypothesis)),
            Status::Error { message } => ("error", Some(message)),
        };
        Self {
            identity: r.case.identity().wire_name().to_string(),
            p: r.case.p(),
            a: r.case.a(),
            n: r.case.n(),
            j: r.case.j(),
            k: r.case.k(),
            status: status.to_string(),
            detail,
            lhs: r.lhs,
            rhs: r.rhs,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}

fn missing(what: &str, id: Identity) -> PyErr {
    BellcongError::new_err(format!("{} needs {what}", id.wire_name()))
}

/// Builds a case from keyword parameters. `a` is Touchard's `m` and `n` is the
/// recurrence's `n_max`.
fn build_case(
    identity: &str,
    p: Option<u64>,
    a: Option<u32>,
    n: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
) -> PyResult<CongruenceCase> {
    let id: Identity = identity.parse().map_err(py_err)?;
    let need_p = || p.ok_or_else(|| missing("p", id));
    let need_n = || n.ok_or_else(|| missing("n", id));
    let need_j = || j.ok_or_else(|| missing("j", id));
    let q = || prime_power(need_p()?, a.unwrap_or(1));
    Ok(match id {
        Identity::SunZagier => CongruenceCase::SunZagier {
            p: prime(need_p()?)?,
            n: need_n()?,
        },
        Identity::PrimePowerSunZagier => CongruenceCase::PrimePowerSunZagier {
            q: q()?,
            n: need_n()?,
        },
        Identity::PolynomialSunZagier => CongruenceCase::PolynomialSunZagier {
            q: q()?,
            n: need_n()?,
        },
        Identity::Touchard => CongruenceCase::Touchard {
            p: prime(need_p()?)?,
            m: a.unwrap_or(1),
            n: need_n()?,
        },
        Identity::GertschRobert => CongruenceCase::GertschRobert {
            q: q()?,
            n: need_n()?,
        },
        Identity::BinomialRatio => CongruenceCase::BinomialRatio {
            q: q()?,
            j: need_j()?,
            k: k.ok_or_else(|| missing("k", id))?,
        },
        Identity::BellPolynomialAtPrimePower => {
            CongruenceCase::BellPolynomialAtPrimePower { q: q()? }
        }
        Identity::BellPolynomialRecurrence => {
            CongruenceCase::BellPolynomialRecurrence { n_max: need_n()? }
        }
        Identity::BinomialAlternation => CongruenceCase::BinomialAlternation {
            q: q()?,
            j: need_j()?,
        },
    })
}

/// `B_0..=B_{n_max}`.
#[pyfunction]
fn bell_numbers(n_max: usize) -> PyResult<Vec<BigInt>> {
    exact::bell_numbers(n_max, &Limits::default()).map_err(py_err)
}

/// Coefficients of `B_n(x)`, constant term first.
#[pyfunction]
fn bell_polynomial(n: usize) -> PyResult<Vec<BigInt>> {
    exact::bell_polynomial(n, &Limits::default())
        .map(|b| b.into_coeffs())
        .map_err(py_err)
}

/// `B_n(x)` rendered as text, e.g. `x + 3*x^2 + x^3`.
#[pyfunction]
fn bell_polynomial_str(n: usize) -> PyResult<String> {
    exact::bell_polynomial(n, &Limits::default())
        .map(|b| b.to_string())
        .map_err(py_err)
}

/// `S(n, k)`.
#[pyfunction]
fn stirling2(n: u64, k: u64) -> PyResult<BigInt> {
    Limits::default().check_bell_index(n).map_err(py_err)?;
    exact::stirling2_explicit(n, k).map_err(py_err)
}

/// Rows `0..=n_max` of the Stirling triangle.
#[pyfunction]
fn stirling2_table(n_max: usize) -> PyResult<Vec<Vec<BigInt>>> {
    exact::stirling2_table(n_max, &Limits::default()).map_err(py_err)
}

/// `D_0..=D_{n_max}`.
#[pyfunction]
fn derangements(n_max: usize) -> PyResult<Vec<BigInt>> {
    exact::derangements(n_max, &Limits::default()).map_err(py_err)
}

/// `binom(n, k)` for any integer `n`.
#[pyfunction]
fn binomial(n: i64, k: u64) -> BigInt {
    exact::binomial(n, k)
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    modp::is_prime(n)
}

/// `B_0..=B_{n_max} mod p`.
#[pyfunction]
fn bell_numbers_mod(n_max: usize, p: u64) -> PyResult<Vec<u64>> {
    modp::bell_numbers_modp(n_max, prime(p)?, &Limits::default()).map_err(py_err)
}

/// Inverse of `s` modulo the prime `p`.
#[pyfunction]
fn mod_inverse(s: i64, p: u64) -> PyResult<u64> {
    modp::mod_inverse(ModScalar::from_i64(s, prime(p)?))
        .map(|r| r.residue())
        .map_err(py_err)
}

/// `(v, u)` with `n = p^v * m`, `p` not dividing `m`, and `u = m mod p`.
#[pyfunction]
fn valued_unit(n: BigInt, p: u64) -> PyResult<(u64, u64)> {
    let v = modp::valued_unit_of(&n, prime(p)?).map_err(py_err)?;
    Ok((v.valuation, v.unit.residue()))
}

/// `[(n, decreasing)]` for `1 <= n < n_max`.
#[pyfunction]
fn root_ratio(n_max: u64) -> PyResult<Vec<(u64, bool)>> {
    let steps = exact::root_ratio_monotonicity(n_max, &Limits::default()).map_err(py_err)?;
    Ok(steps.into_iter().map(|s| (s.n, s.decreasing)).collect())
}

/// Verifies one case. Identity names match the CLI's `--identity` values.
#[pyfunction]
#[pyo3(signature = (identity, p=None, a=None, n=None, j=None, k=None))]
fn verify(
    py: Python<'_>,
    identity: &str,
    p: Option<u64>,
    a: Option<u32>,
    n: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
) -> PyResult<PyReport> {
    let case = build_case(identity, p, a, n, j, k)?;
    let report = py
        .detach(|| lab::verify(&case, &Limits::default()))
        .map_err(py_err)?;
    Ok(report.into())
}

/// Runs a sweep and returns the JSON report. `config` is TOML text in the
/// same format as the CLI's `--config` file; keyword arguments override it.
#[pyfunction]
#[pyo3(signature = (config=None, identities=None, prime_range=None, a_range=None, n_range=None, parallelism=None))]
fn sweep(
    py: Python<'_>,
    config: Option<&str>,
    identities: Option<Vec<String>>,
    prime_range: Option<[u64; 2]>,
    a_range: Option<[u32; 2]>,
    n_range: Option<[u64; 2]>,
    parallelism: Option<usize>,
) -> PyResult<String> {
    let mut cfg = match config {
        Some(text) => toml::from_str::<SweepConfig>(text)
            .map_err(|e| BellcongError::new_err(e.to_string()))?,
        None => SweepConfig::default(),
    };
    if let Some(ids) = identities {
        cfg.identities = ids
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, Error>>()
            .map_err(py_err)?;
    }
    cfg.prime_range = prime_range.unwrap_or(cfg.prime_range);
    cfg.a_range = a_range.unwrap_or(cfg.a_range);
    cfg.n_range = n_range.unwrap_or(cfg.n_range);
    cfg.parallelism = parallelism.unwrap_or(cfg.parallelism);

    py.detach(|| {
        let cases = cfg.cases()?;
        for case in &cases {
            case.check_limits(&cfg.caps)?;
        }
        let start = std::time::Instant::now();
        let reports = lab::run_sweep(cases, cfg.parallelism, &cfg.caps, None);
        let wall: Duration = start.elapsed();
        Ok(ReportDocument::new(cfg.clone(), &reports, wall).to_json())
    })
    .map_err(py_err)
}

#[pymodule]
fn bellcong_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("BellcongError", py.get_type::<BellcongError>())?;
    m.add("ResourceLimitError", py.get_type::<ResourceLimitError>())?;
    m.add_class::<PyPrimePower>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(bell_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(bell_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(bell_polynomial_str, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2_table, m)?)?;
    m.add_function(wrap_pyfunction!(derangements, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(bell_numbers_mod, m)?)?;
    m.add_function(wrap_pyfunction!(mod_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(valued_unit, m)?)?;
    m.add_function(wrap_pyfunction!(root_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_cases_from_keywords() {
        let c = build_case("thm1_1", Some(3), Some(2), Some(1), None, None).unwrap();
        assert_eq!(c.to_string(), "thm1_1 p=3 a=2 n=1");
        let c = build_case("touchard", Some(5), Some(0), Some(4), None, None).unwrap();
        assert_eq!((c.a(), c.n()), (Some(0), Some(4)));
        let c = build_case("recurrence2_1", None, None, Some(12), None, None).unwrap();
        assert_eq!(c.n(), Some(12));
    }
}
