use thiserror::Error;

/// Errors raised by the sequence generators, the mod-p substrate and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A requested size exceeds a configured resource cap.
    #[error("resource limit exceeded: {what} = {requested} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    /// An exact division or integrality check failed. Always an implementation bug.
    #[error("inexact arithmetic in {0}")]
    InexactArithmetic(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range [2, 2^63)")]
    ModulusOutOfRange(u64),
    #[error("zero has no inverse modulo {0}")]
    ZeroInverse(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("zero has no p-adic valuation")]
    ZeroInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
