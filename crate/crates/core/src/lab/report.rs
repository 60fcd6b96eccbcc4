use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::case::CongruenceCase;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The parameters fall outside the identity's hypothesis, e.g. `p divides n`.
    SkippedHypothesis {
        hypothesis: String,
    },
    /// The case could not be evaluated (cap breach, arithmetic fault).
    Error {
        message: String,
    },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedHypothesis { .. } => "skipped_hypothesis",
            Status::Error { .. } => "error",
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

/// Outcome of checking one [`CongruenceCase`].
///
/// `lhs` and `rhs` are canonical renderings: least nonnegative residues for
/// scalars, sparse ascending terms for polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub case: CongruenceCase,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed: Duration,
}
