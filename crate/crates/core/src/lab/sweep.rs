use std::collections::BTreeSet;
use std::time::Duration;

use rayon::prelude::*;

use super::case::CongruenceCase;
use super::report::{Status, VerificationReport};
use super::tables::{Requirements, SharedTables};
use crate::error::Error;
use crate::limits::Limits;
use crate::modp::StirlingCache;

/// Verifies every case of a grid, one report per distinct case.
///
/// Reports come back sorted by identity, `p`, `a`, `n`, `j`, `k` whatever the
/// parallelism. Per-case failures (cap breaches, arithmetic faults) become
/// [`Status::Error`] reports; the sweep itself never aborts.
pub fn run_sweep(
    cases: impl IntoIterator<Item = CongruenceCase>,
    parallelism: usize,
    limits: &Limits,
    cache: Option<&StirlingCache>,
) -> Vec<VerificationReport> {
    let cases: BTreeSet<CongruenceCase> = cases.into_iter().collect();
    let mut reports = Vec::with_capacity(cases.len());
    let mut runnable = Vec::with_capacity(cases.len());
    let mut req = Requirements::default();
    for case in cases {
        match case.check_limits(limits) {
            Ok(()) => {
                case.require(&mut req);
                runnable.push(case);
            }
            Err(e) => reports.push(error_report(case, e)),
        }
    }

    let work = || match SharedTables::build(&req, limits, cache) {
        Ok(tables) => runnable
            .par_iter()
            .map(|case| {
                tables
                    .verify(case)
                    .unwrap_or_else(|e| error_report(*case, e))
            })
            .collect::<Vec<_>>(),
        Err(e) => runnable
            .iter()
            .map(|case| error_report(*case, e.clone()))
            .collect(),
    };
    let done = match rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };
    reports.extend(done);
    reports.sort_by_key(|a| a.case);
    reports
}

fn error_report(case: CongruenceCase, e: Error) -> VerificationReport {
    VerificationReport {
        case,
        status: Status::Error {
            message: e.to_string(),
        },
        lhs: String::new(),
        rhs: String::new(),
        elapsed: Duration::ZERO,
    }
}
