use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::config::{Format, SweepConfig};
use crate::error::{Error, Result};
use crate::lab::{Identity, Status, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;

/// Fixed CSV header; inapplicable parameters are empty cells.
pub const CSV_HEADER: &str = "identity,p,a,n,j,k,status,lhs,rhs,elapsed_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Pass,
    Fail,
    SkippedHypothesis,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: Identity,
    pub p: Option<u64>,
    pub a: Option<u32>,
    pub n: Option<u64>,
    pub j: Option<u64>,
    pub k: Option<u64>,
    pub status: RecordStatus,
    /// Violated hypothesis for skips, message for errors.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    /// Present only on failures.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    pub elapsed_ms: f64,
}

impl ReportRecord {
    pub fn from_report(r: &VerificationReport) -> Self {
        let (status, detail) = match &r.status {
            Status::Pass => (RecordStatus::Pass, None),
            Status::Fail => (RecordStatus::Fail, None),
            Status::SkippedHypothesis { hypothesis } => {
                (RecordStatus::SkippedHypothesis, Some(hypothesis.clone()))
            }
            Status::Error { message } => (RecordStatus::Error, Some(message.clone())),
        };
        let failed = status == RecordStatus::Fail;
        Self {
            identity: r.case.identity(),
            p: r.case.p(),
            a: r.case.a(),
            n: r.case.n(),
            j: r.case.j(),
            k: r.case.k(),
            status,
            detail,
            lhs: failed.then(|| r.lhs.clone()),
            rhs: failed.then(|| r.rhs.clone()),
            elapsed_ms: millis(r.elapsed),
        }
    }

    /// The record with its timing zeroed, for run-to-run comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped_hypothesis: usize,
    pub error: usize,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: SweepConfig,
    pub records: Vec<ReportRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(config: SweepConfig, reports: &[VerificationReport], wall: Duration) -> Self {
        let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from_report).collect();
        let count = |s: RecordStatus| records.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            total: records.len(),
            pass: count(RecordStatus::Pass),
            fail: count(RecordStatus::Fail),
            skipped_hypothesis: count(RecordStatus::SkippedHypothesis),
            error: count(RecordStatus::Error),
            wall_time_ms: millis(wall),
        };
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            records,
            summary,
        }
    }

    /// True when no record failed or errored; skips do not count.
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.identity,
                opt(r.p),
                opt(r.a.map(u64::from)),
                opt(r.n),
                opt(r.j),
                opt(r.k),
                status_label(r.status),
                csv_field(r.lhs.as_deref().unwrap_or("")),
                csv_field(r.rhs.as_deref().unwrap_or("")),
                r.elapsed_ms
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = write!(
                out,
                "{:<18} {}",
                status_label(r.status).to_uppercase(),
                r.identity
            );
            for (name, v) in [
                ("p", r.p),
                ("a", r.a.map(u64::from)),
                ("n", r.n),
                ("j", r.j),
                ("k", r.k),
            ] {
                if let Some(v) = v {
                    let _ = write!(out, " {name}={v}");
                }
            }
            if let Some(d) = &r.detail {
                let _ = write!(out, " ({d})");
            }
            if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
                let _ = write!(out, "\n    lhs: {l}\n    rhs: {rh}");
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} cases: {} pass, {} fail, {} skipped (hypothesis), {} error in {:.1} ms",
            s.total, s.pass, s.fail, s.skipped_hypothesis, s.error, s.wall_time_ms
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }
}

fn status_label(s: RecordStatus) -> &'static str {
    match s {
        RecordStatus::Pass => "pass",
        RecordStatus::Fail => "fail",
        RecordStatus::SkippedHypothesis => "skipped_hypothesis",
        RecordStatus::Error => "error",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::CongruenceCase;
    use crate::modp::PrimeModulus;

    fn sample() -> Vec<VerificationReport> {
        let p = PrimeModulus::new(3).unwrap();
        vec![
            VerificationReport {
                case: CongruenceCase::SunZagier { p, n: 1 },
                status: Status::Pass,
                lhs: "1".into(),
                rhs: "1".into(),
                elapsed: Duration::from_micros(12),
            },
            VerificationReport {
                case: CongruenceCase::SunZagier { p, n: 2 },
                status: Status::Fail,
                lhs: "x + 2*x^3".into(),
                rhs: "x".into(),
                elapsed: Duration::from_micros(7),
            },
            VerificationReport {
                case: CongruenceCase::SunZagier { p, n: 3 },
                status: Status::SkippedHypothesis {
                    hypothesis: "p divides n".into(),
                },
                lhs: String::new(),
                rhs: String::new(),
                elapsed: Duration::ZERO,
            },
        ]
    }

    #[test]
    fn summary_counts_match_records() {
        let doc = ReportDocument::new(SweepConfig::default(), &sample(), Duration::from_millis(3));
        assert_eq!(doc.summary.total, 3);
        assert_eq!(doc.summary.pass, 1);
        assert_eq!(doc.summary.fail, 1);
        assert_eq!(doc.summary.skipped_hypothesis, 1);
        assert!(!doc.all_passed());
        assert_eq!(doc.records[0].lhs, None);
        assert_eq!(doc.records[1].lhs.as_deref(), Some("x + 2*x^3"));
    }

    #[test]
    fn json_round_trip() {
        let doc = ReportDocument::new(SweepConfig::default(), &sample(), Duration::from_millis(3));
        let json = doc.to_json();
        assert!(json.contains("\"schema_version\": 1"));
        assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
    }

    #[test]
    fn csv_layout() {
        let doc = ReportDocument::new(SweepConfig::default(), &sample(), Duration::ZERO);
        let csv = doc.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("sun_zagier,3,1,1,,,pass,,,"));
        assert!(lines[2].starts_with("sun_zagier,3,1,2,,,fail,x + 2*x^3,x,"));
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn text_mentions_every_case() {
        let doc = ReportDocument::new(SweepConfig::default(), &sample(), Duration::ZERO);
        let text = doc.to_text();
        assert!(text.contains("SKIPPED_HYPOTHESIS sun_zagier p=3 a=1 n=3 (p divides n)"));
        assert!(text.contains("3 cases: 1 pass, 1 fail"));
    }
}
