//! Sweep configuration and machine-readable report documents.

mod config;
mod document;

pub use config::{Format, OutputSpec, SweepConfig};
pub use document::{
    RecordStatus, ReportDocument, ReportRecord, Summary, CSV_HEADER, SCHEMA_VERSION,
};
