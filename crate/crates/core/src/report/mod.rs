//! Batch front end: job configuration, dispatch and reports.

pub mod config;
pub mod document;
pub mod run;
pub mod suite;

pub use config::{Command, Job, JobConfig};
pub use document::{Check, ReportDocument, Status, Value};
pub use run::{run, run_job};

/// Process exit codes of the command-line front end.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IDENTITY_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
}
