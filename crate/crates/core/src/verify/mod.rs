//! Verification suites, JSON reports and the command-line front end.

pub mod cli;
mod report;
mod suites;

pub use report::{Check, Metadata, Mode, Status, SuiteReport};
pub use suites::{run_suites, suite_names, Injection, SuiteOptions};
