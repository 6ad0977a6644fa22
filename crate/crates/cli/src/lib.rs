//! Command-line harness for the Tate–Hochschild engine: job configuration,
//! result bundles, the S3 verification suite, the group-homology check of
//! Connes' operator and the randomized self-test driver.

pub mod app;
pub mod bundle;
pub mod config;
pub mod connes;
pub mod s3;
pub mod suites;

pub use app::{run, Outcome};
pub use config::{exit, CliError, Format, GroupSpec, JobConfig};
