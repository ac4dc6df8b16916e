//! Library half of the `octo` binary: command implementations, run
//! reports, and the SVG renderer, kept out of main.rs so integration
//! tests can call them directly.

pub mod commands;
pub mod report;
pub mod svg;

pub use commands::{run, Cli, Outcome};
pub use report::RunReport;
