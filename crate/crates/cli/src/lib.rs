//! Scenario files, command implementations and reports behind the `ctxlab` binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod scenario;
