//! Library half of the `edgespectra` CLI: input resolution, the report
//! model, the sweep engine, and the subcommand implementations. The binary
//! in `main.rs` only parses arguments and forwards here, which keeps every
//! code path callable from tests.

pub mod commands;
pub mod input;
pub mod report;
pub mod sweep;

use thiserror::Error;

/// Anything that should abort with the usage/parse exit code (2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }
}

/// Exit-code contract shared by every subcommand.
pub mod exit {
    /// Everything ran and every applicable check held.
    pub const OK: i32 = 0;
    /// At least one theorem check failed (an implementation bug by
    /// definition, since the statements are proven).
    pub const CHECK_FAILED: i32 = 1;
    /// Bad usage or unparseable input.
    pub const USAGE: i32 = 2;
}
