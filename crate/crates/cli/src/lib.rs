//! Library side of the `motifdfa` binary: motif compilation from CLI-style
//! specs, automaton table serialization, DOT rendering, and the subcommand
//! implementations. Kept as a library so tests can drive the exact code
//! paths the binary uses.

pub mod commands;
pub mod dot;
pub mod format;
pub mod motif;

use std::fmt;

/// Failures split by exit code: usage and validation problems exit 1, I/O
/// problems exit 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<motifdfa::Error> for CliError {
    fn from(e: motifdfa::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}
