//! Library side of the `rdp` command-line tool: argument types, command
//! handlers and the verification suites, kept out of `main` so tests can
//! drive them in-process.

pub mod args;
pub mod commands;
pub mod envelope;
pub mod golden;
pub mod suites;

use std::fmt;

pub use args::{Cli, Command};
pub use envelope::ReportEnvelope;

/// Process exit status of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Violation = 1,
    Usage = 2,
}

/// What a command prints and how the process exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: Status,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rdp_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("failed to serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Json(_) => Status::Violation,
            _ => Status::Usage,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Table(a) => commands::table(&a),
        Command::Analyze(a) => commands::analyze(&a),
        Command::Verify(a) => commands::verify(&a),
    }
}

/// Sizes the global rayon pool from `RDP_THREADS` when it holds a positive
/// integer; otherwise rayon's default applies.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("RDP_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "RDP_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    // A second initialization (tests in one process) keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.stdout)
    }
}
