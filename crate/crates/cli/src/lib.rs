//! Command-line front end for `homleib`: algebra file ingestion, the
//! computation and verification commands, and their reports.

pub mod commands;
pub mod input;
pub mod report;

pub use commands::{
    cmd_check_identities, cmd_cohomology, cmd_cup, cmd_homology, cmd_paper_fixtures, cmd_shuffle_table, cmd_verify,
    Options,
};
pub use input::{builtin, resolve, AlgebraFile, Loaded, BUILTIN_NAMES};
pub use report::{Line, RunReport, Status, Table};

/// Exit codes: 0 success (documented divergences included), 1 identity or
/// axiom failure, 2 input error, 3 resource cap.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<homleib::Error> for CliError {
    fn from(e: homleib::Error) -> Self {
        match e {
            homleib::Error::Axiom { .. } => CliError::Failure(e.to_string()),
            homleib::Error::ResourceCap { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
