//! Library half of the `theta-bounds` binary: graph input resolution,
//! report structures, and the command implementations. The binary is a
//! thin clap wrapper over `commands`.

pub mod commands;
pub mod input;
pub mod report;

use thiserror::Error;

/// Errors carry the exit-code contract: input problems exit 1, solver
/// or runtime failures exit 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable overriding the default solver tolerance when
/// no --tol flag is given.
pub const TOL_ENV_VAR: &str = "THETA_BOUNDS_TOL";
