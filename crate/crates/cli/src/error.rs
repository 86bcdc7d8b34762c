//! Error type of the command-line front end, carrying the process exit code.
//!
//! # Conventions
//!
//! Exit codes are a stable contract:
//!
//! * `0` — success: the computation ran and every asserted property held.
//! * `1` — assertion failure: the computation ran, but an asserted property
//!   is false (a theorem conclusion, a scenario check, a campaign, or a
//!   report re-verification).
//! * `2` — parse error: the input could not be read or parsed; messages
//!   carry a position where the underlying parser provides one.
//! * `3` — semantic error: the input parsed but violates an invariant
//!   (unknown curve names, empty divisor, non-squarefree equations, shared
//!   components, missing blocks, out-of-range parameters).
//!
//! # Invariants
//!
//! Library errors map to exactly one exit class; polynomial and document
//! syntax errors are the only sources of exit code 2.

use std::fmt;

use germlct::germ::GermError;
use germlct::scenarios::ScenarioError;
use germlct::{ConfigError, InvariantError, TheoremError};

#[derive(Debug)]
pub enum CliError {
    /// An asserted property evaluated to false (exit 1).
    Assertion(String),
    /// Input could not be read or parsed (exit 2).
    Parse(String),
    /// Input parsed but violates an invariant (exit 3).
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Assertion(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Assertion(msg) => write!(f, "assertion failure: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Semantic(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GermError> for CliError {
    fn from(e: GermError) -> Self {
        match e {
            GermError::Parse(pe) => CliError::Parse(pe.to_string()),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Toml(msg) => CliError::Parse(msg),
            ConfigError::BadRational { .. } => CliError::Parse(e.to_string()),
            ConfigError::Germ(ge) => ge.into(),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Germ(ge) => ge.into(),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        CliError::Semantic(e.to_string())
    }
}
