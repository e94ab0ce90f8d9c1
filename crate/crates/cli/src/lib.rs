//! Library side of the divforge command line: expression parsing, ring
//! selection and the verb handlers. The binary in `main.rs` is a thin
//! wrapper that maps errors to exit codes.

pub mod commands;
pub mod expr;
pub mod ringspec;

use std::fmt;

/// Errors carrying their process exit code: 1 for domain errors, 2 for
/// usage errors, 3 for resource limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Resource(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<expr::ExprError> for CliError {
    fn from(e: expr::ExprError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<divforge_core::quadratic::QuadError> for CliError {
    fn from(e: divforge_core::quadratic::QuadError) -> Self {
        match e {
            divforge_core::quadratic::QuadError::FactorBound { .. } => {
                CliError::Resource(e.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<divforge_core::casestudy::CaseError> for CliError {
    fn from(e: divforge_core::casestudy::CaseError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<divforge_core::refine::RefineError> for CliError {
    fn from(e: divforge_core::refine::RefineError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<divforge_core::divisor::DivisorError> for CliError {
    fn from(e: divforge_core::divisor::DivisorError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<divforge_core::rings::PrimeFieldError> for CliError {
    fn from(e: divforge_core::rings::PrimeFieldError) -> Self {
        CliError::Domain(e.to_string())
    }
}
