//! Instance configuration, verification suites and versioned JSON reports
//! behind the `swl` command.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Caps, Instance, InstanceConfig};
pub use report::{SkippedSuite, SuiteReport, SCHEMA_VERSION};
pub use suites::{run, RunOptions, SUITES};

/// Errors surfaced to the command line, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{what}: size {required} exceeds the cap {cap}")]
    CapExceeded {
        what: String,
        required: u128,
        cap: u128,
    },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    /// `2` configuration, `3` cap exceeded, `4` unknown suite.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Precondition(_) => 2,
            CliError::CapExceeded { .. } => 3,
            CliError::UnknownSuite(_) => 4,
        }
    }
}

impl From<crate::diagram_tableaux::DiagramError> for CliError {
    fn from(e: crate::diagram_tableaux::DiagramError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<crate::hecke_algebra::HeckeError> for CliError {
    fn from(e: crate::hecke_algebra::HeckeError) -> Self {
        use crate::hecke_algebra::HeckeError;
        match e {
            HeckeError::CapExceeded { required, cap } => CliError::CapExceeded {
                what: "Hecke algebra".into(),
                required,
                cap,
            },
            HeckeError::Diagram(d) => d.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<crate::tensor_representation::TensorError> for CliError {
    fn from(e: crate::tensor_representation::TensorError) -> Self {
        use crate::tensor_representation::TensorError;
        match e {
            TensorError::CapExceeded { required, cap } => CliError::CapExceeded {
                what: "tensor space".into(),
                required,
                cap,
            },
            TensorError::Diagram(d) => d.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<crate::schur_algebra::SchurError> for CliError {
    fn from(e: crate::schur_algebra::SchurError) -> Self {
        use crate::schur_algebra::SchurError;
        match e {
            SchurError::CapExceeded { required, cap } => CliError::CapExceeded {
                what: "Schur algebra".into(),
                required,
                cap,
            },
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<crate::rep_modules::RepError> for CliError {
    fn from(e: crate::rep_modules::RepError) -> Self {
        use crate::rep_modules::RepError;
        match e {
            RepError::Diagram(d) => d.into(),
            RepError::Hecke(h) => h.into(),
            RepError::Tensor(t) => t.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}
