//! The higher level Schur algebra `W_d(λ, c)` and its graded model.

pub mod centralizer;
pub mod graded;
pub mod weights;
pub mod xi_basis;

pub use centralizer::{
    double_centralizer_filtered, double_centralizer_graded, generating_vectors,
    special_tableau_iso_check, CentralizerOptions, CentralizerReport, SpecialTableauReport,
};
pub use graded::{graded_structure_constants, GradedStructureConstants};
pub use weights::{row_classes, weight_idempotents, weight_vector, WeightIdempotent};
pub use xi_basis::{
    schur_dimension, xi_basis, xi_basis_element, xi_basis_report, XiBasisReport, XiElement,
};

/// Errors raised by Schur algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("size {required} exceeds the cap {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("index pair is not in J^d")]
    NotInJ,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
