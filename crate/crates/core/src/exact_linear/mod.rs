//! Exact scalars, sparse operators and the linear-algebra kernels built on them.

pub mod echelon;
pub mod field;
pub mod poly;
pub mod scalar;
pub mod solve;
pub mod sparse;

pub use echelon::{operator_rank, rank, span, Echelon, OperatorSpan};
pub use field::{Field, Fp, PRIME};
pub use poly::{minimal_polynomial, Polynomial};
pub use scalar::{ParseScalarError, Scalar};
pub use solve::{commutant_basis, commutant_dim, SparseSolver};
pub use sparse::{SparseMatrix, SparseOperator, SparseVec, Triplet};

/// Errors raised by the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
}
