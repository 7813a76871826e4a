//! Tensor space `V_c^{⊗d}` as a right module over `H_d(Λ)`.

pub mod rows;
pub mod space;
pub mod xi;

pub use rows::{pad_for_faithfulness, row_removal, RowRemoval};
pub use space::{GeneratorImages, TensorSpace};
pub use xi::{e_operator, xi_chain, xi_operator, xi_single, xi_single_k};

/// Errors raised by tensor space constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("size {required} exceeds the cap {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("generator {name} out of range for d = {d}")]
    OutOfRange { name: String, d: usize },
    #[error("element parameters do not match the tensor space")]
    ParamsMismatch,
    #[error("index pair is not in J^d")]
    NotInJ,
    #[error(transparent)]
    Diagram(#[from] crate::diagram_tableaux::DiagramError),
}
