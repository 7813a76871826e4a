//! The degenerate affine Hecke algebra `H_d` and its cyclotomic quotients.

pub mod algebra;
pub mod evaluation;
pub mod form;
pub mod params;
pub mod perm;
pub mod special;
pub mod text;

pub use algebra::{divided_difference, Exps, HeckeAlgebra, HeckeElement, HeckeMonomial};
pub use evaluation::{evaluation_contents, EvaluationEntry};
pub use form::{gram_matrix, symmetrizing_form, GramMatrix};
pub use params::CyclotomicParams;
pub use perm::{parabolic_coset_reps, young_subgroup, Perm};
pub use special::{special_elements, SpecialElements};
pub use text::{format_element, parse_element};

/// Errors raised by Hecke algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("elements belong to algebras with different parameters")]
    ParamsMismatch,
    #[error("generator {name} out of range for d = {d}")]
    GeneratorOutOfRange { name: String, d: usize },
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error("size {required} exceeds the cap {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("composition sums to {found}, expected {expected}")]
    Composition { expected: usize, found: usize },
    #[error("operation needs a cyclotomic quotient")]
    Affine,
    #[error(transparent)]
    Diagram(#[from] crate::diagram_tableaux::DiagramError),
}
