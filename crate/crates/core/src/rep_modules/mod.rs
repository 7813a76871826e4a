//! Divided-power spaces, permutation modules, Specht modules and the
//! dimension identities relating them.

pub mod dipper_mathas;
pub mod divided;
pub mod permutation;
pub mod specht;

pub use dipper_mathas::{dipper_mathas_dim_check, split_point, DipperMathasReport};
pub use divided::{
    divided_power_dimension, divided_power_space, lemma_is_check, lemma_s_check, weyl_dim,
    DividedPowerSpace, LemmaIsReport, LemmaSReport,
};
pub use permutation::{
    permutation_formula, permutation_module, weight_space_report, weight_space_vs_permutation,
    PermutationModule, PermutationWorkspace, WeightSpaceReport,
};
pub use specht::{
    relation_suite, specht_dimension, specht_flag_dim_check, specht_flag_from_modules,
    specht_module, RelationCheck, SpechtFlagReport, SpechtFlagRow, SpechtModule,
};

/// Errors raised by module constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("tableau is not in {0}")]
    BadTableau(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Diagram(#[from] crate::diagram_tableaux::DiagramError),
    #[error(transparent)]
    Hecke(#[from] crate::hecke_algebra::HeckeError),
    #[error(transparent)]
    Tensor(#[from] crate::tensor_representation::TensorError),
}
