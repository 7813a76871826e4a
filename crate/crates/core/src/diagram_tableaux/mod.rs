//! Combinatorics of the partition diagram, multi-indices and tableaux.

pub mod bruhat;
pub mod diagram;
pub mod kostka;
pub mod multi_index;
pub mod orbits;
pub mod tableau;
pub mod young;

pub use bruhat::{bruhat_leq, BruhatOrder};
pub use diagram::{Origin, PartitionDiagram};
pub use kostka::{kostka, kostka_with, KostkaConvention};
pub use multi_index::{MultiIndex, TensorIndexer};
pub use orbits::{orbit_reps, OrbitKind, OrbitTable};
pub use tableau::{col_c_d, idem_d, special_tableaux, std_c_d, tab_d, Classification, Tableau};
pub use young::{hook_length_dim, partitions, standard_young_tableaux, YoungTableau};

/// Errors raised by diagram and tableau constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("empty diagram")]
    EmptyDiagram,
    #[error("origin has {found} entries, expected {expected}")]
    OriginLength { expected: usize, found: usize },
    #[error("origin entries c_{i} and c_{j} differ by a nonzero integer")]
    BadOrigin { i: usize, j: usize },
    #[error("tableau has {found} entries, expected {expected}")]
    EntryCount { expected: usize, found: usize },
    #[error("entry {0} is not a nonnegative integer")]
    NotNatural(String),
    #[error("cannot keep {requested} of {available} rows")]
    BadRowCount { requested: usize, available: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
