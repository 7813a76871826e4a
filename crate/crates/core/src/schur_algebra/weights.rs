//! Weight idempotents `e_A`, `A ∈ Idem^d(λ)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram_tableaux::multi_index::row_class;
use crate::diagram_tableaux::{idem_d, MultiIndex, PartitionDiagram, Tableau};
use crate::exact_linear::{Scalar, SparseOperator};
use crate::tensor_representation::TensorSpace;

/// `e_A = Σ_{row(i) ∼ row(i(A))} e_{i,i}`.
#[derive(Clone, Debug, Serialize)]
pub struct WeightIdempotent {
    pub tableau: Vec<i64>,
    /// The sorted rows of `i(A)`.
    pub rows: Vec<usize>,
    pub trace: usize,
    #[serde(skip)]
    pub operator: SparseOperator,
}

/// The sorted row multiset of `i(A)` for an idempotent tableau.
pub fn idempotent_rows(a: &Tableau) -> Vec<usize> {
    let t = a
        .index_tuple()
        .expect("idempotent tableaux have natural entries");
    row_class(a.diagram(), &t)
}

/// Basis indices of the tensor space grouped by sorted row multiset.
pub fn row_classes(space: &TensorSpace) -> BTreeMap<Vec<usize>, Vec<usize>> {
    let mut out: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (m, i) in space.basis().enumerate() {
        out.entry(row_class(space.diagram(), &i))
            .or_default()
            .push(m);
    }
    out
}

/// `i(A)` for the idempotent tableau with the given sorted rows.
pub fn weight_vector(diagram: &PartitionDiagram, rows: &[usize]) -> MultiIndex {
    rows.iter().map(|r| diagram.row_end(*r)).collect()
}

/// All weight idempotents, in the order of `Idem^d(λ)`.
pub fn weight_idempotents(space: &TensorSpace) -> Vec<WeightIdempotent> {
    let classes = row_classes(space);
    idem_d(space.diagram_arc(), space.d())
        .into_iter()
        .map(|a| {
            let rows = idempotent_rows(&a);
            let members = classes.get(&rows).cloned().unwrap_or_default();
            let operator = SparseOperator::from_triplets(
                space.dim(),
                members.iter().map(|m| (*m, *m, Scalar::one())),
            );
            WeightIdempotent {
                tableau: a.int_entries().expect("integral"),
                rows,
                trace: members.len(),
                operator,
            }
        })
        .collect()
}
