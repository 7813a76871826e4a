//! Padding for faithfulness and the row removal comparison.

use std::sync::Arc;

use crate::diagram_tableaux::{Origin, PartitionDiagram};
use crate::exact_linear::{operator_rank, Scalar, SparseOperator, SparseVec};
use crate::hecke_algebra::HeckeAlgebra;

use super::space::TensorSpace;
use super::TensorError;

/// `λ` with `d` extra parts equal to `l`. The roots `Q` are unchanged.
pub fn pad_for_faithfulness(diagram: &PartitionDiagram, d: usize) -> PartitionDiagram {
    let padded = diagram.padded(d);
    debug_assert_eq!(
        Origin::zero(diagram.level()).roots(diagram),
        Origin::zero(padded.level()).roots(&padded)
    );
    padded
}

/// Comparison data between `V̄_c^{⊗d}` (first `n̄` rows) and `e·V_c^{⊗d}`.
#[derive(Debug)]
pub struct RowRemoval {
    pub sub_space: TensorSpace,
    /// Basis index in the big space of `α(v_i) = v_î`, per small basis index.
    pub embedding: Vec<usize>,
    /// `e = Σ e_{î,î}`.
    pub idempotent: SparseOperator,
    /// `e` commutes with every generator image of the big space.
    pub equivariant: bool,
    /// `α` intertwines every generator image.
    pub intertwines: bool,
    /// Ranks of the image of `H_d(Λ)` on the small and big spaces.
    pub rank_sub: Option<usize>,
    pub rank_full: Option<usize>,
}

impl RowRemoval {
    /// `rank_sub ≤ rank_full`, when the ranks were computed.
    pub fn surjective_consistent(&self) -> Option<bool> {
        Some(self.rank_sub? <= self.rank_full?)
    }
}

/// Builds `λ̄ = (p₁, …, p_n̄)`, the box map and the checks. The image ranks are
/// computed only when `l^d·d!` is at most `rank_cap`.
pub fn row_removal(
    space: &TensorSpace,
    n_bar: usize,
    rank_cap: u128,
) -> Result<RowRemoval, TensorError> {
    let big = space.diagram();
    let small = Arc::new(big.truncated(n_bar)?);
    let origin = space.origin().prefix(small.level());
    let sub_space = TensorSpace::new(small.clone(), origin, space.d(), usize::MAX)?;
    let box_map: Vec<usize> = (0..small.boxes())
        .map(|b| {
            big.box_at(small.row(b), small.col(b))
                .expect("rows are kept")
        })
        .collect();
    let embedding: Vec<usize> = sub_space
        .basis()
        .map(|i| space.index(&i.iter().map(|b| box_map[*b]).collect::<Vec<_>>()))
        .collect();
    let idempotent = SparseOperator::from_triplets(
        space.dim(),
        embedding.iter().map(|m| (*m, *m, Scalar::one())),
    );
    let big_g = space.generator_images();
    let small_g = sub_space.generator_images();
    let equivariant = big_g
        .x
        .iter()
        .chain(&big_g.s)
        .all(|g| g.commutator(&idempotent).is_zero());
    let map_vec = |v: &SparseVec<Scalar>| {
        SparseVec::from_pairs(
            v.entries()
                .iter()
                .map(|(k, c)| (embedding[*k], c.clone()))
                .collect(),
        )
    };
    let intertwines = big_g
        .x
        .iter()
        .chain(&big_g.s)
        .zip(small_g.x.iter().chain(&small_g.s))
        .all(|(gb, gs)| {
            (0..sub_space.dim()).all(|m| gb.column_vec(embedding[m]) == map_vec(&gs.column_vec(m)))
        });
    let params = space.params();
    let (rank_sub, rank_full) = match params.dimension() {
        Some(n) if n <= rank_cap => {
            let alg = HeckeAlgebra::new(params);
            let basis = alg.basis().expect("cyclotomic");
            let full: Vec<SparseOperator> = basis.iter().map(|m| space.psi_monomial(m)).collect();
            let sub: Vec<SparseOperator> =
                basis.iter().map(|m| sub_space.psi_monomial(m)).collect();
            (Some(operator_rank(&sub)), Some(operator_rank(&full)))
        }
        _ => (None, None),
    };
    Ok(RowRemoval {
        sub_space,
        embedding,
        idempotent,
        equivariant,
        intertwines,
        rank_sub,
        rank_full,
    })
}
