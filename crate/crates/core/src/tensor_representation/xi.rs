//! The operators `e` and `ξ_{i,j}` on `V` and their orbit sums on `V^{⊗d}`.

use rustc_hash::FxHashMap;

use crate::diagram_tableaux::multi_index::distinct_permutations;
use crate::diagram_tableaux::orbits::{in_j_d, k_to_j, KTriple};
use crate::diagram_tableaux::PartitionDiagram;
use crate::exact_linear::{Scalar, SparseOperator};

use super::space::TensorSpace;
use super::TensorError;

/// The nilpotent `e = Σ e_{L(j), j}` on `V`.
pub fn e_operator(diagram: &PartitionDiagram) -> SparseOperator {
    let n = diagram.boxes();
    SparseOperator::from_triplets(
        n,
        (0..n).filter_map(|j| diagram.left(j).map(|i| (i, j, Scalar::one()))),
    )
}

/// The pairs `(L^s(i), L^s(j))`, `s ≥ 0`, while both exist.
pub fn xi_chain(diagram: &PartitionDiagram, i: usize, j: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(i, j)];
    let (mut a, mut b) = (i, j);
    while let (Some(la), Some(lb)) = (diagram.left(a), diagram.left(b)) {
        out.push((la, lb));
        a = la;
        b = lb;
    }
    out
}

/// Single-box `ξ_{i,j} = e_{i,j} + e_{L(i),L(j)} + ⋯` on `V`.
pub fn xi_single(diagram: &PartitionDiagram, i: usize, j: usize) -> SparseOperator {
    let n = diagram.boxes();
    SparseOperator::from_triplets(
        n,
        xi_chain(diagram, i, j)
            .into_iter()
            .map(|(a, b)| (a, b, Scalar::one())),
    )
}

/// Single-box `ξ` in `(row, row, shift)` form, rows 1-based.
pub fn xi_single_k(diagram: &PartitionDiagram, k: KTriple) -> Option<SparseOperator> {
    let (i, j) = k_to_j(diagram, k)?;
    Some(xi_single(diagram, i, j))
}

/// `ξ_{h,k} = Σ_{(h′,k′) ∼ (h,k)} ξ_{h′₁,k′₁} ⊗ ⋯ ⊗ ξ_{h′_d,k′_d}`.
pub fn xi_operator(
    space: &TensorSpace,
    h: &[usize],
    k: &[usize],
) -> Result<SparseOperator, TensorError> {
    let dg = space.diagram();
    if h.len() != space.d() || !in_j_d(dg, h, k) {
        return Err(TensorError::NotInJ);
    }
    let pairs: Vec<(usize, usize)> = h.iter().copied().zip(k.iter().copied()).collect();
    // Column map of each single-box operator: source box ↦ target box.
    let mut maps: FxHashMap<(usize, usize), FxHashMap<usize, usize>> = FxHashMap::default();
    for p in &pairs {
        maps.entry(*p).or_insert_with(|| {
            xi_chain(dg, p.0, p.1)
                .into_iter()
                .map(|(a, b)| (b, a))
                .collect()
        });
    }
    let arrangements = distinct_permutations(&pairs);
    let mut triplets = Vec::new();
    for m in 0..space.dim() {
        let i = space.multi_index(m);
        'arr: for arr in &arrangements {
            let mut out = Vec::with_capacity(i.len());
            for (t, p) in arr.iter().enumerate() {
                match maps[p].get(&i[t]) {
                    Some(b) => out.push(*b),
                    None => continue 'arr,
                }
            }
            triplets.push((space.index(&out), m, Scalar::one()));
        }
    }
    Ok(SparseOperator::from_triplets(space.dim(), triplets))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::diagram_tableaux::{orbit_reps, OrbitKind, Origin};

    fn op(n: usize, entries: &[(usize, usize)]) -> SparseOperator {
        SparseOperator::from_triplets(
            n,
            entries.iter().map(|(a, b)| (a - 1, b - 1, Scalar::one())),
        )
    }

    #[test]
    fn displayed_operators() {
        let d = PartitionDiagram::new(&[2, 3, 4]).unwrap();
        assert_eq!(
            e_operator(&d),
            op(9, &[(1, 4), (2, 5), (5, 7), (3, 6), (6, 8), (8, 9)])
        );
        assert_eq!(
            xi_single_k(&d, (3, 2, 0)).unwrap(),
            op(9, &[(3, 2), (6, 5), (8, 7)])
        );
        assert_eq!(
            xi_single_k(&d, (2, 3, 1)).unwrap(),
            op(9, &[(2, 6), (5, 8), (7, 9)])
        );
        assert_eq!(xi_single_k(&d, (1, 3, 3)).unwrap(), op(9, &[(1, 9)]));
        let prod = xi_single_k(&d, (3, 2, 0))
            .unwrap()
            .mul(&xi_single_k(&d, (2, 3, 1)).unwrap());
        assert_eq!(prod, xi_single_k(&d, (3, 3, 1)).unwrap());
    }

    #[test]
    fn orbit_sums_commute_with_graded_action() {
        let dg = Arc::new(PartitionDiagram::new(&[1, 2]).unwrap());
        let v = TensorSpace::new(dg.clone(), Origin::zero(2), 2, 1000).unwrap();
        let g = v.graded_action();
        for (h, k) in orbit_reps(&dg, 2, OrbitKind::J).j_reps {
            let xi = xi_operator(&v, &h, &k).unwrap();
            for a in g.x.iter().chain(&g.s) {
                assert_eq!(xi.mul(a), a.mul(&xi));
            }
        }
        assert!(xi_operator(&v, &[2, 0], &[0, 0]).is_err());
    }
}
