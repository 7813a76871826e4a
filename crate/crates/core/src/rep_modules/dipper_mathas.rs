//! The dimension identity for `H_d(λ, c)` when `c` splits into two parts with
//! no integral differences between them.

use std::sync::Arc;

use serde::Serialize;

use crate::diagram_tableaux::multi_index::binomial;
use crate::diagram_tableaux::{Origin, PartitionDiagram};
use crate::schur_algebra::xi_basis;
use crate::tensor_representation::TensorSpace;

use super::permutation::PermutationWorkspace;
use super::RepError;

/// The first `l'` with `c_i − c_j ∉ ℤ` for all `i ≤ l' < j`, if any.
pub fn split_point(c: &Origin) -> Option<usize> {
    let v = c.values();
    (1..v.len()).find(|&s| {
        v[..s]
            .iter()
            .all(|a| v[s..].iter().all(|b| !(a - b).is_integer()))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DipperMathasTerm {
    pub d_left: usize,
    pub dim_left: usize,
    pub dim_right: usize,
}

/// `dim H_d(λ, c) = Σ_{d'+d''=d} binom(d, d')²·dim H_{d'}(λ', c')·dim H_{d''}(λ'', c'')`.
#[derive(Clone, Debug, Serialize)]
pub struct DipperMathasReport {
    pub split: usize,
    pub left_parts: Vec<usize>,
    pub right_parts: Vec<usize>,
    pub full_dim: usize,
    pub terms: Vec<DipperMathasTerm>,
    pub sum: u128,
    pub pass: bool,
}

/// `dim Ψ(H_d(Λ))` on `V_c^{⊗d}`; an empty diagram gives `V = 0`.
fn image_dim(
    parts: &[usize],
    c: &Origin,
    d: usize,
    cap: usize,
    exact_limit: usize,
) -> Result<usize, RepError> {
    if parts.is_empty() {
        return Ok(usize::from(d == 0));
    }
    let dg = Arc::new(PartitionDiagram::new(parts)?);
    let space = TensorSpace::new(dg, c.clone(), d, cap)?;
    let basis = xi_basis(&space);
    PermutationWorkspace::new(&space, &basis, exact_limit)?.hecke_image_dim()
}

pub fn dipper_mathas_dim_check(
    diagram: &PartitionDiagram,
    c: &Origin,
    d: usize,
    cap: usize,
    exact_limit: usize,
) -> Result<DipperMathasReport, RepError> {
    let split = split_point(c)
        .ok_or_else(|| RepError::Precondition("the origin has no non-integral split".into()))?;
    let left_parts: Vec<usize> = diagram.parts().iter().map(|p| (*p).min(split)).collect();
    let right_parts: Vec<usize> = diagram
        .parts()
        .iter()
        .filter(|p| **p > split)
        .map(|p| p - split)
        .collect();
    let (left_c, right_c) = (c.prefix(split), c.suffix(split));
    let full_dim = image_dim(diagram.parts(), c, d, cap, exact_limit)?;
    let mut terms = Vec::new();
    let mut sum = 0u128;
    for d_left in 0..=d {
        let dim_left = image_dim(&left_parts, &left_c, d_left, cap, exact_limit)?;
        let dim_right = image_dim(&right_parts, &right_c, d - d_left, cap, exact_limit)?;
        let b = binomial(d as u64, d_left as u64);
        sum += b * b * dim_left as u128 * dim_right as u128;
        terms.push(DipperMathasTerm {
            d_left,
            dim_left,
            dim_right,
        });
    }
    Ok(DipperMathasReport {
        split,
        left_parts,
        right_parts,
        full_dim,
        terms,
        sum,
        pass: full_dim as u128 == sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Scalar;

    #[test]
    fn split_points() {
        let half = Scalar::new(1, 2);
        assert_eq!(
            split_point(&Origin::new(vec![Scalar::zero(), half.clone()]).unwrap()),
            Some(1)
        );
        assert_eq!(split_point(&Origin::zero(2)), None);
        let c = Origin::new(vec![Scalar::zero(), Scalar::zero(), half.clone()]).unwrap();
        assert_eq!(split_point(&c), Some(2));
    }

    #[test]
    fn identity_small() {
        let half = Scalar::new(1, 2);
        for (parts, d) in [
            (&[2, 2][..], 2),
            (&[1, 2], 2),
            (&[1, 2], 3),
            (&[1, 1, 2], 2),
        ] {
            let dg = PartitionDiagram::new(parts).unwrap();
            let c = Origin::for_diagram(vec![Scalar::zero(), half.clone()], &dg).unwrap();
            let r = dipper_mathas_dim_check(&dg, &c, d, 10_000, 200).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let dg = PartitionDiagram::new(&[2, 3, 4]).unwrap();
        let c = Origin::new(vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), half]).unwrap();
        let r = dipper_mathas_dim_check(&dg, &c, 2, 10_000, 200).unwrap();
        assert_eq!((r.split, r.right_parts.clone()), (3, vec![1]));
        assert!(r.pass, "{r:?}");
    }
}
