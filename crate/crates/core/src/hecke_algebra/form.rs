//! The symmetrizing form `τ̂` and its Gram matrix.

use std::sync::Arc;

use crate::exact_linear::{Echelon, Scalar, SparseOperator, SparseVec};

use super::algebra::{HeckeAlgebra, HeckeElement, HeckeMonomial};
use super::params::CyclotomicParams;
use super::perm::Perm;
use super::HeckeError;

/// The coefficient of `x₁^{l−1} ⋯ x_d^{l−1}` (identity permutation).
pub fn symmetrizing_form(a: &HeckeElement) -> Result<Scalar, HeckeError> {
    let l = a.algebra().level().ok_or(HeckeError::Affine)?;
    let d = a.algebra().d();
    let top = HeckeMonomial::new(vec![(l - 1) as u8; d], Perm::identity(d));
    Ok(a.coefficient(&top))
}

/// `G[m, m′] = τ̂(m·m′)` over the normal-form basis, with its exact rank.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub size: usize,
    pub matrix: SparseOperator,
    pub rank: usize,
    pub nonsingular: bool,
}

/// The Gram matrix of `τ̂`; fails if `l^d·d!` exceeds `cap`.
pub fn gram_matrix(params: &CyclotomicParams, cap: u128) -> Result<GramMatrix, HeckeError> {
    let required = params.dimension().ok_or(HeckeError::Affine)?;
    if required > cap {
        return Err(HeckeError::CapExceeded { required, cap });
    }
    let alg: Arc<HeckeAlgebra> = HeckeAlgebra::new(params.clone());
    let basis = alg.basis().expect("cyclotomic");
    let l = alg.level().expect("cyclotomic");
    let d = alg.d();
    let top = HeckeMonomial::new(vec![(l - 1) as u8; d], Perm::identity(d));
    let n = basis.len();
    let mut triplets = Vec::new();
    let mut echelon: Echelon<Scalar> = Echelon::new();
    for (i, a) in basis.iter().enumerate() {
        let mut row = Vec::new();
        for (j, b) in basis.iter().enumerate() {
            let prod = alg.multiply_monomials(a, b);
            if let Some((_, c)) = prod.iter().find(|(m, _)| *m == top) {
                triplets.push((i, j, c.clone()));
                row.push((j, c.clone()));
            }
        }
        echelon.push(&SparseVec::from_pairs(row));
    }
    let rank = echelon.rank();
    Ok(GramMatrix {
        size: n,
        matrix: SparseOperator::from_triplets(n, triplets),
        rank,
        nonsingular: rank == n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn top_monomial_and_identity() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(2, vec![int(0), int(-1)]));
        let top = h.x(1).unwrap().mul(&h.x(2).unwrap()).unwrap();
        assert_eq!(symmetrizing_form(&top).unwrap(), int(1));
        assert_eq!(symmetrizing_form(&h.one()).unwrap(), int(0));
    }

    #[test]
    fn trace_instance() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(2, vec![int(0), int(-1)]));
        let s = h.s(1).unwrap();
        let xs = h.x(1).unwrap().mul(&s).unwrap();
        let a = symmetrizing_form(&s.mul(&xs).unwrap()).unwrap();
        let b = symmetrizing_form(&xs.mul(&s).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, int(0));
    }

    #[test]
    fn small_gram_matrices() {
        let g = gram_matrix(&CyclotomicParams::cyclotomic(2, vec![int(0)]), 1000).unwrap();
        assert_eq!(g.size, 2);
        assert!(g.nonsingular);
        assert_eq!(g.matrix, SparseOperator::identity(2));
        let g = gram_matrix(
            &CyclotomicParams::cyclotomic(1, vec![int(0), int(-1)]),
            1000,
        )
        .unwrap();
        assert_eq!(g.matrix.get(0, 0), int(0));
        assert_eq!(g.matrix.get(0, 1), int(1));
        assert_eq!(g.matrix.get(1, 1), int(-1));
        assert!(g.nonsingular);
        let g = gram_matrix(
            &CyclotomicParams::cyclotomic(2, vec![int(0), int(-1)]),
            1000,
        )
        .unwrap();
        assert_eq!(g.size, 8);
        assert!(g.nonsingular);
        assert!(matches!(
            gram_matrix(&CyclotomicParams::cyclotomic(4, vec![int(0), int(1)]), 100),
            Err(HeckeError::CapExceeded {
                required: 384,
                cap: 100
            })
        ));
    }
}
