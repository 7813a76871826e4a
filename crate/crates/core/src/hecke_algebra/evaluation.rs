//! Eigenvalues of `x_k` on evaluation modules `ev*_a(S(μ))`.

use serde::Serialize;

use crate::diagram_tableaux::{standard_young_tableaux, YoungTableau};
use crate::exact_linear::Scalar;

/// The `x_k` eigenvalues `a + content_T(k)` on the seminormal vector `v_T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationEntry {
    pub tableau: Vec<Vec<usize>>,
    pub eigenvalues: Vec<Scalar>,
}

/// One entry per standard Young tableau of shape `mu`, in tableau order.
pub fn evaluation_contents(a: &Scalar, mu: &[usize]) -> Vec<EvaluationEntry> {
    standard_young_tableaux(mu)
        .iter()
        .map(|t: &YoungTableau| EvaluationEntry {
            tableau: t.rows().to_vec(),
            eigenvalues: (0..t.size())
                .map(|k| a + &Scalar::from_int(t.content(k)))
                .collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        let a = Scalar::new(1, 2);
        let e = evaluation_contents(&a, &[1]);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].eigenvalues, vec![a]);
        let e = evaluation_contents(&Scalar::zero(), &[2]);
        assert_eq!(e[0].eigenvalues[1], Scalar::from_int(1));
        let e = evaluation_contents(&Scalar::zero(), &[1, 1]);
        assert_eq!(e[0].eigenvalues[1], Scalar::from_int(-1));
    }
}
