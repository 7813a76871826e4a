//! Parameters of the degenerate cyclotomic Hecke algebra `H_d(Λ)`.

use serde::{Deserialize, Serialize};

use crate::diagram_tableaux::{Origin, PartitionDiagram};
use crate::exact_linear::{Polynomial, Scalar};

/// `d`, together with the roots `Q₁, …, Q_l` of the cyclotomic polynomial
/// `Π (x₁ − Q_i)`; an empty root list means the affine algebra `H_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicParams {
    d: usize,
    roots: Option<Vec<Scalar>>,
}

impl CyclotomicParams {
    /// The quotient of `H_d` by `Π (x₁ − Q_i)`; needs at least one root.
    pub fn cyclotomic(d: usize, roots: Vec<Scalar>) -> Self {
        assert!(!roots.is_empty(), "level must be at least one");
        CyclotomicParams {
            d,
            roots: Some(roots),
        }
    }

    /// The degenerate affine Hecke algebra `H_d` (no cyclotomic relation).
    pub fn affine(d: usize) -> Self {
        CyclotomicParams { d, roots: None }
    }

    /// Roots `Q_j = c_j + q_j − n` determined by a diagram and origin.
    pub fn from_diagram(diagram: &PartitionDiagram, origin: &Origin, d: usize) -> Self {
        Self::cyclotomic(d, origin.roots(diagram))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The level `l`, or `None` for the affine algebra.
    pub fn level(&self) -> Option<usize> {
        self.roots.as_ref().map(|r| r.len())
    }

    pub fn roots(&self) -> Option<&[Scalar]> {
        self.roots.as_deref()
    }

    pub fn is_affine(&self) -> bool {
        self.roots.is_none()
    }

    /// `Π (x − Q_i)`.
    pub fn cyclotomic_polynomial(&self) -> Option<Polynomial> {
        self.roots.as_ref().map(|r| Polynomial::from_roots(r))
    }

    /// `l^d · d!`, the dimension of the cyclotomic quotient.
    pub fn dimension(&self) -> Option<u128> {
        let l = self.level()? as u128;
        Some(l.pow(self.d as u32) * (1..=self.d as u128).product::<u128>())
    }

    /// The same roots for a different `d`.
    pub fn with_d(&self, d: usize) -> Self {
        CyclotomicParams {
            d,
            roots: self.roots.clone(),
        }
    }

    /// The root multiset, sorted, for comparisons.
    pub fn sorted_roots(&self) -> Option<Vec<Scalar>> {
        self.roots.as_ref().map(|r| {
            let mut v = r.clone();
            v.sort();
            v
        })
    }
}
