//! The elements `w_A` and `x_A` attached to a tableau with natural entries.

use std::sync::Arc;

use crate::diagram_tableaux::{Origin, Tableau};

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::params::CyclotomicParams;
use super::perm::young_subgroup;
use super::HeckeError;

/// `w_A`, `x_A` and the algebra they live in.
#[derive(Clone, Debug)]
pub struct SpecialElements {
    pub w_a: HeckeElement,
    pub x_a: HeckeElement,
    pub commute: bool,
}

/// `w_A = Σ_{w ∈ S_{a₁}×⋯×S_{a_N}} w` and
/// `x_A = Π_i Π_{j=1}^{a_i} Π_{k=col(i)+1}^{l} (x_{a₁+⋯+a_{i−1}+j} − Q_k)`,
/// in `H_d(Λ)` with `d = Σ a_i`.
pub fn special_elements(a: &Tableau, c: &Origin) -> Result<SpecialElements, HeckeError> {
    let counts = a.counts()?;
    let diagram = a.diagram();
    let d: usize = counts.iter().sum();
    let roots = c.roots(diagram);
    let alg: Arc<HeckeAlgebra> = HeckeAlgebra::new(CyclotomicParams::cyclotomic(d, roots.clone()));
    let mut w_a = alg.zero();
    for w in young_subgroup(&counts) {
        w_a = w_a.add(&alg.perm(&w))?;
    }
    let mut x_a = alg.one();
    let mut pos = 0;
    for (i, &ai) in counts.iter().enumerate() {
        for _ in 0..ai {
            pos += 1;
            for q in &roots[diagram.col(i)..] {
                let factor = alg.x(pos)?.add_scalar(&-q);
                x_a = x_a.mul(&factor)?;
            }
        }
    }
    let commute = x_a.mul(&w_a)? == w_a.mul(&x_a)?;
    Ok(SpecialElements { w_a, x_a, commute })
}
