//! Permutation modules `M(A, c) = H_d(λ, c)·x_A w_A`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::diagram_tableaux::multi_index::factorial;
use crate::diagram_tableaux::Tableau;
use crate::exact_linear::{Echelon, Field, Fp, Scalar, SparseOperator, SparseVec};
use crate::hecke_algebra::{
    parabolic_coset_reps, special_elements, HeckeAlgebra, HeckeElement, HeckeMonomial,
};
use crate::schur_algebra::{generating_vectors, row_classes, XiElement};
use crate::tensor_representation::TensorSpace;

use super::RepError;

/// Data shared by all permutation modules over one tensor space.
///
/// `H_d(λ, c)` is realized as `Ψ(H_d(Λ))`; an element is recorded by its
/// values on a set of vectors `u` with `W_d·{u} = V`, on which `Ψ(H)` acts
/// faithfully.
pub struct PermutationWorkspace<'a> {
    space: &'a TensorSpace,
    algebra: Arc<HeckeAlgebra>,
    monomials: Vec<HeckeMonomial>,
    vectors: Vec<usize>,
    /// `Ψ(m)·v_u` for every monomial `m` and generating vector `u`.
    images: Vec<Vec<SparseVec<Scalar>>>,
    exact: bool,
}

impl<'a> PermutationWorkspace<'a> {
    /// Spaces of dimension above `exact_limit` use ranks modulo `p`.
    pub fn new(
        space: &'a TensorSpace,
        basis: &[XiElement],
        exact_limit: usize,
    ) -> Result<Self, RepError> {
        let algebra = HeckeAlgebra::new(space.params());
        let monomials = algebra
            .basis()
            .ok_or(crate::hecke_algebra::HeckeError::Affine)?;
        let ops: Vec<SparseOperator> = basis.iter().map(|x| x.operator.clone()).collect();
        let vectors = generating_vectors(space, &ops);
        let gens = space.generator_images();
        let mut perms: HashMap<crate::hecke_algebra::Perm, SparseOperator> = HashMap::new();
        let images = monomials
            .iter()
            .map(|m| {
                let w = perms
                    .entry(m.perm.clone())
                    .or_insert_with(|| space.act_perm(&m.perm))
                    .clone();
                vectors
                    .iter()
                    .map(|u| {
                        let mut v = SparseVec::unit(*u);
                        for (k, e) in m.exps.iter().enumerate() {
                            for _ in 0..*e {
                                v = gens.x[k].apply(&v);
                            }
                        }
                        w.apply(&v)
                    })
                    .collect()
            })
            .collect();
        Ok(PermutationWorkspace {
            space,
            algebra,
            monomials,
            vectors,
            images,
            exact: space.dim() <= exact_limit,
        })
    }

    pub fn space(&self) -> &TensorSpace {
        self.space
    }

    pub fn algebra(&self) -> &Arc<HeckeAlgebra> {
        &self.algebra
    }

    pub fn generating_vectors(&self) -> &[usize] {
        &self.vectors
    }

    /// `dim Ψ(H·y)`.
    pub fn left_ideal_dim(&self, y: &HeckeElement) -> Result<usize, RepError> {
        let psi_y = self.space.psi(y)?;
        let dim = self.space.dim();
        let rows: Vec<SparseVec<Scalar>> = self
            .images
            .iter()
            .map(|per_u| {
                let mut pairs = Vec::new();
                for (pos, v) in per_u.iter().enumerate() {
                    for (r, c) in psi_y.apply(v).into_entries() {
                        pairs.push((pos * dim + r, c));
                    }
                }
                SparseVec::from_pairs(pairs)
            })
            .collect();
        Ok(if self.exact {
            rank_in::<Scalar>(&rows, |v| Some(v.clone()))
        } else {
            rank_in::<Fp>(&rows, to_fp)
        })
    }

    /// `dim Ψ(H_d(Λ))`.
    pub fn hecke_image_dim(&self) -> Result<usize, RepError> {
        self.left_ideal_dim(&self.algebra.one())
    }
}

fn to_fp(v: &SparseVec<Scalar>) -> Option<SparseVec<Fp>> {
    v.map_field(Fp::from_scalar)
}

fn rank_in<F: Field>(
    rows: &[SparseVec<Scalar>],
    conv: impl Fn(&SparseVec<Scalar>) -> Option<SparseVec<F>>,
) -> usize {
    let mut e: Echelon<F> = Echelon::new();
    for r in rows {
        e.push(&conv(r).expect("denominators prime to p"));
    }
    e.rank()
}

/// Coordinates of an element in the monomial basis.
fn coordinates(index: &HashMap<HeckeMonomial, usize>, a: &HeckeElement) -> SparseVec<Scalar> {
    SparseVec::from_pairs(
        a.terms()
            .iter()
            .map(|(m, c)| (index[m], c.clone()))
            .collect(),
    )
}

/// `M(A, c)` for `A ∈ Tab^d(λ)`.
#[derive(Clone, Debug, Serialize)]
pub struct PermutationModule {
    pub tableau: Vec<Scalar>,
    /// `dim H_d(λ, c)·x_A w_A`.
    pub dim: usize,
    /// At least `d` parts of `λ` equal `l`.
    pub faithful: bool,
    /// `d!/(a₁!⋯a_N!)·Π col(i)^{a_i}`.
    pub formula_dim: u128,
    /// Faithful case: the number of vectors `w x^r x_A w_A`, `r_i < n_i`.
    pub basis_size: Option<usize>,
    /// Faithful case: those vectors are independent in `H_d(Λ)`.
    pub basis_independent: Option<bool>,
    /// Faithful case: `dim H_d(Λ)·x_A w_A` computed in the algebra.
    pub algebra_dim: Option<usize>,
    pub x_a_commutes_with_w_a: bool,
    pub pass: bool,
}

/// `d!/(a₁!⋯a_N!)·Π col(i)^{a_i}`.
pub fn permutation_formula(a: &Tableau) -> Result<u128, RepError> {
    let counts = a.counts()?;
    let d: usize = counts.iter().sum();
    let dg = a.diagram();
    let mut n = factorial(d as u64);
    for (i, &ai) in counts.iter().enumerate() {
        n /= factorial(ai as u64);
        n *= (dg.col(i) as u128).pow(ai as u32);
    }
    Ok(n)
}

/// Builds `M(A, c)`; in the faithful case also checks the explicit basis.
pub fn permutation_module(
    ws: &PermutationWorkspace,
    a: &Tableau,
) -> Result<PermutationModule, RepError> {
    let space = ws.space;
    let dg = space.diagram();
    let d = space.d();
    if a.diagram() != dg || !a.in_tab_d(d) {
        return Err(RepError::BadTableau("Tab^d"));
    }
    let special = special_elements(a, space.origin())?;
    let alg = ws.algebra.clone();
    let y = special.x_a.mul(&special.w_a)?;
    let y = alg.from_terms(
        &y.terms()
            .iter()
            .map(|(m, c)| (m.exps.clone(), m.perm.clone(), c.clone()))
            .collect::<Vec<_>>(),
    );
    let dim = ws.left_ideal_dim(&y)?;
    let formula_dim = permutation_formula(a)?;
    let faithful = dg.parts_equal_to_level() >= d;
    let (mut basis_size, mut basis_independent, mut algebra_dim) = (None, None, None);
    if faithful {
        let index: HashMap<HeckeMonomial, usize> = ws
            .monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        let counts = a.counts()?;
        let cols: Vec<usize> = a.index_tuple()?.iter().map(|b| dg.col(*b)).collect();
        let reps = parabolic_coset_reps(d, &counts).expect("composition of d");
        let mut exps: Vec<Vec<u8>> = vec![Vec::new()];
        for n in &cols {
            exps = exps
                .into_iter()
                .flat_map(|e| (0..*n as u8).map(move |r| [e.clone(), vec![r]].concat()))
                .collect();
        }
        let mut vectors = Vec::new();
        for w in &reps {
            for e in &exps {
                let v = alg
                    .perm(w)
                    .mul(&alg.monomial(e, &crate::hecke_algebra::Perm::identity(d)))?
                    .mul(&y)?;
                vectors.push(coordinates(&index, &v));
            }
        }
        basis_size = Some(vectors.len());
        basis_independent = Some(crate::exact_linear::rank(&vectors) == vectors.len());
        let ideal: Vec<SparseVec<Scalar>> = ws
            .monomials
            .iter()
            .map(|m| Ok(coordinates(&index, &alg.basis_element(m).mul(&y)?)))
            .collect::<Result<_, RepError>>()?;
        algebra_dim = Some(crate::exact_linear::rank(&ideal));
    }
    let pass = special.commute
        && (!faithful
            || (basis_independent == Some(true)
                && basis_size.map(|n| n as u128) == Some(formula_dim)
                && algebra_dim.map(|n| n as u128) == Some(formula_dim)
                && dim as u128 == formula_dim));
    Ok(PermutationModule {
        tableau: a.entries().to_vec(),
        dim,
        faithful,
        formula_dim,
        basis_size,
        basis_independent,
        algebra_dim,
        x_a_commutes_with_w_a: special.commute,
        pass,
    })
}

/// `dim e_A V = dim M(A, c)` and `e_A V` is stable under the Hecke action.
#[derive(Clone, Debug, Serialize)]
pub struct WeightSpaceReport {
    pub tableau: Vec<Scalar>,
    pub weight_space_dim: usize,
    pub permutation_dim: usize,
    pub stable: bool,
    pub module: PermutationModule,
    pub pass: bool,
}

pub fn weight_space_vs_permutation(
    ws: &PermutationWorkspace,
    a: &Tableau,
) -> Result<WeightSpaceReport, RepError> {
    weight_space_report(ws.space, a, permutation_module(ws, a)?)
}

/// As [`weight_space_vs_permutation`], reusing an already computed `M(A, c)`.
pub fn weight_space_report(
    space: &TensorSpace,
    a: &Tableau,
    module: PermutationModule,
) -> Result<WeightSpaceReport, RepError> {
    if !a.is_idempotent() {
        return Err(RepError::BadTableau("Idem^d"));
    }
    let rows = crate::schur_algebra::weights::idempotent_rows(a);
    let members = row_classes(space).remove(&rows).unwrap_or_default();
    let e_a =
        SparseOperator::from_triplets(space.dim(), members.iter().map(|m| (*m, *m, Scalar::one())));
    let gens = space.generator_images();
    let stable = gens
        .x
        .iter()
        .chain(&gens.s)
        .all(|g| g.commutator(&e_a).is_zero());
    Ok(WeightSpaceReport {
        tableau: a.entries().to_vec(),
        weight_space_dim: members.len(),
        permutation_dim: module.dim,
        stable,
        pass: stable && members.len() == module.dim,
        module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram_tableaux::{idem_d, tab_d, Origin, PartitionDiagram};
    use crate::schur_algebra::xi_basis;

    fn space(parts: &[usize], d: usize) -> TensorSpace {
        let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
        TensorSpace::new(dg.clone(), Origin::zero(dg.level()), d, 10_000).unwrap()
    }

    #[test]
    fn faithful_dimensions() {
        let v = space(&[2, 2], 2);
        let basis = xi_basis(&v);
        let ws = PermutationWorkspace::new(&v, &basis, 1000).unwrap();
        assert_eq!(ws.hecke_image_dim().unwrap(), 8);
        let dg = v.diagram_arc().clone();
        let m = permutation_module(&ws, &Tableau::from_ints(dg.clone(), &[0, 0, 2, 0]).unwrap())
            .unwrap();
        assert_eq!((m.dim, m.formula_dim), (4, 4));
        let m = permutation_module(&ws, &Tableau::from_ints(dg.clone(), &[1, 0, 1, 0]).unwrap())
            .unwrap();
        assert_eq!((m.dim, m.formula_dim), (4, 4));
        for a in tab_d(&dg, 2) {
            let m = permutation_module(&ws, &a).unwrap();
            assert!(m.pass, "{m:?}");
        }
    }

    #[test]
    fn trivial_degree() {
        let v = space(&[2, 2], 0);
        let basis = xi_basis(&v);
        let ws = PermutationWorkspace::new(&v, &basis, 1000).unwrap();
        let m = permutation_module(&ws, &Tableau::zero(v.diagram_arc().clone())).unwrap();
        assert_eq!(m.dim, 1);
    }

    #[test]
    fn weight_spaces() {
        for (parts, d) in [(&[2, 2][..], 1), (&[2, 2], 2), (&[1, 2], 2)] {
            let v = space(parts, d);
            let basis = xi_basis(&v);
            let ws = PermutationWorkspace::new(&v, &basis, 1000).unwrap();
            for a in idem_d(v.diagram_arc(), d) {
                let r = weight_space_vs_permutation(&ws, &a).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }
}
