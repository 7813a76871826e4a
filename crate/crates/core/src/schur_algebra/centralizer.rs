//! Double centralizer checks for the filtered and graded models.
//!
//! `C₁` is the commutant of the Hecke generator images and `C₂` the commutant
//! of `C₁`. The basis `B` (Ξ or ξ) is shown to lie in `C₁` by exact
//! commutators and to be independent by its values on `J^d`; `dim C₁` comes
//! from elimination (exact over `ℚ`, or an upper bound from `𝔽_p`).
//!
//! For `C₂` let `U = ⊕_{A ∈ T} e_A V` for a set `T` of weights with
//! `span(B·U) = V`. Every `φ ∈ C₂` preserves `U` and is determined by `φ|_U`,
//! which commutes with `e_A C₁ e_B|_U` for `A, B ∈ T`; so `dim C₂` is at most
//! the dimension of the commutant on `U` of any subset of those blocks. The
//! rank of `Ψ` modulo `p` bounds `dim Ψ(H)` from below. When the two bounds
//! meet, both `C₂ = Ψ(H)` and `dim Ψ(H)` are certified.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::diagram_tableaux::multi_index::distinct_permutations;
use crate::diagram_tableaux::orbits::{canonical_pair, in_j_d};
use crate::diagram_tableaux::{orbit_reps, MultiIndex, OrbitKind};
use crate::exact_linear::{
    commutant_dim, Echelon, Field, Fp, Scalar, SparseMatrix, SparseOperator, SparseVec,
};
use crate::hecke_algebra::{CyclotomicParams, HeckeAlgebra, HeckeMonomial, Perm};
use crate::tensor_representation::{xi_operator, GeneratorImages, TensorSpace};

use super::weights::{idempotent_rows, row_classes, weight_vector};
use super::xi_basis::{schur_dimension, xi_basis};
use super::SchurError;

/// Limits for the elimination steps.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CentralizerOptions {
    /// Commutants on spaces of at most this dimension are solved over `ℚ`;
    /// larger ones over `𝔽_p`, which bounds the dimension from above.
    pub exact_limit: usize,
}

impl Default for CentralizerOptions {
    fn default() -> Self {
        CentralizerOptions { exact_limit: 200 }
    }
}

/// Outcome of a double centralizer check.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub model: String,
    pub parts: Vec<usize>,
    pub origin: Vec<Scalar>,
    pub d: usize,
    pub tensor_dim: usize,
    pub schur_dimension: u128,
    pub basis_count: usize,
    pub basis_commutes: bool,
    pub basis_independent: bool,
    pub c1_dim: usize,
    pub c1_field: String,
    pub c1_equals_span: bool,
    pub normal_form_dim: u128,
    pub hecke_image_dim: usize,
    pub c2_bound: usize,
    pub c2_field: String,
    pub c2_weights: Vec<Vec<usize>>,
    pub c2_equals_image: bool,
    /// Graded model only: a vector generating a free module of rank `l^d·d!`.
    pub free_vector: Option<Vec<usize>>,
    pub pass: bool,
}

struct Labeled {
    label: (MultiIndex, MultiIndex),
    rows_out: Vec<usize>,
    rows_in: Vec<usize>,
    degree: usize,
    op: SparseOperator,
}

fn field_name(exact: bool) -> String {
    if exact { "Q" } else { "F_p" }.into()
}

fn commutant_dimension(dim: usize, gens: &[SparseOperator], exact: bool) -> usize {
    if exact {
        commutant_dim::<Scalar>(dim, gens)
    } else {
        let fp: Vec<SparseMatrix<Fp>> = gens
            .iter()
            .map(|g| g.to_fp().expect("denominators prime to p"))
            .collect();
        commutant_dim::<Fp>(dim, &fp)
    }
}

fn to_fp(v: &SparseVec<Scalar>) -> SparseVec<Fp> {
    v.map_field(Fp::from_scalar)
        .expect("denominators prime to p")
}

/// Evaluates `v·(x^r w) = M(w)·M(x)^r v`.
struct MonomialAction<'a> {
    gens: &'a GeneratorImages,
    perms: HashMap<Perm, SparseOperator>,
}

impl<'a> MonomialAction<'a> {
    fn new(space: &TensorSpace, gens: &'a GeneratorImages) -> Self {
        let perms = Perm::all(space.d())
            .into_iter()
            .map(|w| (w.clone(), space.act_perm(&w)))
            .collect();
        MonomialAction { gens, perms }
    }

    fn apply(&self, m: &HeckeMonomial, v: &SparseVec<Scalar>) -> SparseVec<Scalar> {
        let mut out = v.clone();
        for (k, e) in m.exps.iter().enumerate() {
            for _ in 0..*e {
                out = self.gens.x[k].apply(&out);
            }
        }
        self.perms[&m.perm].apply(&out)
    }

    /// `(v_c·m)_{c ∈ cols}` concatenated, for every monomial.
    fn image_vectors(
        &self,
        monomials: &[HeckeMonomial],
        cols: &[usize],
        dim: usize,
    ) -> Vec<SparseVec<Scalar>> {
        monomials
            .iter()
            .map(|m| {
                let mut pairs = Vec::new();
                for (pos, c) in cols.iter().enumerate() {
                    for (r, v) in self.apply(m, &SparseVec::unit(*c)).into_entries() {
                        pairs.push((pos * dim + r, v));
                    }
                }
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }

    /// `Ψ(x^r w)` as a matrix.
    fn operator(&self, m: &HeckeMonomial, dim: usize) -> SparseOperator {
        let mut op = SparseOperator::identity(dim);
        for (k, e) in m.exps.iter().enumerate() {
            for _ in 0..*e {
                op = self.gens.x[k].mul(&op);
            }
        }
        self.perms[&m.perm].mul(&op)
    }

    /// `dim span Ψ(monomials)` modulo `p`, a lower bound for the rank over `ℚ`.
    fn operator_rank(&self, monomials: &[HeckeMonomial], dim: usize) -> usize {
        let mut e: Echelon<Fp> = Echelon::new();
        for m in monomials {
            let op = self.operator(m, dim);
            let flat = op
                .triplets()
                .into_iter()
                .map(|(r, c, x)| (c * dim + r, x))
                .collect();
            e.push(&to_fp(&SparseVec::from_pairs(flat)));
        }
        e.rank()
    }

    /// Rank modulo `p`, a lower bound for the rank over `ℚ`.
    fn image_rank(&self, monomials: &[HeckeMonomial], cols: &[usize], dim: usize) -> usize {
        let mut e: Echelon<Fp> = Echelon::new();
        for v in self.image_vectors(monomials, cols, dim) {
            e.push(&to_fp(&v));
        }
        e.rank()
    }
}

/// Checks that each basis operator takes value one on its own `J^d` orbit and
/// zero on all other `J^d` positions.
fn unitriangular_on_j(space: &TensorSpace, basis: &[Labeled]) -> bool {
    let dg = space.diagram();
    basis.iter().all(|b| {
        let mut hits = 0usize;
        for (r, c, v) in b.op.triplets() {
            let (h, k) = (space.multi_index(r), space.multi_index(c));
            if in_j_d(dg, &h, &k) {
                if canonical_pair(&h, &k) != b.label || !v.is_one() {
                    return false;
                }
                hits += 1;
            }
        }
        let pairs: Vec<(usize, usize)> = b
            .label
            .0
            .iter()
            .copied()
            .zip(b.label.1.iter().copied())
            .collect();
        hits == distinct_permutations(&pairs).len()
    })
}

fn certify(
    space: &TensorSpace,
    model: &str,
    gens: &GeneratorImages,
    basis: Vec<Labeled>,
    opts: &CentralizerOptions,
) -> CentralizerReport {
    let dim = space.dim();
    let all_gens: Vec<SparseOperator> = gens.x.iter().take(1).chain(&gens.s).cloned().collect();
    let basis_commutes = basis
        .iter()
        .all(|b| all_gens.iter().all(|g| b.op.commutator(g).is_zero()));
    let basis_independent = unitriangular_on_j(space, &basis);
    let exact1 = dim <= opts.exact_limit;
    let c1_dim = commutant_dimension(dim, &all_gens, exact1);
    let c1_equals_span = basis_commutes && basis_independent && c1_dim == basis.len();

    let params = CyclotomicParams::cyclotomic(space.d(), space.roots().to_vec());
    let alg = HeckeAlgebra::new(params.clone());
    let monomials = alg.basis().expect("cyclotomic");
    let action = MonomialAction::new(space, gens);

    // Weight classes, longest rows first.
    let classes = row_classes(space);
    let mut weights: Vec<Vec<usize>> =
        crate::diagram_tableaux::idem_d(space.diagram_arc(), space.d())
            .iter()
            .map(idempotent_rows)
            .collect();
    let length = |rows: &Vec<usize>| rows.iter().map(|r| space.diagram().part(*r)).sum::<usize>();
    weights.sort_by(|a, b| length(b).cmp(&length(a)).then(b.cmp(a)));
    let r_low = action.operator_rank(&monomials, dim);

    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut u_cols: Vec<usize> = Vec::new();
    // Rank of B·U modulo p; full rank mod p implies full rank over ℚ.
    let mut span: Echelon<Fp> = Echelon::new();
    let mut c2_bound = usize::MAX;
    let mut c2_exact = true;
    for w in &weights {
        chosen.push(w.clone());
        let members = classes.get(w).cloned().unwrap_or_default();
        u_cols.extend(&members);
        if span.rank() < dim {
            for b in basis.iter().filter(|b| &b.rows_in == w) {
                for u in &members {
                    if span.rank() < dim {
                        span.push(&to_fp(&b.op.column_vec(*u)));
                    }
                }
            }
        }
        if span.rank() < dim {
            continue;
        }
        u_cols.sort_unstable();
        // Any subset of C₁ gives an upper bound, so generators are added by degree.
        let pos: BTreeMap<usize, usize> = u_cols.iter().enumerate().map(|(p, c)| (*c, p)).collect();
        let mut restricted: Vec<SparseOperator> = chosen
            .iter()
            .map(|cw| {
                let diag = classes[cw].iter().map(|c| (pos[c], pos[c], Scalar::one()));
                SparseOperator::from_triplets(u_cols.len(), diag)
            })
            .collect();
        let inside: Vec<&Labeled> = basis
            .iter()
            .filter(|b| chosen.contains(&b.rows_in) && chosen.contains(&b.rows_out))
            .collect();
        let max_degree = inside.iter().map(|b| b.degree).max().unwrap_or(0);
        let exact = u_cols.len() <= opts.exact_limit;
        for stage in 0..=max_degree {
            for b in inside.iter().filter(|b| b.degree == stage) {
                restricted.push(b.op.restrict(&u_cols).expect("weight spaces are invariant"));
            }
            let bound = commutant_dimension(u_cols.len(), &restricted, exact);
            if bound < c2_bound {
                c2_bound = bound;
                c2_exact = exact;
            }
            if c2_bound <= r_low {
                break;
            }
        }
        if c2_bound == r_low {
            break;
        }
    }
    let c2_equals_image = c1_equals_span && c2_bound == r_low;
    let pass = c1_equals_span
        && c2_equals_image
        && basis.len() as u128 == schur_dimension(space.diagram(), space.d());
    CentralizerReport {
        model: model.into(),
        parts: space.diagram().parts().to_vec(),
        origin: space.origin().values().to_vec(),
        d: space.d(),
        tensor_dim: dim,
        schur_dimension: schur_dimension(space.diagram(), space.d()),
        basis_count: basis.len(),
        basis_commutes,
        basis_independent,
        c1_dim,
        c1_field: field_name(exact1),
        c1_equals_span,
        normal_form_dim: params.dimension().expect("cyclotomic"),
        hecke_image_dim: r_low,
        c2_bound,
        c2_field: field_name(c2_exact),
        c2_weights: chosen,
        c2_equals_image,
        free_vector: None,
        pass,
    }
}

/// Basis indices `u` with `span(B·{v_u}) = V`, chosen greedily by weight
/// (longest rows first). Any endomorphism commuting with `B` is determined by
/// its values on these vectors. Ranks are taken modulo `p`; full rank modulo
/// `p` implies full rank over `ℚ`.
pub fn generating_vectors(space: &TensorSpace, basis: &[SparseOperator]) -> Vec<usize> {
    let dim = space.dim();
    let dg = space.diagram();
    let length = |rows: &Vec<usize>| rows.iter().map(|r| dg.part(*r)).sum::<usize>();
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = row_classes(space).into_iter().collect();
    classes.sort_by(|a, b| length(&b.0).cmp(&length(&a.0)).then(b.0.cmp(&a.0)));
    let mut span: Echelon<Fp> = Echelon::new();
    let mut out = Vec::new();
    for (_, members) in classes {
        for u in members {
            if span.rank() == dim {
                return out;
            }
            if span.contains(&SparseVec::unit(u)) {
                continue;
            }
            let before = span.rank();
            for op in basis {
                let col = op.column_vec(u);
                if !col.is_empty() {
                    span.push(&to_fp(&col));
                }
            }
            if span.rank() > before {
                out.push(u);
            }
        }
    }
    out
}

/// Checks `C₁ = span Ξ` and `C₂ = Ψ(H_d(Λ))` for the filtered action.
pub fn double_centralizer_filtered(
    space: &TensorSpace,
    opts: &CentralizerOptions,
) -> CentralizerReport {
    let basis = xi_basis(space)
        .into_iter()
        .map(|x| Labeled {
            label: (x.i, x.j),
            rows_out: x.row_class_i,
            rows_in: x.row_class_j,
            degree: x.degree,
            op: x.operator,
        })
        .collect();
    certify(space, "filtered", &space.generator_images(), basis, opts)
}

/// The same checks for the graded action and the graded basis `ξ`, plus a
/// free vector when at least `d` parts equal `l`.
pub fn double_centralizer_graded(
    space: &TensorSpace,
    opts: &CentralizerOptions,
) -> CentralizerReport {
    let dg = space.diagram();
    let basis = orbit_reps(dg, space.d(), OrbitKind::J)
        .j_reps
        .into_iter()
        .map(|(i, j)| {
            let op = xi_operator(space, &i, &j).expect("orbit representative lies in J^d");
            Labeled {
                degree: i.iter().zip(&j).map(|(a, b)| dg.col(*b) - dg.col(*a)).sum(),
                rows_out: crate::diagram_tableaux::multi_index::row_class(dg, &i),
                rows_in: crate::diagram_tableaux::multi_index::row_class(dg, &j),
                label: (i, j),
                op,
            }
        })
        .collect();
    let gens = space.graded_action();
    let mut report = certify(space, "graded", &gens, basis, opts);
    report.free_vector = free_vector(space, &gens);
    if dg.parts_equal_to_level() >= space.d() && report.free_vector.is_none() {
        report.pass = false;
    }
    report
}

/// A multi-index of distinct boxes in column `l` whose orbit under the graded
/// monomials is a set of `l^d·d!` distinct basis vectors.
fn free_vector(space: &TensorSpace, gens: &GeneratorImages) -> Option<Vec<usize>> {
    let dg = space.diagram();
    let d = space.d();
    let last: Vec<usize> = dg.column_boxes(dg.level());
    if last.len() < d {
        return None;
    }
    let i: Vec<usize> = last[last.len() - d..].to_vec();
    let alg = HeckeAlgebra::new(CyclotomicParams::cyclotomic(d, space.roots().to_vec()));
    let monomials = alg.basis().expect("cyclotomic");
    let action = MonomialAction::new(space, gens);
    let v = SparseVec::unit(space.index(&i));
    let mut seen = std::collections::HashSet::new();
    for m in &monomials {
        let img = action.apply(m, &v);
        if img.len() != 1 || !img.entries()[0].1.is_one() || !seen.insert(img.entries()[0].0) {
            return None;
        }
    }
    Some(i)
}

/// Outcome of the special tableau comparison.
#[derive(Clone, Debug, Serialize)]
pub struct SpecialTableauReport {
    pub skipped: bool,
    pub note: String,
    pub special_rows: Vec<usize>,
    pub corner_rank: usize,
    pub expected_rank: u128,
    pub regular_orbit_dim: usize,
    pub multiplicative_on_generators: bool,
    pub pass: bool,
}

/// For a special tableau `S`, checks `dim e_S W_d e_S = l^d·d!` and that
/// `x ↦ h(x)` with `h(x)·v_{i(S)} = v_{i(S)}·x` is multiplicative on all pairs
/// of generators.
pub fn special_tableau_iso_check(space: &TensorSpace) -> Result<SpecialTableauReport, SchurError> {
    let dg = space.diagram();
    let d = space.d();
    let l = dg.level();
    let params = CyclotomicParams::cyclotomic(d, space.roots().to_vec());
    let expected_rank = params.dimension().expect("cyclotomic");
    if dg.parts_equal_to_level() < d {
        return Ok(SpecialTableauReport {
            skipped: true,
            note: format!("fewer than {d} parts equal {l}"),
            special_rows: Vec::new(),
            corner_rank: 0,
            expected_rank,
            regular_orbit_dim: 0,
            multiplicative_on_generators: false,
            pass: true,
        });
    }
    let n = dg.rows();
    let rows: Vec<usize> = (n - d + 1..=n).collect();
    let gen_idx = space.index(&weight_vector(dg, &rows));
    let corner: Vec<SparseOperator> = xi_basis(space)
        .into_iter()
        .filter(|x| x.row_class_i == rows && x.row_class_j == rows)
        .map(|x| x.operator)
        .collect();
    let corner_rank = crate::exact_linear::operator_rank(&corner);
    let gens = space.generator_images();
    let alg = HeckeAlgebra::new(params);
    let monomials = alg.basis().expect("cyclotomic");
    let action = MonomialAction::new(space, &gens);
    let regular_orbit_dim = action.image_rank(&monomials, &[gen_idx], space.dim());

    // h(g) for each generator g, as an operator.
    let mut ech: Echelon<Scalar> = Echelon::tracking();
    for op in &corner {
        ech.insert(&op.column_vec(gen_idx));
    }
    let v = SparseVec::unit(gen_idx);
    let gen_ops: Vec<&SparseOperator> = gens.x.iter().chain(&gens.s).collect();
    let mut images = Vec::new();
    for g in &gen_ops {
        let target = g.apply(&v);
        let mut e = ech.clone();
        let Some(rel) = e.insert(&target) else {
            return Err(SchurError::Precondition(
                "v·g not reached by e_S W e_S".into(),
            ));
        };
        let mut h = SparseOperator::zero(space.dim());
        for (k, c) in rel.entries() {
            h = h.add_scaled(c, &corner[*k]);
        }
        images.push(h);
    }
    // h(g₁)h(g₂)v = v·g₁g₂ for every ordered pair of generators.
    let multiplicative_on_generators = gen_ops.iter().zip(&images).all(|(g1, h1)| {
        gen_ops
            .iter()
            .zip(&images)
            .all(|(g2, h2)| h1.mul(h2).apply(&v) == g2.apply(&g1.apply(&v)))
    });
    let pass = corner_rank as u128 == expected_rank
        && regular_orbit_dim as u128 == expected_rank
        && multiplicative_on_generators;
    Ok(SpecialTableauReport {
        skipped: false,
        note: String::new(),
        special_rows: rows,
        corner_rank,
        expected_rank,
        regular_orbit_dim,
        multiplicative_on_generators,
        pass,
    })
}
