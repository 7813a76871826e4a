//! Property tests for the structural invariants of each module.

use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;
use swl_core::diagram_tableaux::orbits::{j_set, j_to_k, k_set, k_to_j};
use swl_core::diagram_tableaux::{
    bruhat_leq, col_c_d, hook_length_dim, idem_d, kostka, standard_young_tableaux, Origin,
    PartitionDiagram, Tableau,
};
use swl_core::exact_linear::{minimal_polynomial, span, Scalar, SparseOperator};
use swl_core::hecke_algebra::{
    symmetrizing_form, CyclotomicParams, HeckeAlgebra, HeckeMonomial, Perm,
};
use swl_core::schur_algebra::{weight_idempotents, xi_basis};
use swl_core::tensor_representation::TensorSpace;

fn diagram() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=3)
}

fn small_diagram() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(vec![
        vec![1],
        vec![2],
        vec![1, 2],
        vec![2, 2],
        vec![1, 1, 2],
        vec![1, 3],
    ])
}

/// An admissible origin: entries drawn from `{0, 1/2, 1/3}`, which never differ by a nonzero integer.
fn origin(level: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(
        prop::sample::select(vec![Scalar::zero(), Scalar::new(1, 2), Scalar::new(1, 3)]),
        level,
    )
}

fn instance() -> impl Strategy<Value = (Vec<usize>, Vec<Scalar>, usize)> {
    small_diagram().prop_flat_map(|p| {
        let l = *p.iter().max().unwrap();
        (Just(p), origin(l), 0usize..=2)
    })
}

fn space(parts: &[usize], c: &[Scalar], d: usize) -> TensorSpace {
    let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
    TensorSpace::new(
        dg.clone(),
        Origin::for_diagram(c.to_vec(), &dg).unwrap(),
        d,
        10_000,
    )
    .unwrap()
}

fn matrix(dim: usize) -> impl Strategy<Value = SparseOperator> {
    prop::collection::vec((0..dim, 0..dim, -2i64..=2), 0..=2 * dim).prop_map(move |t| {
        SparseOperator::from_triplets(
            dim,
            t.into_iter().map(|(r, c, v)| (r, c, Scalar::from_int(v))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn j_to_k_is_a_bijection(parts in diagram()) {
        let dg = PartitionDiagram::new(&parts).unwrap();
        let j = j_set(&dg);
        let k: HashSet<_> = k_set(&dg).into_iter().collect();
        let image: HashSet<_> = j.iter().map(|p| j_to_k(&dg, *p)).collect();
        prop_assert_eq!(image.len(), j.len());
        prop_assert_eq!(&image, &k);
        for p in &j {
            prop_assert_eq!(k_to_j(&dg, j_to_k(&dg, *p)), Some(*p));
        }
        let expected: usize = dg.parts().iter().flat_map(|a| dg.parts().iter().map(move |b| (*a).min(*b))).sum();
        prop_assert_eq!(j.len(), expected);
    }

    #[test]
    fn bruhat_is_a_partial_order((parts, c, d) in instance()) {
        let dg = Arc::new(PartitionDiagram::new(&parts).unwrap());
        let c = Origin::for_diagram(c, &dg).unwrap();
        let all = col_c_d(&dg, &c, d);
        for a in &all {
            prop_assert!(bruhat_leq(a, a).unwrap());
        }
        for a in &all {
            for b in all.iter().filter(|b| b.content() == a.content()) {
                let ab = bruhat_leq(a, b).unwrap();
                if ab && bruhat_leq(b, a).unwrap() {
                    prop_assert_eq!(a, b);
                }
                for e in all.iter().filter(|e| e.content() == a.content()) {
                    if ab && bruhat_leq(b, e).unwrap() {
                        prop_assert!(bruhat_leq(a, e).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn origin_tableau_is_standard(parts in diagram(), seed in 0usize..3) {
        let dg = Arc::new(PartitionDiagram::new(&parts).unwrap());
        let vals = [Scalar::zero(), Scalar::new(1, 2), Scalar::new(2, 3)];
        let c: Vec<Scalar> = (0..dg.level()).map(|j| vals[(j + seed) % 3].clone()).collect();
        let c = Origin::new(c).unwrap();
        let ac = Tableau::origin_tableau(dg, &c);
        prop_assert!(ac.classify(&c, 0).in_std_c_d);
    }

    #[test]
    fn kostka_is_shift_invariant((parts, c, d) in instance(), r in -2i64..=2) {
        let dg = Arc::new(PartitionDiagram::new(&parts).unwrap());
        let c = Origin::for_diagram(c, &dg).unwrap();
        let shifted = c.shifted(r);
        for b in col_c_d(&dg, &c, d) {
            for a in idem_d(&dg, d) {
                prop_assert_eq!(kostka(&b, &a, &c).unwrap(), kostka(&b.shifted(r), &a, &shifted).unwrap());
            }
        }
    }

    #[test]
    fn hook_formula_counts_tableaux(mu in prop::collection::vec(1usize..=4, 1..=3)) {
        let mut mu = mu;
        mu.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(hook_length_dim(&mu), standard_young_tableaux(&mu).len() as u128);
    }

    #[test]
    fn span_is_idempotent(ops in prop::collection::vec(matrix(4), 0..6)) {
        let s = span(4, &ops).unwrap();
        let again = span(4, &s.basis()).unwrap();
        prop_assert!(s.same_span(&again));
        prop_assert_eq!(s.rank(), again.rank());
    }

    #[test]
    fn minimal_polynomial_annihilates_with_bounded_degree(m in matrix(5)) {
        let f = minimal_polynomial(&m);
        prop_assert!(f.degree().unwrap() <= 5);
        prop_assert!(f.eval_operator(&m).is_zero());
    }
}

fn hecke() -> impl Strategy<Value = (usize, usize, Vec<Scalar>)> {
    prop::sample::select(vec![
        (1usize, 2usize),
        (1, 3),
        (2, 1),
        (2, 2),
        (3, 1),
        (2, 3),
    ])
    .prop_flat_map(|(l, d)| {
        (
            Just(l),
            Just(d),
            prop::collection::vec((-2i64..=2).prop_map(Scalar::from_int), l),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hecke_multiplication_is_associative_and_closed((l, d, roots) in hecke(), picks in prop::collection::vec(0usize..1000, 3)) {
        let alg = HeckeAlgebra::new(CyclotomicParams::cyclotomic(d, roots));
        let basis = alg.basis().unwrap();
        prop_assert_eq!(basis.len() as u128, (l as u128).pow(d as u32) * (1..=d as u128).product::<u128>());
        let set: HashSet<&HeckeMonomial> = basis.iter().collect();
        let el: Vec<_> = picks.iter().map(|p| alg.basis_element(&basis[p % basis.len()])).collect();
        let ab = el[0].mul(&el[1]).unwrap();
        prop_assert!(ab.terms().keys().all(|m| set.contains(m)));
        let left = ab.mul(&el[2]).unwrap();
        let right = el[0].mul(&el[1].mul(&el[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn form_is_a_trace((_l, d, roots) in hecke(), picks in prop::collection::vec(0usize..1000, 2)) {
        let alg = HeckeAlgebra::new(CyclotomicParams::cyclotomic(d, roots));
        let basis = alg.basis().unwrap();
        let a = alg.basis_element(&basis[picks[0] % basis.len()]);
        let b = alg.basis_element(&basis[picks[1] % basis.len()]);
        prop_assert_eq!(symmetrizing_form(&a.mul(&b).unwrap()).unwrap(), symmetrizing_form(&b.mul(&a).unwrap()).unwrap());
    }

    #[test]
    fn level_one_is_the_group_algebra(d in 1usize..=4, q in -3i64..=3, u in 0usize..24, v in 0usize..24) {
        let q = Scalar::from_int(q);
        let alg = HeckeAlgebra::new(CyclotomicParams::cyclotomic(d, vec![q.clone()]));
        let perms = Perm::all(d);
        let (u, v) = (&perms[u % perms.len()], &perms[v % perms.len()]);
        prop_assert_eq!(alg.basis().unwrap().len(), perms.len());
        prop_assert_eq!(alg.perm(u).mul(&alg.perm(v)).unwrap(), alg.perm(&u.compose(v)));
        prop_assert_eq!(alg.x(1).unwrap(), alg.scalar(&q));
    }

    #[test]
    fn tensor_relations_and_filtration((parts, c, d) in instance()) {
        let v = space(&parts, &c, d);
        let g = v.generator_images();
        let gr = v.graded_action();
        let id = SparseOperator::identity(v.dim());
        for (j, s) in g.s.iter().enumerate() {
            prop_assert_eq!(&s.mul(s), &id);
            if j + 1 < g.s.len() {
                prop_assert_eq!(s.mul(&g.s[j + 1]).mul(s), g.s[j + 1].mul(s).mul(&g.s[j + 1]));
            }
        }
        let mut p = id.clone();
        if let Some(x1) = g.x.first() {
            for q in v.roots() {
                p = p.mul(&x1.sub(&SparseOperator::scalar(v.dim(), q)));
            }
            prop_assert!(p.is_zero());
        }
        let deg = |m: usize| v.degree(&v.multi_index(m));
        for (x, xg) in g.x.iter().zip(&gr.x) {
            let mut top = Vec::new();
            for (r, col, a) in x.triplets() {
                prop_assert!(deg(r) <= deg(col) + 1);
                if deg(r) == deg(col) + 1 {
                    top.push((r, col, a));
                }
            }
            prop_assert_eq!(&SparseOperator::from_triplets(v.dim(), top), xg);
        }
    }

    #[test]
    fn xi_commutes_with_graded_action_and_respects_weights((parts, c, d) in instance()) {
        let v = space(&parts, &c, d);
        let gr = v.graded_action();
        let es = weight_idempotents(&v);
        for xi in xi_basis(&v) {
            let graded = swl_core::tensor_representation::xi_operator(&v, &xi.i, &xi.j).unwrap();
            for op in gr.x.iter().chain(&gr.s) {
                prop_assert!(graded.commutator(op).is_zero());
            }
            for ea in &es {
                for eb in &es {
                    if !ea.operator.mul(&xi.operator).mul(&eb.operator).is_zero() {
                        prop_assert_eq!(&ea.rows, &xi.row_class_i);
                        prop_assert_eq!(&eb.rows, &xi.row_class_j);
                    }
                }
            }
        }
    }
}
