//! Normal-form multiplication against the faithful matrix model.

use std::sync::Arc;

use swl_core::diagram_tableaux::{Origin, PartitionDiagram};
use swl_core::exact_linear::Scalar;
use swl_core::hecke_algebra::{HeckeAlgebra, HeckeElement};
use swl_core::tensor_representation::TensorSpace;

fn check_all_pairs(parts: &[usize], origin: Vec<Scalar>, d: usize) {
    let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
    assert!(dg.parts_equal_to_level() >= d);
    let v = TensorSpace::new(
        dg.clone(),
        Origin::for_diagram(origin, &dg).unwrap(),
        d,
        100_000,
    )
    .unwrap();
    let alg = HeckeAlgebra::new(v.params());
    let basis = alg.basis().unwrap();
    let ops: Vec<_> = basis.iter().map(|m| v.psi_monomial(m)).collect();
    for (a, oa) in basis.iter().zip(&ops) {
        for (b, ob) in basis.iter().zip(&ops) {
            let prod = alg.basis_element(a).mul(&alg.basis_element(b)).unwrap();
            assert_eq!(v.psi(&prod).unwrap(), ob.mul(oa), "{a:?} * {b:?}");
        }
    }
}

#[test]
fn level_two_degree_two() {
    check_all_pairs(&[2, 2], vec![Scalar::zero(), Scalar::zero()], 2);
}

#[test]
fn level_two_split_origin_degree_three() {
    check_all_pairs(&[1, 2, 2, 2], vec![Scalar::zero(), Scalar::new(1, 2)], 3);
}

#[test]
fn level_three_degree_two() {
    check_all_pairs(
        &[1, 3, 3],
        vec![Scalar::zero(), Scalar::zero(), Scalar::new(1, 2)],
        2,
    );
}

#[test]
fn square_of_x2_matches_matrix() {
    let dg = Arc::new(PartitionDiagram::new(&[2, 2]).unwrap());
    let v = TensorSpace::new(dg, Origin::zero(2), 2, 1000).unwrap();
    let alg = HeckeAlgebra::new(v.params());
    let x2 = alg.x(2).unwrap();
    let sq: HeckeElement = x2.mul(&x2).unwrap();
    assert!(sq.terms().keys().all(|m| m.exps.iter().all(|e| *e < 2)));
    let m = v.act_xj(2).unwrap();
    assert_eq!(v.psi(&sq).unwrap(), m.mul(&m));
}
