//! The basis `Ξ_{i,j}` of `W_d(λ, c)` computed from the coefficient recurrence.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::diagram_tableaux::multi_index::{binomial, distinct_permutations};
use crate::diagram_tableaux::orbits::{canonical_pair, in_j_d, j_set};
use crate::diagram_tableaux::{orbit_reps, MultiIndex, OrbitKind, PartitionDiagram};
use crate::exact_linear::{Scalar, SparseOperator};
use crate::tensor_representation::TensorSpace;

use super::SchurError;

/// `binom(|J| + d − 1, d)`.
pub fn schur_dimension(diagram: &PartitionDiagram, d: usize) -> u128 {
    let j = j_set(diagram).len() as u64;
    if j == 0 {
        return u128::from(d == 0);
    }
    binomial(j + d as u64 - 1, d as u64)
}

/// One basis element `Ξ_{i,j} = Σ a_{h,k} e_{h,k}`.
#[derive(Clone, Debug, Serialize)]
pub struct XiElement {
    pub i: MultiIndex,
    pub j: MultiIndex,
    /// Sorted rows of `i` and of `j`: `Ξ` maps the `row(j)` weight space to the `row(i)` one.
    pub row_class_i: Vec<usize>,
    pub row_class_j: Vec<usize>,
    /// `Σ_t (col(j_t) − col(i_t))`.
    pub degree: usize,
    /// Nonzero coefficients on orbit representatives `(h, k)` (pairs sorted jointly).
    pub coefficients: BTreeMap<(MultiIndex, MultiIndex), Scalar>,
    #[serde(skip)]
    pub operator: SparseOperator,
}

struct Recurrence<'a> {
    dg: &'a PartitionDiagram,
    roots: &'a [Scalar],
    target: Vec<(usize, usize)>,
    degree: usize,
    memo: FxHashMap<Vec<(usize, usize)>, Scalar>,
}

impl Recurrence<'_> {
    fn coeff(&mut self, h: &[usize], k: &[usize]) -> Scalar {
        let dg = self.dg;
        let mut deg = 0usize;
        for (a, b) in h.iter().zip(k) {
            let (ca, cb) = (dg.col(*a), dg.col(*b));
            if ca > cb {
                return Scalar::zero();
            }
            deg += cb - ca;
        }
        if deg > self.degree {
            return Scalar::zero();
        }
        let mut key: Vec<(usize, usize)> = h.iter().copied().zip(k.iter().copied()).collect();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (h, k): (Vec<usize>, Vec<usize>) = key.iter().copied().unzip();
        let value = match (0..k.len()).find(|t| dg.right(k[*t]).is_some()) {
            None => {
                if key == self.target {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }
            Some(t) => self.expand(&h, &k, t),
        };
        self.memo.insert(key, value.clone());
        value
    }

    /// The recurrence at position `t`, where `R(k_t)` exists.
    fn expand(&mut self, h: &[usize], k: &[usize], t: usize) -> Scalar {
        let dg = self.dg;
        let mut rk = k.to_vec();
        rk[t] = dg.right(k[t]).expect("checked");
        let mut v = Scalar::zero();
        if let Some(rh) = dg.right(h[t]) {
            let mut h2 = h.to_vec();
            h2[t] = rh;
            v += &self.coeff(&h2, &rk);
        }
        let (cht, ckt) = (dg.col(h[t]), dg.col(k[t]));
        let c = &self.roots[cht - 1] - &self.roots[ckt];
        if !c.is_zero() {
            v += &(&c * &self.coeff(h, &rk));
        }
        for s in 0..h.len() {
            if s == t {
                continue;
            }
            let (chs, cks) = (dg.col(h[s]), dg.col(k[s]));
            let sign = if chs <= cht && cks <= ckt {
                1
            } else if chs > cht && cks > ckt {
                -1
            } else {
                continue;
            };
            let mut hs = h.to_vec();
            hs.swap(s, t);
            let a = self.coeff(&hs, &rk);
            if sign > 0 {
                v += &a;
            } else {
                v -= &a;
            }
        }
        v
    }
}

/// All multi-indices whose rows are a rearrangement of `rows`.
pub fn indices_with_rows(dg: &PartitionDiagram, rows: &[usize]) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for arr in distinct_permutations(rows) {
        let mut cur = vec![0usize; arr.len()];
        fn rec(
            dg: &PartitionDiagram,
            arr: &[usize],
            t: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<MultiIndex>,
        ) {
            if t == arr.len() {
                out.push(cur.clone());
                return;
            }
            for b in dg.row_boxes(arr[t]) {
                cur[t] = *b;
                rec(dg, arr, t + 1, cur, out);
            }
        }
        rec(dg, &arr, 0, &mut cur, &mut out);
    }
    out.sort();
    out
}

fn sorted_rows(dg: &PartitionDiagram, i: &[usize]) -> Vec<usize> {
    crate::diagram_tableaux::multi_index::row_class(dg, i)
}

/// `Ξ_{i,j}` for `(i, j) ∈ J^d`.
pub fn xi_basis_element(
    space: &TensorSpace,
    i: &[usize],
    j: &[usize],
) -> Result<XiElement, SchurError> {
    let dg = space.diagram();
    if i.len() != space.d() || !in_j_d(dg, i, j) {
        return Err(SchurError::NotInJ);
    }
    let (ci, cj) = canonical_pair(i, j);
    let target: Vec<(usize, usize)> = ci.iter().copied().zip(cj.iter().copied()).collect();
    let degree: usize = i.iter().zip(j).map(|(a, b)| dg.col(*b) - dg.col(*a)).sum();
    let mut rec = Recurrence {
        dg,
        roots: space.roots(),
        target,
        degree,
        memo: FxHashMap::default(),
    };
    let row_class_i = sorted_rows(dg, i);
    let row_class_j = sorted_rows(dg, j);
    let hs = indices_with_rows(dg, &row_class_i);
    let ks = indices_with_rows(dg, &row_class_j);
    let mut triplets = Vec::new();
    let mut coefficients = BTreeMap::new();
    for k in &ks {
        for h in &hs {
            let v = rec.coeff(h, k);
            if !v.is_zero() {
                triplets.push((space.index(h), space.index(k), v.clone()));
                let key = canonical_pair(h, k);
                coefficients.entry(key).or_insert(v);
            }
        }
    }
    Ok(XiElement {
        i: ci,
        j: cj,
        row_class_i,
        row_class_j,
        degree,
        coefficients,
        operator: SparseOperator::from_triplets(space.dim(), triplets),
    })
}

/// The full basis, one element per orbit of `J^d / S_d`, in orbit order.
pub fn xi_basis(space: &TensorSpace) -> Vec<XiElement> {
    let reps = orbit_reps(space.diagram(), space.d(), OrbitKind::J).j_reps;
    reps.par_iter()
        .map(|(i, j)| xi_basis_element(space, i, j).expect("orbit representative lies in J^d"))
        .collect()
}

/// Checks on the computed basis.
#[derive(Clone, Debug, Serialize)]
pub struct XiBasisReport {
    pub count: usize,
    pub expected_count: u128,
    /// Each `Ξ` commutes with every generator image.
    pub commute: bool,
    /// Coefficient `1` on its own `J^d`-orbit and `0` on every other one.
    pub normalized: bool,
    /// All coefficients are integers; checked only for the zero origin.
    pub integral: Option<bool>,
    /// The top-degree part of `Ξ_{i,j}` is `ξ_{i,j}`.
    pub leading_term: bool,
    pub pass: bool,
}

pub fn xi_basis_report(
    space: &TensorSpace,
    basis: &[XiElement],
) -> Result<XiBasisReport, SchurError> {
    let dg = space.diagram();
    let gens = space.generator_images();
    let commute = basis.iter().all(|xi| {
        gens.x
            .iter()
            .chain(&gens.s)
            .all(|g| xi.operator.commutator(g).is_zero())
    });
    let normalized = basis.iter().all(|xi| {
        xi.coefficients.iter().all(|((h, k), c)| {
            if (h, k) == (&xi.i, &xi.j) {
                c.is_one()
            } else {
                !in_j_d(dg, h, k)
            }
        }) && xi.coefficients.contains_key(&(xi.i.clone(), xi.j.clone()))
    });
    let integral = space.origin().is_zero().then(|| {
        basis
            .iter()
            .all(|xi| xi.coefficients.values().all(|c| c.is_integer()))
    });
    let mut leading_term = true;
    for xi in basis {
        let graded = crate::tensor_representation::xi_operator(space, &xi.i, &xi.j)
            .map_err(|_| SchurError::NotInJ)?;
        let top = xi.operator.triplets().into_iter().filter(|(r, c, _)| {
            space.degree(&space.multi_index(*r)) - space.degree(&space.multi_index(*c)) == xi.degree
        });
        leading_term &= SparseOperator::from_triplets(space.dim(), top) == graded;
    }
    let expected_count = schur_dimension(dg, space.d());
    let pass = commute
        && normalized
        && integral != Some(false)
        && leading_term
        && basis.len() as u128 == expected_count;
    Ok(XiBasisReport {
        count: basis.len(),
        expected_count,
        commute,
        normalized,
        integral,
        leading_term,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::diagram_tableaux::Origin;
    use crate::tensor_representation::xi_operator;

    fn space(parts: &[usize], c: Vec<Scalar>, d: usize) -> TensorSpace {
        let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
        TensorSpace::new(dg.clone(), Origin::for_diagram(c, &dg).unwrap(), d, 10_000).unwrap()
    }

    #[test]
    fn dimensions() {
        let d = PartitionDiagram::new(&[2, 3, 4]).unwrap();
        assert_eq!(schur_dimension(&d, 1), 23);
        assert_eq!(schur_dimension(&d, 2), 276);
        assert_eq!(schur_dimension(&d, 0), 1);
    }

    #[test]
    fn commutes_and_lifts_graded_basis() {
        for (parts, c, d) in [
            (&[1, 2][..], vec![Scalar::zero(), Scalar::zero()], 2),
            (&[1, 2], vec![Scalar::zero(), Scalar::new(1, 2)], 2),
            (&[2, 2], vec![Scalar::zero(), Scalar::zero()], 2),
            (&[1, 1, 2], vec![Scalar::zero(), Scalar::zero()], 2),
        ] {
            let v = space(parts, c, d);
            let g = v.generator_images();
            for xi in xi_basis(&v) {
                for op in g.x.iter().chain(&g.s) {
                    assert_eq!(
                        xi.operator.mul(op),
                        op.mul(&xi.operator),
                        "{:?} {:?}",
                        xi.i,
                        xi.j
                    );
                }
                // The top-degree part is the graded basis element.
                let gr = xi_operator(&v, &xi.i, &xi.j).unwrap();
                let top: Vec<_> = xi
                    .operator
                    .triplets()
                    .into_iter()
                    .filter(|(r, cidx, _)| {
                        let (h, k) = (v.multi_index(*r), v.multi_index(*cidx));
                        v.degree(&h) - v.degree(&k) == xi.degree
                    })
                    .collect();
                assert_eq!(SparseOperator::from_triplets(v.dim(), top), gr);
            }
        }
    }

    #[test]
    fn report_passes() {
        for (parts, c, d) in [
            (&[2, 2][..], vec![Scalar::zero(), Scalar::zero()], 2),
            (&[1, 2], vec![Scalar::zero(), Scalar::new(1, 2)], 2),
        ] {
            let v = space(parts, c, d);
            let r = xi_basis_report(&v, &xi_basis(&v)).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn integral_for_zero_origin() {
        let v = space(&[1, 2, 2], vec![Scalar::zero(), Scalar::zero()], 2);
        for xi in xi_basis(&v) {
            assert!(xi.coefficients.values().all(|c| c.is_integer()));
            assert_eq!(
                xi.coefficients[&(xi.i.clone(), xi.j.clone())],
                Scalar::one()
            );
        }
    }
}
