//! Structure constants of the graded algebra `ℂ[M_e]_d^*` in the basis
//! `ξ_{i,j;r}`, `(i, j, r) ∈ K^d / S_d`.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::diagram_tableaux::multi_index::distinct_permutations;
use crate::diagram_tableaux::orbits::KTriple;
use crate::diagram_tableaux::{orbit_reps, OrbitKind, PartitionDiagram};

use super::SchurError;

/// Products `ξ_X ξ_Y = Σ_Z a_{X,Y}^Z ξ_Z` over orbit indices.
#[derive(Clone, Debug, Serialize)]
pub struct GradedStructureConstants {
    /// Orbit representatives, triples sorted.
    pub orbits: Vec<Vec<KTriple>>,
    /// `(X, Y) ↦ [(Z, a)]` with nonzero `a`, `Z` increasing.
    #[serde(skip)]
    pub table: FxHashMap<(usize, usize), Vec<(usize, u64)>>,
}

impl GradedStructureConstants {
    pub fn product(&self, x: usize, y: usize) -> &[(usize, u64)] {
        self.table.get(&(x, y)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Multiplies two coordinate vectors.
    pub fn multiply(&self, a: &[(usize, u64)], b: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let mut acc: FxHashMap<usize, u64> = FxHashMap::default();
        for (x, ca) in a {
            for (y, cb) in b {
                for (z, c) in self.product(*x, *y) {
                    *acc.entry(*z).or_default() += ca * cb * c;
                }
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_unstable();
        v
    }

    /// Checks `(ξ_X ξ_Y) ξ_Z = ξ_X (ξ_Y ξ_Z)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let left = self.multiply(self.product(x, y), &[(z, 1)]);
                    let right = self.multiply(&[(x, 1)], self.product(y, z));
                    left == right
                })
            })
        })
    }
}

fn orbit_size(v: &[KTriple]) -> u64 {
    distinct_permutations(v).len() as u64
}

/// `a = #{(m, u, v) : (p, m, u) ∼ X, (m, q, v) ∼ Y, u + v = t}` for every
/// `Z = (p, q, t)`, by enumerating arrangements of `X` and `Y`.
pub fn graded_structure_constants(
    diagram: &PartitionDiagram,
    d: usize,
    cap: usize,
) -> Result<GradedStructureConstants, SchurError> {
    let orbits = orbit_reps(diagram, d, OrbitKind::K).k_reps;
    if orbits.len() > cap {
        return Err(SchurError::CapExceeded {
            required: orbits.len() as u128,
            cap: cap as u128,
        });
    }
    let index: FxHashMap<Vec<KTriple>, usize> = orbits
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, o)| (o, i))
        .collect();
    let arrangements: Vec<Vec<Vec<KTriple>>> =
        orbits.iter().map(|o| distinct_permutations(o)).collect();
    let sizes: Vec<u64> = orbits.iter().map(|o| orbit_size(o)).collect();
    let valid = |(a, b, r): KTriple| r >= diagram.shift(a, b) && r < diagram.part(b);
    let mut table = FxHashMap::default();
    for x in 0..orbits.len() {
        for y in 0..orbits.len() {
            let mut counts: FxHashMap<usize, u64> = FxHashMap::default();
            for ax in &arrangements[x] {
                for ay in &arrangements[y] {
                    if ax.iter().zip(ay).any(|(s, t)| s.1 != t.0) {
                        continue;
                    }
                    let z: Option<Vec<KTriple>> = ax
                        .iter()
                        .zip(ay)
                        .map(|(s, t)| {
                            let tr = (s.0, t.1, s.2 + t.2);
                            valid(tr).then_some(tr)
                        })
                        .collect();
                    if let Some(mut z) = z {
                        z.sort_unstable();
                        *counts.entry(index[&z]).or_default() += 1;
                    }
                }
            }
            let mut row: Vec<(usize, u64)> = counts
                .into_iter()
                .map(|(z, c)| {
                    // Every arrangement of Z is hit equally often.
                    debug_assert_eq!(c % sizes[z], 0);
                    (z, c / sizes[z])
                })
                .filter(|(_, c)| *c != 0)
                .collect();
            row.sort_unstable();
            if !row.is_empty() {
                table.insert((x, y), row);
            }
        }
    }
    Ok(GradedStructureConstants { orbits, table })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::diagram_tableaux::orbits::k_to_j;
    use crate::diagram_tableaux::Origin;
    use crate::exact_linear::{Scalar, SparseOperator};
    use crate::tensor_representation::{xi_operator, TensorSpace};

    fn xi_of(space: &TensorSpace, orbit: &[KTriple]) -> SparseOperator {
        let (h, k): (Vec<usize>, Vec<usize>) = orbit
            .iter()
            .map(|t| k_to_j(space.diagram(), *t).unwrap())
            .unzip();
        xi_operator(space, &h, &k).unwrap()
    }

    #[test]
    fn degree_one_rule() {
        let dg = PartitionDiagram::new(&[2, 3, 4]).unwrap();
        let g = graded_structure_constants(&dg, 1, 10_000).unwrap();
        let pos = |t: KTriple| g.orbits.iter().position(|o| o == &vec![t]).unwrap();
        assert_eq!(
            g.product(pos((3, 2, 0)), pos((2, 3, 1))),
            &[(pos((3, 3, 1)), 1)]
        );
        for x in 0..g.len() {
            for y in 0..g.len() {
                let (a, b) = (g.orbits[x][0], g.orbits[y][0]);
                let expect = if a.1 == b.0 && a.2 + b.2 < dg.part(b.1) {
                    vec![(pos((a.0, b.1, a.2 + b.2)), 1)]
                } else {
                    vec![]
                };
                assert_eq!(g.product(x, y), expect.as_slice());
            }
        }
    }

    #[test]
    fn matches_operator_products() {
        for (parts, d) in [(&[1, 2][..], 2), (&[2, 2], 2), (&[1, 2], 3)] {
            let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
            let v = TensorSpace::new(dg.clone(), Origin::zero(dg.level()), d, 10_000).unwrap();
            let g = graded_structure_constants(&dg, d, 10_000).unwrap();
            let ops: Vec<SparseOperator> = g.orbits.iter().map(|o| xi_of(&v, o)).collect();
            for x in 0..g.len() {
                for y in 0..g.len() {
                    let mut expect = SparseOperator::zero(v.dim());
                    for (z, c) in g.product(x, y) {
                        expect = expect.add_scaled(&Scalar::from_int(*c as i64), &ops[*z]);
                    }
                    assert_eq!(ops[x].mul(&ops[y]), expect);
                }
            }
            let unit: Vec<(usize, u64)> = (0..g.len())
                .filter(|z| g.orbits[*z].iter().all(|t| t.0 == t.1 && t.2 == 0))
                .map(|z| (z, 1))
                .collect();
            let mut sum = SparseOperator::zero(v.dim());
            for (z, _) in &unit {
                sum = sum.add(&ops[*z]);
            }
            assert_eq!(sum, SparseOperator::identity(v.dim()));
        }
    }

    #[test]
    fn associative_small() {
        let dg = PartitionDiagram::new(&[1, 2]).unwrap();
        assert!(graded_structure_constants(&dg, 2, 1000)
            .unwrap()
            .is_associative());
    }
}
