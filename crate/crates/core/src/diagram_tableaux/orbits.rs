//! The index sets `J` and `K`, their `d`-fold powers and `S_d`-orbits.

use serde::{Deserialize, Serialize};

use super::diagram::PartitionDiagram;
use super::multi_index::{multisets, MultiIndex};

/// A triple `(row i, row j, r)` of `K`, rows 1-based.
pub type KTriple = (usize, usize, usize);

/// Which of the two equivalent index sets to enumerate orbits of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitKind {
    J,
    K,
}

/// The set `J = {(i, j) : col(i) ≤ col(j), R(j) = ∅}` in lexicographic order.
pub fn j_set(diagram: &PartitionDiagram) -> Vec<(usize, usize)> {
    let n = diagram.boxes();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if diagram.right(j).is_none() && diagram.col(i) <= diagram.col(j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The set `K = {(i, j, r) : s_{i,j} ≤ r < p_j}` in lexicographic order.
pub fn k_set(diagram: &PartitionDiagram) -> Vec<KTriple> {
    let n = diagram.rows();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for r in diagram.shift(i, j)..diagram.part(j) {
                out.push((i, j, r));
            }
        }
    }
    out
}

/// `(i, j) ↦ (row(i), row(j), col(j) − col(i))`.
pub fn j_to_k(diagram: &PartitionDiagram, (i, j): (usize, usize)) -> KTriple {
    (
        diagram.row(i),
        diagram.row(j),
        diagram.col(j) - diagram.col(i),
    )
}

/// Inverse of [`j_to_k`].
pub fn k_to_j(diagram: &PartitionDiagram, (a, b, r): KTriple) -> Option<(usize, usize)> {
    let j = diagram.row_end(b);
    let ci = diagram.col(j).checked_sub(r)?;
    let i = diagram.box_at(a, ci)?;
    Some((i, j))
}

/// Whether `(h, k)` lies in `J^d`.
pub fn in_j_d(diagram: &PartitionDiagram, h: &[usize], k: &[usize]) -> bool {
    h.len() == k.len()
        && h.iter()
            .zip(k)
            .all(|(a, b)| diagram.right(*b).is_none() && diagram.col(*a) <= diagram.col(*b))
}

/// The canonical representative of the `S_d`-orbit of a pair of multi-indices:
/// the pairs `(h_t, k_t)` sorted lexicographically.
pub fn canonical_pair(h: &[usize], k: &[usize]) -> (MultiIndex, MultiIndex) {
    let mut pairs: Vec<(usize, usize)> = h.iter().copied().zip(k.iter().copied()).collect();
    pairs.sort_unstable();
    pairs.into_iter().unzip()
}

/// Orbit representatives of `J^d / S_d` together with their images in
/// `K^d / S_d` under the entrywise bijection.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    pub j_reps: Vec<(MultiIndex, MultiIndex)>,
    pub k_reps: Vec<Vec<KTriple>>,
}

impl OrbitTable {
    pub fn len(&self) -> usize {
        self.j_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j_reps.is_empty()
    }
}

/// All orbit representatives, ordered lexicographically in the chosen kind.
pub fn orbit_reps(diagram: &PartitionDiagram, d: usize, kind: OrbitKind) -> OrbitTable {
    let j = j_set(diagram);
    let mut rows: Vec<((MultiIndex, MultiIndex), Vec<KTriple>)> = multisets(j.len(), d)
        .into_iter()
        .map(|ms| {
            let pairs: Vec<(usize, usize)> = ms.iter().map(|x| j[*x]).collect();
            let mut ks: Vec<KTriple> = pairs.iter().map(|p| j_to_k(diagram, *p)).collect();
            ks.sort_unstable();
            (pairs.into_iter().unzip(), ks)
        })
        .collect();
    if kind == OrbitKind::K {
        rows.sort_by(|a, b| a.1.cmp(&b.1));
    }
    let (j_reps, k_reps) = rows.into_iter().unzip();
    OrbitTable { j_reps, k_reps }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_and_k_are_in_bijection() {
        for parts in [&[1][..], &[1, 2], &[2, 2], &[1, 1, 2], &[2, 3, 4]] {
            let d = PartitionDiagram::new(parts).unwrap();
            let j = j_set(&d);
            let mut image: Vec<KTriple> = j.iter().map(|p| j_to_k(&d, *p)).collect();
            image.sort_unstable();
            assert_eq!(image, k_set(&d));
            for p in &j {
                assert_eq!(k_to_j(&d, j_to_k(&d, *p)), Some(*p));
            }
            let expect: usize = d
                .parts()
                .iter()
                .flat_map(|a| d.parts().iter().map(move |b| (*a).min(*b)))
                .sum();
            assert_eq!(j.len(), expect);
        }
    }

    #[test]
    fn orbit_counts() {
        let d = PartitionDiagram::new(&[2, 3, 4]).unwrap();
        assert_eq!(orbit_reps(&d, 1, OrbitKind::J).len(), 23);
        assert_eq!(orbit_reps(&d, 2, OrbitKind::K).len(), 276);
        let zero = orbit_reps(&d, 0, OrbitKind::J);
        assert_eq!(zero.len(), 1);
        assert!(zero.j_reps[0].0.is_empty());
    }

    #[test]
    fn canonical_pair_sorts_jointly() {
        let (h, k) = canonical_pair(&[3, 1, 3], &[0, 5, 2]);
        assert_eq!(h, vec![1, 3, 3]);
        assert_eq!(k, vec![5, 0, 2]);
    }
}
