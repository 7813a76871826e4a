//! Sparse vectors and column-major sparse square matrices.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::scalar::Scalar;
use super::LinearError;

/// A sparse vector: strictly increasing keys, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    /// Builds from arbitrary `(key, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, F)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(pairs.len());
        for (k, v) in pairs {
            match entries.last_mut() {
                Some(last) if last.0 == k => last.1 = last.1.add(&v),
                _ => entries.push((k, v)),
            }
        }
        entries.retain(|e| !e.1.is_zero());
        SparseVec { entries }
    }

    /// Builds from pairs already sorted by key with no duplicates or zeros.
    pub fn from_sorted(entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero()));
        SparseVec { entries }
    }

    pub fn unit(key: usize) -> Self {
        SparseVec {
            entries: vec![(key, F::one())],
        }
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: usize) -> F {
        match self.entries.binary_search_by_key(&key, |e| e.0) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(k, v)| (*k, v.mul(c))).collect(),
        }
    }

    /// Returns `self + c * other`.
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, b[j].1.mul(c)));
                j += 1;
            } else {
                let v = a[i].1.add(&b[j].1.mul(c));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&F::one().neg(), other)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<SparseVec<G>> {
        let mut out = Vec::with_capacity(self.entries.len());
        for (k, v) in &self.entries {
            let g = f(v)?;
            if !g.is_zero() {
                out.push((*k, g));
            }
        }
        Some(SparseVec { entries: out })
    }
}

/// A square sparse matrix stored by columns; column `j` lists `(row, value)`
/// with strictly increasing rows and no zeros.
///
/// Column convention: the matrix of a right action `v_i · h` has the image of
/// `v_i` as its `i`th column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix<F> {
    dim: usize,
    cols: Vec<Vec<(u32, F)>>,
}

/// Exact-rational operator on a tensor space.
pub type SparseOperator = SparseMatrix<Scalar>;

impl<F: Field> SparseMatrix<F> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j as u32, F::one())]).collect(),
        }
    }

    pub fn scalar(dim: usize, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(dim);
        }
        SparseMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j as u32, c.clone())]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(
        dim: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Self {
        let mut raw: Vec<Vec<(usize, F)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet out of range");
            raw[c].push((r, v));
        }
        let cols = raw
            .into_iter()
            .map(|col| {
                SparseVec::from_pairs(col)
                    .into_entries()
                    .into_iter()
                    .map(|(r, v)| (r as u32, v))
                    .collect()
            })
            .collect();
        SparseMatrix { dim, cols }
    }

    /// Builds from per-column images given as sparse vectors.
    pub fn from_columns(dim: usize, columns: Vec<SparseVec<F>>) -> Self {
        assert_eq!(columns.len(), dim);
        let cols = columns
            .into_iter()
            .map(|c| {
                c.into_entries()
                    .into_iter()
                    .map(|(r, v)| (r as u32, v))
                    .collect()
            })
            .collect();
        SparseMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(u32, F)] {
        &self.cols[j]
    }

    pub fn column_vec(&self, j: usize) -> SparseVec<F> {
        SparseVec::from_sorted(
            self.cols[j]
                .iter()
                .map(|(r, v)| (*r as usize, v.clone()))
                .collect(),
        )
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(i) => self.cols[c][i].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// All entries as `(row, col, value)` in (row, col) lexicographic order.
    pub fn triplets(&self) -> Vec<(usize, usize, F)> {
        let mut t: Vec<(usize, usize, F)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v.clone())))
            .collect();
        t.sort_by_key(|e| (e.0, e.1));
        t
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(c, col)| col.iter().all(|(r, _)| *r as usize == c))
    }

    /// If this is a permutation matrix, the image index of each basis vector.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let mut img = Vec::with_capacity(self.dim);
        let mut seen = vec![false; self.dim];
        for col in &self.cols {
            if col.len() != 1 || !col[0].1.is_one() {
                return None;
            }
            let r = col[0].0 as usize;
            if seen[r] {
                return None;
            }
            seen[r] = true;
            img.push(r);
        }
        Some(img)
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut acc: Vec<F> = vec![F::zero(); self.dim];
        let mut touched: Vec<u32> = Vec::new();
        let mut mark = vec![false; self.dim];
        let mut cols = Vec::with_capacity(self.dim);
        for ocol in &other.cols {
            for (k, b) in ocol {
                for (r, a) in &self.cols[*k as usize] {
                    let ri = *r as usize;
                    if !mark[ri] {
                        mark[ri] = true;
                        touched.push(*r);
                    }
                    acc[ri] = acc[ri].add(&a.mul(b));
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for r in touched.drain(..) {
                let ri = r as usize;
                mark[ri] = false;
                let v = std::mem::replace(&mut acc[ri], F::zero());
                if !v.is_zero() {
                    col.push((r, v));
                }
            }
            cols.push(col);
        }
        SparseMatrix {
            dim: self.dim,
            cols,
        }
    }

    /// Returns `self + c * other`.
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| merge_columns(a, c, b))
            .collect();
        SparseMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&F::one().neg(), other)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseMatrix {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v.mul(c))).collect())
                .collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = self.mul(&acc);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(u32, F)>> = vec![Vec::new(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r as usize].push((c as u32, v.clone()));
            }
        }
        SparseMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for j in 0..self.dim {
            t = t.add(&self.get(j, j));
        }
        t
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut pairs = Vec::new();
        for (k, x) in v.entries() {
            for (r, a) in &self.cols[*k] {
                pairs.push((*r as usize, a.mul(x)));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Flattens into a vector keyed by `row * dim + col`, the lexicographic order
    /// on (row, col).
    pub fn to_flat(&self) -> SparseVec<F> {
        let pairs: Vec<(usize, F)> = self
            .triplets()
            .into_iter()
            .map(|(r, c, v)| (r * self.dim + c, v))
            .collect();
        SparseVec::from_sorted(pairs)
    }

    pub fn from_flat(dim: usize, v: &SparseVec<F>) -> Self {
        Self::from_triplets(
            dim,
            v.entries()
                .iter()
                .map(|(k, x)| (k / dim, k % dim, x.clone())),
        )
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<SparseMatrix<G>> {
        let mut cols = Vec::with_capacity(self.dim);
        for col in &self.cols {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let g = f(v)?;
                if !g.is_zero() {
                    out.push((*r, g));
                }
            }
            cols.push(out);
        }
        Some(SparseMatrix {
            dim: self.dim,
            cols,
        })
    }

    /// Restricts to the coordinates listed in `basis` (which must be stable).
    pub fn restrict(&self, basis: &[usize]) -> Result<Self, LinearError> {
        let mut pos = vec![usize::MAX; self.dim];
        for (i, b) in basis.iter().enumerate() {
            pos[*b] = i;
        }
        let mut cols = Vec::with_capacity(basis.len());
        for b in basis {
            let mut col = Vec::new();
            for (r, v) in &self.cols[*b] {
                let p = pos[*r as usize];
                if p == usize::MAX {
                    return Err(LinearError::NotInvariant);
                }
                col.push((p as u32, v.clone()));
            }
            col.sort_by_key(|e| e.0);
            cols.push(col);
        }
        Ok(SparseMatrix {
            dim: basis.len(),
            cols,
        })
    }
}

impl SparseMatrix<Scalar> {
    /// Reduces an exact operator modulo the prime of [`super::field::Fp`].
    pub fn to_fp(&self) -> Option<SparseMatrix<super::field::Fp>> {
        self.map_field(<super::field::Fp as Field>::from_scalar)
    }
}

fn merge_columns<F: Field>(a: &[(u32, F)], c: &F, b: &[(u32, F)]) -> Vec<(u32, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = b[j].1.mul(c);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.add(&b[j].1.mul(c));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// One `(row, col, value)` entry of an operator dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triplet {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    pub value: Scalar,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(dim: usize, t: &[(usize, usize, i64)]) -> SparseOperator {
        SparseOperator::from_triplets(dim, t.iter().map(|&(r, c, v)| (r, c, Scalar::from_int(v))))
    }

    #[test]
    fn product_matches_dense() {
        let a = m(3, &[(0, 1, 2), (2, 0, 1), (1, 1, -1)]);
        let b = m(3, &[(1, 2, 3), (0, 0, 1)]);
        let ab = a.mul(&b);
        for r in 0..3 {
            for c in 0..3 {
                let mut s = Scalar::zero();
                for k in 0..3 {
                    s += &a.get(r, k) * &b.get(k, c);
                }
                assert_eq!(ab.get(r, c), s);
            }
        }
    }

    #[test]
    fn flat_round_trip_and_permutation() {
        let p = m(3, &[(1, 0, 1), (2, 1, 1), (0, 2, 1)]);
        assert_eq!(p.as_permutation(), Some(vec![1, 2, 0]));
        assert_eq!(SparseOperator::from_flat(3, &p.to_flat()), p);
        assert_eq!(p.pow(3), SparseOperator::identity(3));
        assert!(SparseOperator::identity(4).is_diagonal());
    }

    #[test]
    fn vector_ops_cancel() {
        let v = SparseVec::from_pairs(vec![(3, Scalar::one()), (1, Scalar::from_int(2))]);
        assert!(v.sub(&v).is_empty());
        assert_eq!(v.leading().unwrap().0, 1);
    }
}
