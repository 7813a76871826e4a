//! Incremental row echelon forms over a field, and spans of operators.

use std::collections::{BTreeMap, HashMap};

use super::field::Field;
use super::scalar::Scalar;
use super::sparse::{SparseMatrix, SparseOperator, SparseVec};
use super::LinearError;

/// A semi-echelon basis: every stored row has leading coefficient one and the
/// leading keys are pairwise distinct.
///
/// When tracking is enabled each row also records its expression in terms of
/// the inserted vectors, so dependent insertions yield explicit relations.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    pivots: HashMap<usize, usize>,
    track: Option<Vec<SparseVec<F>>>,
    inserted: usize,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: HashMap::new(),
            track: None,
            inserted: 0,
        }
    }

    /// An echelon form that records how each row arose from the inputs.
    pub fn tracking() -> Self {
        Echelon {
            track: Some(Vec::new()),
            ..Self::new()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    fn reduce_map(&self, v: &SparseVec<F>, with_track: bool, stop_early: bool) -> Reduced<F> {
        let mut acc: BTreeMap<usize, F> = v.entries().iter().cloned().collect();
        let mut comb: BTreeMap<usize, F> = BTreeMap::new();
        let mut cursor = 0usize;
        loop {
            let next = acc.range(cursor..).next().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            match self.pivots.get(&k) {
                Some(&ri) => {
                    let row = &self.rows[ri];
                    for (rk, rv) in row.entries() {
                        let e = acc.entry(*rk).or_insert_with(F::zero);
                        *e = e.sub(&rv.mul(&c));
                        if e.is_zero() {
                            acc.remove(rk);
                        }
                    }
                    if with_track {
                        let t = &self.track.as_ref().expect("tracking enabled")[ri];
                        for (tk, tv) in t.entries() {
                            let e = comb.entry(*tk).or_insert_with(F::zero);
                            *e = e.sub(&tv.mul(&c));
                            if e.is_zero() {
                                comb.remove(tk);
                            }
                        }
                    }
                }
                None => {
                    if stop_early {
                        return Reduced {
                            rest: acc,
                            comb,
                            independent_at: Some(k),
                        };
                    }
                }
            }
            cursor = k + 1;
        }
        let independent_at = acc.keys().next().copied();
        Reduced {
            rest: acc,
            comb,
            independent_at,
        }
    }

    /// True iff `v` lies in the span of the stored rows.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce_map(v, false, true).independent_at.is_none()
    }

    /// Fully reduces `v` modulo the span, returning the remainder.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let r = self.reduce_map(v, false, false);
        SparseVec::from_sorted(r.rest.into_iter().collect())
    }

    /// Inserts `v`. Returns `None` if it was independent of the current rows,
    /// otherwise (when tracking) the relation `v = Σ coeff_k · input_k`.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let id = self.inserted;
        self.inserted += 1;
        let tracking = self.track.is_some();
        let r = self.reduce_map(v, tracking, true);
        match r.independent_at {
            None => {
                if tracking {
                    let rel: Vec<(usize, F)> =
                        r.comb.into_iter().map(|(k, c)| (k, c.neg())).collect();
                    Some(SparseVec::from_sorted(rel))
                } else {
                    Some(SparseVec::new())
                }
            }
            Some(k) => {
                let lead = r.rest[&k].clone();
                let inv = lead.inv();
                let row: Vec<(usize, F)> = r
                    .rest
                    .into_iter()
                    .map(|(kk, c)| (kk, c.mul(&inv)))
                    .collect();
                self.pivots.insert(k, self.rows.len());
                self.rows.push(SparseVec::from_sorted(row));
                if let Some(track) = self.track.as_mut() {
                    let mut comb = r.comb;
                    comb.insert(id, F::one());
                    let t: Vec<(usize, F)> =
                        comb.into_iter().map(|(kk, c)| (kk, c.mul(&inv))).collect();
                    track.push(SparseVec::from_sorted(t));
                }
                None
            }
        }
    }

    /// Inserts `v` and reports whether it increased the rank.
    pub fn push(&mut self, v: &SparseVec<F>) -> bool {
        self.insert(v).is_none()
    }

    /// Reduced row echelon form: rows sorted by leading key, each leading key
    /// absent from every other row.
    pub fn rref(&self) -> Vec<SparseVec<F>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].leading().map(|e| e.0));
        let mut out: Vec<SparseVec<F>> = Vec::with_capacity(order.len());
        let mut lead_pos: HashMap<usize, usize> = HashMap::new();
        for &i in order.iter().rev() {
            let mut acc: BTreeMap<usize, F> = self.rows[i].entries().iter().cloned().collect();
            let lead = *acc.keys().next().expect("nonzero row");
            let keys: Vec<usize> = acc.keys().copied().filter(|k| *k != lead).collect();
            for k in keys {
                let Some(&p) = lead_pos.get(&k) else { continue };
                let Some(c) = acc.get(&k).cloned() else {
                    continue;
                };
                for (rk, rv) in out[p].entries() {
                    let e = acc.entry(*rk).or_insert_with(F::zero);
                    *e = e.sub(&rv.mul(&c));
                    if e.is_zero() {
                        acc.remove(rk);
                    }
                }
            }
            lead_pos.insert(lead, out.len());
            out.push(SparseVec::from_sorted(acc.into_iter().collect()));
        }
        out.reverse();
        out
    }
}

struct Reduced<F> {
    rest: BTreeMap<usize, F>,
    comb: BTreeMap<usize, F>,
    independent_at: Option<usize>,
}

/// Rank of a family of sparse vectors.
pub fn rank<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.push(v);
    }
    e.rank()
}

/// A linear span of square operators of a fixed dimension, stored as an echelon
/// form of their flattened entries ordered by (row, col).
#[derive(Clone, Debug)]
pub struct OperatorSpan<F = Scalar> {
    dim: usize,
    echelon: Echelon<F>,
}

impl<F: Field> OperatorSpan<F> {
    pub fn new(dim: usize) -> Self {
        OperatorSpan {
            dim,
            echelon: Echelon::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Adds an operator; returns whether the rank grew.
    pub fn push(&mut self, op: &SparseMatrix<F>) -> Result<bool, LinearError> {
        if op.dim() != self.dim {
            return Err(LinearError::DimensionMismatch {
                expected: self.dim,
                found: op.dim(),
            });
        }
        Ok(self.echelon.push(&op.to_flat()))
    }

    pub fn contains(&self, op: &SparseMatrix<F>) -> bool {
        op.dim() == self.dim && self.echelon.contains(&op.to_flat())
    }

    /// True iff every operator of `other` lies in this span.
    pub fn contains_span(&self, other: &OperatorSpan<F>) -> bool {
        other
            .echelon
            .rows()
            .iter()
            .all(|r| self.echelon.contains(r))
    }

    /// Equality of spans.
    pub fn same_span(&self, other: &OperatorSpan<F>) -> bool {
        self.rank() == other.rank() && self.contains_span(other)
    }

    /// The basis in reduced row echelon form.
    pub fn basis(&self) -> Vec<SparseMatrix<F>> {
        self.echelon
            .rref()
            .iter()
            .map(|r| SparseMatrix::from_flat(self.dim, r))
            .collect()
    }

    /// Basis rows as stored (semi-echelon), cheaper than [`Self::basis`].
    pub fn raw_basis(&self) -> Vec<SparseMatrix<F>> {
        self.echelon
            .rows()
            .iter()
            .map(|r| SparseMatrix::from_flat(self.dim, r))
            .collect()
    }
}

/// Echelonized span of a list of operators.
pub fn span<F: Field>(dim: usize, ops: &[SparseMatrix<F>]) -> Result<OperatorSpan<F>, LinearError> {
    let mut s = OperatorSpan::new(dim);
    for op in ops {
        s.push(op)?;
    }
    Ok(s)
}

/// Rank of the linear span of a family of operators.
pub fn operator_rank(ops: &[SparseOperator]) -> usize {
    let mut e = Echelon::new();
    for op in ops {
        e.push(&op.to_flat());
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(p: &[(usize, i64)]) -> SparseVec<Scalar> {
        SparseVec::from_pairs(p.iter().map(|&(k, v)| (k, Scalar::from_int(v))).collect())
    }

    #[test]
    fn identity_and_double() {
        let i = SparseOperator::identity(3);
        let s = span(3, &[i.clone(), i.scale(&Scalar::from_int(2))]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(span::<Scalar>(3, &[]).unwrap().rank(), 0);
    }

    #[test]
    fn tracked_relation() {
        let mut e = Echelon::tracking();
        assert!(e.insert(&sv(&[(0, 1), (1, 1)])).is_none());
        assert!(e.insert(&sv(&[(1, 1), (2, 1)])).is_none());
        let rel = e.insert(&sv(&[(0, 2), (1, 3), (2, 1)])).unwrap();
        assert_eq!(rel.get(0), Scalar::from_int(2));
        assert_eq!(rel.get(1), Scalar::from_int(1));
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new();
        e.push(&sv(&[(0, 1), (1, 2), (2, 3)]));
        e.push(&sv(&[(1, 1), (2, 1)]));
        let r = e.rref();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].get(1), Scalar::zero());
        assert!(e.contains(&sv(&[(0, 1), (1, 3), (2, 4)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let mut s = OperatorSpan::new(2);
        assert!(s.push(&SparseOperator::identity(3)).is_err());
    }
}
