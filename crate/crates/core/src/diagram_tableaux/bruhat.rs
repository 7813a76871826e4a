//! The Bruhat order on column strict tableaux.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::exact_linear::Scalar;

use super::tableau::{partial_lt, Tableau};
use super::DiagramError;

/// Sorts each column so entries decrease from top to bottom; `None` if the
/// result is not column strict.
fn resort_columns(t: &Tableau, entries: &mut [Scalar]) -> Option<()> {
    let d = t.diagram();
    for j in 1..=d.level() {
        let boxes = d.column_boxes(j);
        let mut vals: Vec<Scalar> = boxes.iter().map(|b| entries[*b].clone()).collect();
        vals.sort_by(|a, b| b.cmp(a));
        if !vals.windows(2).all(|w| partial_lt(&w[1], &w[0])) {
            return None;
        }
        for (b, v) in boxes.iter().zip(vals) {
            entries[*b] = v;
        }
    }
    Some(())
}

/// Tableaux reachable from `t` by one basic move: swap an entry with a smaller
/// entry in a column further right, then re-sort the columns.
pub fn lower_covers(t: &Tableau) -> Vec<Tableau> {
    let d = t.diagram();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for x in 0..d.boxes() {
        for y in 0..d.boxes() {
            if d.col(y) <= d.col(x) || !partial_lt(t.entry(y), t.entry(x)) {
                continue;
            }
            let mut e = t.entries().to_vec();
            e.swap(x, y);
            if resort_columns(t, &mut e).is_some() {
                let nt = Tableau::new(t.diagram_arc().clone(), e).expect("same shape");
                if seen.insert(nt.entries().to_vec()) {
                    out.push(nt);
                }
            }
        }
    }
    out
}

/// Memoized down-sets of the Bruhat order.
#[derive(Default)]
pub struct BruhatOrder {
    below: HashMap<Vec<Scalar>, HashSet<Vec<Scalar>>>,
}

impl BruhatOrder {
    pub fn new() -> Self {
        Self::default()
    }

    /// All tableaux `≤ b`.
    pub fn down_set(&mut self, b: &Tableau) -> &HashSet<Vec<Scalar>> {
        let key = b.entries().to_vec();
        if !self.below.contains_key(&key) {
            let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
            let mut queue = VecDeque::new();
            seen.insert(key.clone());
            queue.push_back(b.clone());
            while let Some(t) = queue.pop_front() {
                for s in lower_covers(&t) {
                    if seen.insert(s.entries().to_vec()) {
                        queue.push_back(s);
                    }
                }
            }
            self.below.insert(key.clone(), seen);
        }
        &self.below[&key]
    }

    /// `a ≤ b`.
    pub fn leq(&mut self, a: &Tableau, b: &Tableau) -> Result<bool, DiagramError> {
        check_comparable(a, b)?;
        Ok(self.down_set(b).contains(a.entries()))
    }
}

fn check_comparable(a: &Tableau, b: &Tableau) -> Result<(), DiagramError> {
    if a.diagram() != b.diagram() {
        return Err(DiagramError::Precondition(
            "tableaux of different shapes".into(),
        ));
    }
    if !a.is_column_strict() || !b.is_column_strict() {
        return Err(DiagramError::Precondition(
            "Bruhat order needs column strict tableaux".into(),
        ));
    }
    if a.content() != b.content() {
        return Err(DiagramError::Precondition(
            "Bruhat order needs equal contents".into(),
        ));
    }
    Ok(())
}

/// `a ≤ b` in the Bruhat order.
pub fn bruhat_leq(a: &Tableau, b: &Tableau) -> Result<bool, DiagramError> {
    BruhatOrder::new().leq(a, b)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::diagram_tableaux::diagram::PartitionDiagram;

    /// Builds a tableau from its columns listed bottom to top.
    pub(crate) fn from_columns(d: &Arc<PartitionDiagram>, cols: &[&[i64]]) -> Tableau {
        let mut e = vec![Scalar::zero(); d.boxes()];
        for (j, col) in cols.iter().enumerate() {
            let boxes = d.column_boxes(j + 1);
            for (b, v) in boxes.iter().rev().zip(col.iter()) {
                e[*b] = Scalar::from_int(*v);
            }
        }
        Tableau::new(d.clone(), e).unwrap()
    }

    #[test]
    fn displayed_chain() {
        let d = Arc::new(PartitionDiagram::new(&[2, 3, 3]).unwrap());
        let chain = [
            from_columns(&d, &[&[1, 3, 4], &[1, 4, 6], &[2, 5]]),
            from_columns(&d, &[&[1, 3, 4], &[1, 4, 5], &[2, 6]]),
            from_columns(&d, &[&[1, 3, 4], &[1, 2, 5], &[4, 6]]),
            from_columns(&d, &[&[1, 2, 3], &[1, 4, 5], &[4, 6]]),
        ];
        let mut order = BruhatOrder::new();
        for w in chain.windows(2) {
            assert!(order.leq(&w[1], &w[0]).unwrap());
            assert!(!order.leq(&w[0], &w[1]).unwrap());
        }
        assert!(order.leq(&chain[3], &chain[0]).unwrap());
        assert!(order.leq(&chain[2], &chain[2]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let d = Arc::new(PartitionDiagram::new(&[1, 2]).unwrap());
        let a = Tableau::from_ints(d.clone(), &[0, -1, 0]).unwrap();
        let b = Tableau::from_ints(d.clone(), &[0, -1, 1]).unwrap();
        assert!(bruhat_leq(&a, &b).is_err());
        let bad = Tableau::from_ints(d, &[0, 0, 0]).unwrap();
        assert!(bruhat_leq(&bad, &bad).is_err());
    }
}
