//! λ-tableaux with rational entries, their classification and enumeration.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact_linear::Scalar;

use super::diagram::{Origin, PartitionDiagram};
use super::multi_index::{compositions, MultiIndex};
use super::DiagramError;

/// `a ≤ b` in the partial order `b − a ∈ ℕ`.
pub fn partial_leq(a: &Scalar, b: &Scalar) -> bool {
    (b - a).is_natural()
}

/// `a < b` in the partial order, i.e. `b − a` is a positive integer.
pub fn partial_lt(a: &Scalar, b: &Scalar) -> bool {
    a != b && partial_leq(a, b)
}

/// A filling of the boxes of λ by rationals, stored in column reading order
/// (entry `k` sits in box `k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    diagram: Arc<PartitionDiagram>,
    entries: Vec<Scalar>,
}

/// Membership flags of a tableau in the various tableau sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub column_strict: bool,
    pub standard: bool,
    pub in_col_c: bool,
    pub in_col_c_d: bool,
    pub in_std_c_d: bool,
    pub idempotent: bool,
}

impl Tableau {
    pub fn new(diagram: Arc<PartitionDiagram>, entries: Vec<Scalar>) -> Result<Self, DiagramError> {
        if entries.len() != diagram.boxes() {
            return Err(DiagramError::EntryCount {
                expected: diagram.boxes(),
                found: entries.len(),
            });
        }
        Ok(Tableau { diagram, entries })
    }

    pub fn from_ints(
        diagram: Arc<PartitionDiagram>,
        entries: &[i64],
    ) -> Result<Self, DiagramError> {
        Self::new(
            diagram,
            entries.iter().map(|x| Scalar::from_int(*x)).collect(),
        )
    }

    pub fn zero(diagram: Arc<PartitionDiagram>) -> Self {
        let n = diagram.boxes();
        Tableau {
            diagram,
            entries: vec![Scalar::zero(); n],
        }
    }

    /// The ground-state tableau `A₀`: row `i` filled with `1 − i`.
    pub fn ground_state(diagram: Arc<PartitionDiagram>) -> Self {
        let entries = (0..diagram.boxes())
            .map(|b| Scalar::from_int(1 - diagram.row(b) as i64))
            .collect();
        Tableau { diagram, entries }
    }

    /// `A_c`: the ground state with `c_j` added down column `j`.
    pub fn origin_tableau(diagram: Arc<PartitionDiagram>, c: &Origin) -> Self {
        let entries = (0..diagram.boxes())
            .map(|b| c.get(diagram.col(b)) + &Scalar::from_int(1 - diagram.row(b) as i64))
            .collect();
        Tableau { diagram, entries }
    }

    pub fn diagram(&self) -> &PartitionDiagram {
        &self.diagram
    }

    pub fn diagram_arc(&self) -> &Arc<PartitionDiagram> {
        &self.diagram
    }

    pub fn entry(&self, b: usize) -> &Scalar {
        &self.entries[b]
    }

    /// The column reading `γ(A)`.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Integer entries, if all entries are integers that fit.
    pub fn int_entries(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|e| e.to_i64()).collect()
    }

    /// Natural-number entries as counts `a_i`.
    pub fn counts(&self) -> Result<Vec<usize>, DiagramError> {
        self.entries
            .iter()
            .map(|e| {
                if e.is_natural() {
                    Ok(e.to_i64().expect("small") as usize)
                } else {
                    Err(DiagramError::NotNatural(e.to_string()))
                }
            })
            .collect()
    }

    /// The content `θ(A)` as a sorted multiset.
    pub fn content(&self) -> Vec<Scalar> {
        let mut c = self.entries.clone();
        c.sort();
        c
    }

    pub fn add(&self, other: &Tableau) -> Tableau {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Tableau {
            diagram: self.diagram.clone(),
            entries,
        }
    }

    pub fn sub(&self, other: &Tableau) -> Tableau {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Tableau {
            diagram: self.diagram.clone(),
            entries,
        }
    }

    /// Adds the integer `r` to every entry.
    pub fn shifted(&self, r: i64) -> Tableau {
        let r = Scalar::from_int(r);
        Tableau {
            diagram: self.diagram.clone(),
            entries: self.entries.iter().map(|a| a + &r).collect(),
        }
    }

    /// Entries of column `j`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<Scalar> {
        self.diagram
            .column_boxes(col)
            .into_iter()
            .map(|b| self.entries[b].clone())
            .collect()
    }

    /// Strictly increasing from bottom to top in every column.
    pub fn is_column_strict(&self) -> bool {
        (1..=self.diagram.level()).all(|j| {
            let col = self.column(j);
            col.windows(2).all(|w| partial_lt(&w[1], &w[0]))
        })
    }

    /// Column strict, and no row has `x < y` with `x` to the right of `y`.
    pub fn is_standard(&self) -> bool {
        self.is_column_strict()
            && (1..=self.diagram.rows()).all(|r| {
                let row = self.diagram.row_boxes(r);
                row.iter().enumerate().all(|(a, ba)| {
                    row[a + 1..]
                        .iter()
                        .all(|bb| !partial_lt(&self.entries[*bb], &self.entries[*ba]))
                })
            })
    }

    /// Column strict with column `j` entries in `c_j + ℤ`.
    pub fn in_col_c(&self, c: &Origin) -> bool {
        self.is_column_strict()
            && (0..self.diagram.boxes())
                .all(|b| (&self.entries[b] - c.get(self.diagram.col(b))).is_integer())
    }

    /// Nonnegative integer entries summing to `d`.
    pub fn in_tab_d(&self, d: usize) -> bool {
        self.entries.iter().all(|e| e.is_natural())
            && self.entries.iter().cloned().sum::<Scalar>() == Scalar::from(d)
    }

    /// In `Col_c` with `A − A_c ∈ Tab^d`.
    pub fn in_col_c_d(&self, c: &Origin, d: usize) -> bool {
        self.in_col_c(c)
            && self
                .sub(&Tableau::origin_tableau(self.diagram.clone(), c))
                .in_tab_d(d)
    }

    /// Nonnegative integers supported on the rightmost box of each row.
    pub fn is_idempotent(&self) -> bool {
        (0..self.diagram.boxes()).all(|b| {
            self.entries[b].is_natural()
                && (self.entries[b].is_zero() || self.diagram.right(b).is_none())
        })
    }

    /// Idempotent, entries at most one, nonzero entries only in column `l`.
    pub fn is_special(&self) -> bool {
        self.is_idempotent()
            && (0..self.diagram.boxes()).all(|b| {
                self.entries[b].is_zero()
                    || (self.entries[b].is_one() && self.diagram.col(b) == self.diagram.level())
            })
    }

    pub fn classify(&self, c: &Origin, d: usize) -> Classification {
        let column_strict = self.is_column_strict();
        let standard = self.is_standard();
        let in_col_c = self.in_col_c(c);
        let in_col_c_d = self.in_col_c_d(c, d);
        Classification {
            column_strict,
            standard,
            in_col_c,
            in_col_c_d,
            in_std_c_d: standard && in_col_c_d,
            idempotent: self.is_idempotent(),
        }
    }

    /// `i(A) = (1^{a₁}, 2^{a₂}, …)` (0-based boxes) for `A ∈ Tab^d`.
    pub fn index_tuple(&self) -> Result<MultiIndex, DiagramError> {
        let counts = self.counts()?;
        Ok(counts
            .iter()
            .enumerate()
            .flat_map(|(b, a)| std::iter::repeat_n(b, *a))
            .collect())
    }

    /// Sum of the entries on each row.
    pub fn row_sums(&self) -> Vec<Scalar> {
        (1..=self.diagram.rows())
            .map(|r| {
                self.diagram
                    .row_boxes(r)
                    .iter()
                    .map(|b| self.entries[*b].clone())
                    .sum()
            })
            .collect()
    }
}

/// `Tab^d(λ)`: all tableaux with natural entries summing to `d`.
pub fn tab_d(diagram: &Arc<PartitionDiagram>, d: usize) -> Vec<Tableau> {
    compositions(d, diagram.boxes())
        .into_iter()
        .map(|v| Tableau {
            diagram: diagram.clone(),
            entries: v.into_iter().map(Scalar::from).collect(),
        })
        .collect()
}

/// `Col^d_c(λ)`: `A_c + T` with `T ∈ Tab^d` weakly decreasing down each column.
pub fn col_c_d(diagram: &Arc<PartitionDiagram>, c: &Origin, d: usize) -> Vec<Tableau> {
    let ac = Tableau::origin_tableau(diagram.clone(), c);
    tab_d(diagram, d)
        .into_iter()
        .filter(|t| {
            (1..=diagram.level()).all(|j| {
                let col = t.column(j);
                col.windows(2).all(|w| w[0] >= w[1])
            })
        })
        .map(|t| ac.add(&t))
        .collect()
}

/// `Std^d_c(λ)`.
pub fn std_c_d(diagram: &Arc<PartitionDiagram>, c: &Origin, d: usize) -> Vec<Tableau> {
    col_c_d(diagram, c, d)
        .into_iter()
        .filter(|a| a.is_standard())
        .collect()
}

/// `Idem^d(λ)`: distributions of `d` over the rightmost boxes of the rows.
pub fn idem_d(diagram: &Arc<PartitionDiagram>, d: usize) -> Vec<Tableau> {
    compositions(d, diagram.rows())
        .into_iter()
        .map(|v| {
            let mut entries = vec![Scalar::zero(); diagram.boxes()];
            for (r, a) in v.iter().enumerate() {
                entries[diagram.row_end(r + 1)] = Scalar::from(*a);
            }
            Tableau {
                diagram: diagram.clone(),
                entries,
            }
        })
        .collect()
}

/// Special tableaux in `Idem^d(λ)`, in lexicographic order of row choices.
pub fn special_tableaux(diagram: &Arc<PartitionDiagram>, d: usize) -> Vec<Tableau> {
    idem_d(diagram, d)
        .into_iter()
        .filter(|t| t.is_special())
        .collect()
}

/// If `A ∈ Col^d_c`, `B ∈ Col_c` and `θ(A) = θ(B)`, then `B ∈ Col^d_c`.
pub fn content_equal_implies_degree(
    a: &Tableau,
    b: &Tableau,
    c: &Origin,
    d: usize,
) -> Result<bool, DiagramError> {
    if !a.in_col_c_d(c, d) || !b.in_col_c(c) || a.content() != b.content() {
        return Err(DiagramError::Precondition(
            "need A in Col^d_c, B in Col_c, equal contents".into(),
        ));
    }
    Ok(b.in_col_c_d(c, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(p: &[usize]) -> Arc<PartitionDiagram> {
        Arc::new(PartitionDiagram::new(p).unwrap())
    }

    #[test]
    fn ground_state_rows() {
        let d = diag(&[2, 3, 4]);
        let a0 = Tableau::ground_state(d.clone());
        for b in 0..9 {
            assert_eq!(a0.entry(b), &Scalar::from_int(1 - d.row(b) as i64));
        }
        let c = Origin::zero(4);
        let cls = a0.classify(&c, 0);
        assert!(cls.in_std_c_d && cls.in_col_c_d && cls.standard);
    }

    #[test]
    fn origin_tableau_is_standard_for_split() {
        let d = diag(&[1, 2]);
        let c = Origin::new(vec![Scalar::zero(), Scalar::new(1, 2)]).unwrap();
        let ac = Tableau::origin_tableau(d, &c);
        assert!(ac.classify(&c, 0).in_std_c_d);
    }

    #[test]
    fn idempotent_predicate() {
        let d = diag(&[1, 2]);
        assert!(Tableau::from_ints(d.clone(), &[0, 0, 2])
            .unwrap()
            .is_idempotent());
        assert!(!Tableau::from_ints(d.clone(), &[0, 1, 0])
            .unwrap()
            .is_idempotent());
        assert!(Tableau::from_ints(d.clone(), &[1, 0, 0])
            .unwrap()
            .is_idempotent());
        assert!(
            Tableau::from_ints(d, &[1, 0, 0])
                .unwrap()
                .index_tuple()
                .unwrap()
                == vec![0]
        );
    }

    #[test]
    fn enumeration_sizes() {
        let d = diag(&[2, 2]);
        assert_eq!(tab_d(&d, 2).len(), 10);
        assert_eq!(idem_d(&d, 2).len(), 3);
        assert_eq!(special_tableaux(&d, 2).len(), 1);
        assert_eq!(special_tableaux(&d, 3).len(), 0);
        let c = Origin::zero(2);
        for a in col_c_d(&d, &c, 2) {
            assert!(a.in_col_c_d(&c, 2));
        }
    }
}
