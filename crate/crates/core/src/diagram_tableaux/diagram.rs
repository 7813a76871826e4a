//! The partition diagram λ with its box numbering and the origin vector c.

use serde::{Deserialize, Serialize};

use crate::exact_linear::Scalar;

use super::DiagramError;

/// The diagram of `λ = (p₁ ≤ … ≤ pₙ)`, rows numbered top to bottom and boxes
/// numbered down the columns, leftmost column first.
///
/// Rows and columns are 1-based; boxes are 0-based (`box k` is the paper's
/// box `k + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionDiagram {
    parts: Vec<usize>,
    normalized: bool,
    heights: Vec<usize>,
    box_row: Vec<usize>,
    box_col: Vec<usize>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    /// `grid[row - 1][col - 1]` is the box at that position.
    grid: Vec<Vec<usize>>,
}

impl PartitionDiagram {
    /// Builds the diagram, sorting the parts and dropping zero parts.
    pub fn new(parts: &[usize]) -> Result<Self, DiagramError> {
        let mut sorted: Vec<usize> = parts.iter().copied().filter(|p| *p > 0).collect();
        sorted.sort_unstable();
        if sorted.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        let normalized = sorted.as_slice() != parts;
        let n = sorted.len();
        let l = *sorted.last().expect("nonempty");
        let heights: Vec<usize> = (1..=l)
            .map(|j| sorted.iter().filter(|p| **p >= j).count())
            .collect();
        let total: usize = sorted.iter().sum();
        let mut box_row = Vec::with_capacity(total);
        let mut box_col = Vec::with_capacity(total);
        let mut grid: Vec<Vec<usize>> = sorted.iter().map(|p| vec![usize::MAX; *p]).collect();
        for (j, q) in heights.iter().enumerate() {
            for row in (n - q + 1)..=n {
                grid[row - 1][j] = box_row.len();
                box_row.push(row);
                box_col.push(j + 1);
            }
        }
        let mut left = vec![None; total];
        let mut right = vec![None; total];
        for row in &grid {
            for w in row.windows(2) {
                right[w[0]] = Some(w[1]);
                left[w[1]] = Some(w[0]);
            }
        }
        Ok(PartitionDiagram {
            parts: sorted,
            normalized,
            heights,
            box_row,
            box_col,
            left,
            right,
            grid,
        })
    }

    /// The parts `p₁ ≤ … ≤ pₙ`.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Whether the input had to be sorted or stripped of zero parts.
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    /// Number of rows `n`.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes `N`.
    pub fn boxes(&self) -> usize {
        self.box_row.len()
    }

    /// The level `l`, i.e. the largest part.
    pub fn level(&self) -> usize {
        self.heights.len()
    }

    /// Column heights `q₁ ≥ … ≥ q_l`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Height `q_j` of column `j` (1-based).
    pub fn height(&self, col: usize) -> usize {
        self.heights[col - 1]
    }

    /// Length `p_i` of row `i` (1-based).
    pub fn part(&self, row: usize) -> usize {
        self.parts[row - 1]
    }

    pub fn row(&self, b: usize) -> usize {
        self.box_row[b]
    }

    pub fn col(&self, b: usize) -> usize {
        self.box_col[b]
    }

    pub fn left(&self, b: usize) -> Option<usize> {
        self.left[b]
    }

    pub fn right(&self, b: usize) -> Option<usize> {
        self.right[b]
    }

    /// The box at (row, col), both 1-based.
    pub fn box_at(&self, row: usize, col: usize) -> Option<usize> {
        self.grid
            .get(row.wrapping_sub(1))?
            .get(col.wrapping_sub(1))
            .copied()
    }

    /// The rightmost box of a row.
    pub fn row_end(&self, row: usize) -> usize {
        *self.grid[row - 1].last().expect("rows are nonempty")
    }

    /// Boxes of column `j`, top to bottom.
    pub fn column_boxes(&self, col: usize) -> Vec<usize> {
        (0..self.boxes())
            .filter(|b| self.box_col[*b] == col)
            .collect()
    }

    /// Boxes of row `i`, left to right.
    pub fn row_boxes(&self, row: usize) -> &[usize] {
        &self.grid[row - 1]
    }

    /// Shift matrix entry `s_{i,j}` for rows `i, j` (1-based).
    pub fn shift(&self, i: usize, j: usize) -> usize {
        if i <= j {
            self.part(j) - self.part(i)
        } else {
            0
        }
    }

    /// Number of boxes in columns `1..=j`, i.e. `q₁ + ⋯ + q_j`.
    pub fn boxes_up_to_col(&self, col: usize) -> usize {
        self.heights[..col].iter().sum()
    }

    /// The diagram with `extra` further parts equal to `l` appended.
    pub fn padded(&self, extra: usize) -> PartitionDiagram {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(self.level(), extra));
        PartitionDiagram::new(&parts).expect("padding keeps the diagram nonempty")
    }

    /// The diagram formed by the first `rows` parts.
    pub fn truncated(&self, rows: usize) -> Result<PartitionDiagram, DiagramError> {
        if rows == 0 || rows > self.rows() {
            return Err(DiagramError::BadRowCount {
                requested: rows,
                available: self.rows(),
            });
        }
        PartitionDiagram::new(&self.parts[..rows])
    }

    /// Number of parts equal to the level.
    pub fn parts_equal_to_level(&self) -> usize {
        self.parts.iter().filter(|p| **p == self.level()).count()
    }
}

/// The origin `c = (c₁, …, c_l)`, required to satisfy
/// `c_i − c_j ∈ ℤ ⇒ c_i = c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Origin(Vec<Scalar>);

impl Origin {
    pub fn new(c: Vec<Scalar>) -> Result<Self, DiagramError> {
        for (i, a) in c.iter().enumerate() {
            for (j, b) in c.iter().enumerate().skip(i + 1) {
                if a != b && (a - b).is_integer() {
                    return Err(DiagramError::BadOrigin { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Origin(c))
    }

    pub fn zero(level: usize) -> Self {
        Origin(vec![Scalar::zero(); level])
    }

    /// Checks the length against a diagram.
    pub fn for_diagram(c: Vec<Scalar>, diagram: &PartitionDiagram) -> Result<Self, DiagramError> {
        if c.len() != diagram.level() {
            return Err(DiagramError::OriginLength {
                expected: diagram.level(),
                found: c.len(),
            });
        }
        Origin::new(c)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    /// `c_j` for a 1-based column.
    pub fn get(&self, col: usize) -> &Scalar {
        &self.0[col - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// `c + r·1`.
    pub fn shifted(&self, r: i64) -> Origin {
        let r = Scalar::from_int(r);
        Origin(self.0.iter().map(|c| c + &r).collect())
    }

    /// The cyclotomic roots `Q_j = c_j + q_j − n`, one per column.
    pub fn roots(&self, diagram: &PartitionDiagram) -> Vec<Scalar> {
        let n = diagram.rows() as i64;
        (1..=diagram.level())
            .map(|j| self.get(j) + &Scalar::from_int(diagram.height(j) as i64 - n))
            .collect()
    }

    /// The first `len` entries.
    pub fn prefix(&self, len: usize) -> Origin {
        Origin(self.0[..len].to_vec())
    }

    /// The entries after the first `len`.
    pub fn suffix(&self, len: usize) -> Origin {
        Origin(self.0[len..].to_vec())
    }
}
