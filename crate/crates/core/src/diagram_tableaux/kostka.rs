//! Generalized Kostka numbers `K_{B,A}`.

use serde::{Deserialize, Serialize};

use super::diagram::Origin;
use super::tableau::Tableau;
use super::DiagramError;

/// Which standardness rule the auxiliary `μ^(j)`-tableaux obey.
///
/// `Semistandard` (rows weakly increasing, columns strictly increasing, in the
/// natural order of box indices) is the convention that satisfies the
/// divided-power dimension identity; `RowStrict` (rows strict, columns weak)
/// is recorded as the alternative reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum KostkaConvention {
    #[default]
    Semistandard,
    RowStrict,
}

/// The partitions `μ^(1), …, μ^(l)`: column `j` of `B − A_c`, top to bottom.
pub fn column_shapes(b: &Tableau, c: &Origin) -> Result<Vec<Vec<usize>>, DiagramError> {
    let ac = Tableau::origin_tableau(b.diagram_arc().clone(), c);
    let diff = b.sub(&ac);
    let counts = diff.counts()?;
    let d = b.diagram();
    let shapes: Vec<Vec<usize>> = (1..=d.level())
        .map(|j| {
            d.column_boxes(j)
                .into_iter()
                .map(|x| counts[x])
                .filter(|x| *x > 0)
                .collect()
        })
        .collect();
    for s in &shapes {
        if s.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::Precondition(
                "B − A_c has a non-partition column".into(),
            ));
        }
    }
    Ok(shapes)
}

/// `K_{B,A}` under the default convention.
pub fn kostka(b: &Tableau, a: &Tableau, c: &Origin) -> Result<u64, DiagramError> {
    kostka_with(b, a, c, KostkaConvention::Semistandard)
}

/// `K_{B,A}`: the number of tuples `(T^(1), …, T^(l))` with `T^(j)` of shape
/// `μ^(j)` filled from `{i : col(i) ≥ j}` obeying `convention`, using each box
/// index `i` exactly `a_i` times overall.
pub fn kostka_with(
    b: &Tableau,
    a: &Tableau,
    c: &Origin,
    convention: KostkaConvention,
) -> Result<u64, DiagramError> {
    if a.diagram() != b.diagram() {
        return Err(DiagramError::Precondition(
            "tableaux of different shapes".into(),
        ));
    }
    let mut remaining = a.counts()?;
    let shapes = column_shapes(b, c)?;
    let size_a: usize = remaining.iter().sum();
    let size_b: usize = shapes.iter().flatten().sum();
    if size_a != size_b {
        return Ok(0);
    }
    let d = b.diagram();
    // Cells in row-major order for every shape, tagged with the shape index.
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for (j, shape) in shapes.iter().enumerate() {
        for (r, len) in shape.iter().enumerate() {
            for col in 0..*len {
                cells.push((j, r, col));
            }
        }
    }
    let alphabets: Vec<Vec<usize>> = (1..=d.level())
        .map(|j| (0..d.boxes()).filter(|i| d.col(*i) >= j).collect())
        .collect();
    let mut fill: Vec<Vec<Vec<usize>>> = shapes
        .iter()
        .map(|s| s.iter().map(|len| vec![usize::MAX; *len]).collect())
        .collect();
    fn rec(
        pos: usize,
        cells: &[(usize, usize, usize)],
        alphabets: &[Vec<usize>],
        fill: &mut Vec<Vec<Vec<usize>>>,
        remaining: &mut Vec<usize>,
        conv: KostkaConvention,
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (j, r, col) = cells[pos];
        let mut total = 0;
        for &x in &alphabets[j] {
            if remaining[x] == 0 {
                continue;
            }
            let left = (col > 0).then(|| fill[j][r][col - 1]);
            let up = (r > 0).then(|| fill[j][r - 1][col]);
            let ok = match conv {
                KostkaConvention::Semistandard => {
                    left.is_none_or(|v| v <= x) && up.is_none_or(|v| v < x)
                }
                KostkaConvention::RowStrict => {
                    left.is_none_or(|v| v < x) && up.is_none_or(|v| v <= x)
                }
            };
            if !ok {
                continue;
            }
            remaining[x] -= 1;
            fill[j][r][col] = x;
            total += rec(pos + 1, cells, alphabets, fill, remaining, conv);
            fill[j][r][col] = usize::MAX;
            remaining[x] += 1;
        }
        total
    }
    Ok(rec(
        0,
        &cells,
        &alphabets,
        &mut fill,
        &mut remaining,
        convention,
    ))
}
