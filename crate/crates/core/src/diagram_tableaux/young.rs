//! Ordinary partitions and their standard Young tableaux.

/// A standard Young tableau of partition shape, stored as rows of entries
/// `0, …, m−1` (English convention, rows weakly decreasing in length).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// `(row, column)` of the entry `k`, both 0-based.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|x| *x == k) {
                return (r, c);
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// `column − row` of the box holding `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    /// The tableau with `k` and `k+1` exchanged, if still standard.
    pub fn swapped(&self, k: usize) -> Option<YoungTableau> {
        let (r1, c1) = self.position(k);
        let (r2, c2) = self.position(k + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1][c1] = k + 1;
        rows[r2][c2] = k;
        Some(YoungTableau { rows })
    }
}

/// Whether `mu` is weakly decreasing with no zero parts.
pub fn is_partition(mu: &[usize]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1]) && mu.iter().all(|x| *x > 0)
}

/// All standard Young tableaux of shape `mu`, in lexicographic order of rows.
pub fn standard_young_tableaux(mu: &[usize]) -> Vec<YoungTableau> {
    assert!(is_partition(mu), "not a partition: {mu:?}");
    let m: usize = mu.iter().sum();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); mu.len()];
    fn rec(
        k: usize,
        m: usize,
        mu: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if k == m {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        for r in 0..mu.len() {
            let len = rows[r].len();
            if len < mu[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(k + 1, m, mu, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(0, m, mu, &mut rows, &mut out);
    out.sort();
    out
}

/// The number of standard Young tableaux of shape `mu`, by the hook formula.
pub fn hook_length_dim(mu: &[usize]) -> u128 {
    let m: usize = mu.iter().sum();
    let mut hooks: u128 = 1;
    for (r, &len) in mu.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = mu[r + 1..].iter().filter(|x| **x > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    super::multi_index::factorial(m as u64) / hooks
}

/// All partitions of `m`, in decreasing lexicographic order.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_hook_formula() {
        for m in 0..7 {
            for mu in partitions(m) {
                assert_eq!(
                    standard_young_tableaux(&mu).len() as u128,
                    hook_length_dim(&mu),
                    "{mu:?}"
                );
            }
        }
        assert_eq!(hook_length_dim(&[2, 1]), 2);
        assert_eq!(hook_length_dim(&[3, 2]), 5);
    }

    #[test]
    fn contents_and_swaps() {
        let t = &standard_young_tableaux(&[2])[0];
        assert_eq!(t.content(1), 1);
        assert!(t.swapped(0).is_none());
        let ts = standard_young_tableaux(&[2, 1]);
        assert_eq!(ts[0].swapped(1).as_ref(), Some(&ts[1]));
    }
}
