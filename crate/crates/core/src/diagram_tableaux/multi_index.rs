//! Multi-indices `i = (i₁, …, i_d) ∈ I^d` and their enumeration.

use super::diagram::PartitionDiagram;

/// A tuple of box indices (0-based boxes).
pub type MultiIndex = Vec<usize>;

/// Lexicographic bijection between `I^d` and `0..N^d`, first entry most
/// significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndexer {
    base: usize,
    d: usize,
}

impl TensorIndexer {
    pub fn new(base: usize, d: usize) -> Self {
        TensorIndexer { base, d }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// `N^d`, or `None` on overflow.
    pub fn checked_dim(base: usize, d: usize) -> Option<usize> {
        (0..d).try_fold(1usize, |acc, _| acc.checked_mul(base))
    }

    pub fn dim(&self) -> usize {
        Self::checked_dim(self.base, self.d).expect("tensor dimension overflow")
    }

    pub fn encode(&self, i: &[usize]) -> usize {
        debug_assert_eq!(i.len(), self.d);
        i.iter().fold(0, |acc, x| acc * self.base + x)
    }

    pub fn decode(&self, mut idx: usize) -> MultiIndex {
        let mut out = vec![0; self.d];
        for k in (0..self.d).rev() {
            out[k] = idx % self.base;
            idx /= self.base;
        }
        out
    }

    /// All multi-indices in lexicographic order.
    pub fn all(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        (0..self.dim()).map(move |x| self.decode(x))
    }
}

/// Place permutation `(i·w)_k = i_{w(k)}` for `w` in one-line notation.
pub fn place_permute<T: Clone>(i: &[T], w: &[usize]) -> Vec<T> {
    w.iter().map(|&k| i[k].clone()).collect()
}

/// `i` with the entries in positions `a` and `b` exchanged.
pub fn swapped(i: &[usize], a: usize, b: usize) -> MultiIndex {
    let mut out = i.to_vec();
    out.swap(a, b);
    out
}

/// `L_k(i)`: replace `i_k` by its left neighbour, if any.
pub fn left_at(diagram: &PartitionDiagram, i: &[usize], k: usize) -> Option<MultiIndex> {
    let l = diagram.left(i[k])?;
    let mut out = i.to_vec();
    out[k] = l;
    Some(out)
}

/// `R_k(i)`: replace `i_k` by its right neighbour, if any.
pub fn right_at(diagram: &PartitionDiagram, i: &[usize], k: usize) -> Option<MultiIndex> {
    let r = diagram.right(i[k])?;
    let mut out = i.to_vec();
    out[k] = r;
    Some(out)
}

pub fn rows_of(diagram: &PartitionDiagram, i: &[usize]) -> Vec<usize> {
    i.iter().map(|b| diagram.row(*b)).collect()
}

pub fn cols_of(diagram: &PartitionDiagram, i: &[usize]) -> Vec<usize> {
    i.iter().map(|b| diagram.col(*b)).collect()
}

/// The `S_d`-orbit label of `row(i)`: its entries sorted.
pub fn row_class(diagram: &PartitionDiagram, i: &[usize]) -> Vec<usize> {
    let mut r = rows_of(diagram, i);
    r.sort_unstable();
    r
}

/// Sum of the column numbers of `i`.
pub fn col_sum(diagram: &PartitionDiagram, i: &[usize]) -> usize {
    i.iter().map(|b| diagram.col(*b)).sum()
}

/// All distinct rearrangements of `items`, in lexicographic order.
pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// All multisets of size `d` drawn from `0..n`, as nondecreasing sequences in
/// lexicographic order.
pub fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(n, d, x, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

/// Weak compositions of `total` into `parts` nonnegative parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, parts, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut cur, &mut out);
    out
}

/// Binomial coefficient as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexer_round_trip() {
        let t = TensorIndexer::new(3, 3);
        assert_eq!(t.dim(), 27);
        for x in 0..27 {
            assert_eq!(t.encode(&t.decode(x)), x);
        }
        assert_eq!(t.decode(5), vec![0, 1, 2]);
    }

    #[test]
    fn place_permutation_is_right_action() {
        let i = vec![7, 8, 9];
        let u = vec![1, 2, 0];
        let v = vec![0, 2, 1];
        let uv: Vec<usize> = v.iter().map(|&k| u[k]).collect();
        assert_eq!(
            place_permute(&place_permute(&i, &u), &v),
            place_permute(&i, &uv)
        );
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(multisets(23, 2).len(), 276);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(binomial(24, 2), 276);
        assert_eq!(factorial(4), 24);
        assert_eq!(multisets(5, 0), vec![Vec::<usize>::new()]);
    }
}
