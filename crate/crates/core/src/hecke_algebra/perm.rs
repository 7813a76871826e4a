//! Permutations of `{0, …, d−1}` in one-line notation.

use std::fmt;

/// A permutation `w` stored as `[w(0), …, w(d−1)]`.
///
/// Products compose right to left, `(uv)(k) = u(v(k))`, which makes the place
/// permutation `(i·w)_k = i_{w(k)}` a right action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    /// The simple transposition `s_j` exchanging `j` and `j + 1` (0-based).
    pub fn simple(d: usize, j: usize) -> Self {
        assert!(j + 1 < d, "simple transposition out of range");
        let mut v: Vec<u8> = (0..d as u8).collect();
        v.swap(j, j + 1);
        Perm(v)
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<u8> = (0..d as u8).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// Builds from one-line notation; `None` if not a permutation.
    pub fn from_one_line(v: &[usize]) -> Option<Self> {
        let mut seen = vec![false; v.len()];
        for x in v {
            if *x >= v.len() || seen[*x] {
                return None;
            }
            seen[*x] = true;
        }
        Some(Perm(v.iter().map(|x| *x as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| *x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, x)| i == *x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|k| self.0[*k as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, x) in self.0.iter().enumerate() {
            v[*x as usize] = i as u8;
        }
        Perm(v)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|j| self.0[i] > self.0[*j]).count())
            .sum()
    }

    /// A reduced word `[j₁, …, j_m]` with `self = s_{j₁} ⋯ s_{j_m}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Peel left descents: if w(k) > w(k+1) for the positions holding
        // values t+1, t then w = s_t · (s_t w) with shorter s_t w.
        let mut w = self.clone();
        let mut word = Vec::new();
        let d = w.degree();
        while let Some(t) = (0..d.saturating_sub(1)).find(|&t| w.position(t) > w.position(t + 1)) {
            word.push(t);
            w = Perm::simple(d, t).compose(&w);
        }
        word
    }

    /// The position `k` with `w(k) = value`.
    pub fn position(&self, value: usize) -> usize {
        self.0
            .iter()
            .position(|x| *x as usize == value)
            .expect("value in range")
    }

    /// All permutations of `d` letters in lexicographic order.
    pub fn all(d: usize) -> Vec<Perm> {
        crate::diagram_tableaux::multi_index::distinct_permutations(
            &(0..d as u8).collect::<Vec<_>>(),
        )
        .into_iter()
        .map(Perm)
        .collect()
    }

    /// Places `self` on the first letters of a larger symmetric group.
    pub fn extend(&self, d: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u8..d as u8);
        Perm(v)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal-length representatives of the left cosets `w·(S_{d₁} × ⋯ × S_{d_k})`,
/// i.e. the permutations increasing on each block of consecutive positions.
pub fn parabolic_coset_reps(d: usize, composition: &[usize]) -> Option<Vec<Perm>> {
    if composition.iter().sum::<usize>() != d {
        return None;
    }
    let mut bounds = Vec::new();
    let mut start = 0;
    for &c in composition {
        bounds.push((start, start + c));
        start += c;
    }
    Some(
        Perm::all(d)
            .into_iter()
            .filter(|w| {
                bounds
                    .iter()
                    .all(|&(a, b)| (a..b.saturating_sub(1)).all(|k| w.apply(k) < w.apply(k + 1)))
            })
            .collect(),
    )
}

/// All elements of the Young subgroup `S_{d₁} × ⋯ × S_{d_k}` in `S_d`.
pub fn young_subgroup(composition: &[usize]) -> Vec<Perm> {
    let d: usize = composition.iter().sum();
    let mut out = vec![Perm::identity(d)];
    let mut start = 0;
    for &c in composition {
        let block = Perm::all(c);
        let mut next = Vec::with_capacity(out.len() * block.len());
        for w in &out {
            for b in &block {
                let mut v = w.0.clone();
                for k in 0..c {
                    v[start + k] = (start + b.apply(k)) as u8;
                }
                next.push(Perm(v));
            }
        }
        out = next;
        start += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for d in 0..5 {
            for w in Perm::all(d) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let prod = word.iter().fold(Perm::identity(d), |acc, j| {
                    acc.compose(&Perm::simple(d, *j))
                });
                assert_eq!(prod, w);
            }
        }
    }

    #[test]
    fn coset_counts() {
        assert_eq!(parabolic_coset_reps(2, &[1, 1]).unwrap().len(), 2);
        assert_eq!(parabolic_coset_reps(2, &[2]).unwrap().len(), 1);
        assert_eq!(parabolic_coset_reps(3, &[2, 1]).unwrap().len(), 3);
        assert!(parabolic_coset_reps(3, &[1, 1]).is_none());
        assert_eq!(young_subgroup(&[2, 1, 2]).len(), 4);
    }

    #[test]
    fn coset_reps_are_minimal() {
        let reps = parabolic_coset_reps(4, &[2, 2]).unwrap();
        let sub = young_subgroup(&[2, 2]);
        for w in &reps {
            for v in &sub {
                assert!(w.compose(v).length() >= w.length());
            }
        }
    }
}
