//! Sparse homogeneous linear systems and operator commutants.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::field::Field;
use super::sparse::{SparseMatrix, SparseVec};

/// Online sparse Gaussian elimination for a homogeneous system in `nvars`
/// unknowns.
///
/// Each accepted equation becomes a pivot row solved for one unknown chosen
/// with a Markowitz-style rule (fewest occurrences). Rows are never rewritten:
/// a row created at time `t` only mentions unknowns that were not pivots at
/// time `t`, so reductions run in increasing pivot time and back-substitution
/// in decreasing pivot time.
#[derive(Clone, Debug)]
pub struct SparseSolver<F> {
    nvars: usize,
    rows: Vec<(usize, SparseVec<F>)>,
    pivot_time: Vec<u32>,
    occurrences: Vec<u32>,
}

const FREE: u32 = u32::MAX;

impl<F: Field> SparseSolver<F> {
    pub fn new(nvars: usize) -> Self {
        SparseSolver {
            nvars,
            rows: Vec::new(),
            pivot_time: vec![FREE; nvars],
            occurrences: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nullity(&self) -> usize {
        self.nvars - self.rows.len()
    }

    /// Adds the equation `Σ eq_k · X_k = 0`; returns whether the rank grew.
    pub fn add_equation(&mut self, eq: &SparseVec<F>) -> bool {
        if eq.is_empty() {
            return false;
        }
        let mut acc: HashMap<usize, F> = HashMap::with_capacity(eq.len() * 2);
        let mut queue: BTreeSet<(u32, usize)> = BTreeSet::new();
        for (k, v) in eq.entries() {
            acc.insert(*k, v.clone());
            if self.pivot_time[*k] != FREE {
                queue.insert((self.pivot_time[*k], *k));
            }
        }
        while let Some((t, var)) = queue.pop_first() {
            let Some(c) = acc.remove(&var) else { continue };
            if c.is_zero() {
                continue;
            }
            let row = &self.rows[t as usize].1;
            for (k, v) in row.entries() {
                if *k == var {
                    continue;
                }
                let e = acc.entry(*k).or_insert_with(F::zero);
                *e = e.sub(&v.mul(&c));
                if self.pivot_time[*k] != FREE {
                    queue.insert((self.pivot_time[*k], *k));
                }
            }
        }
        let rest: Vec<(usize, F)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if rest.is_empty() {
            return false;
        }
        let pivot = rest
            .iter()
            .map(|(k, _)| *k)
            .min_by_key(|k| (self.occurrences[*k], *k))
            .expect("nonempty");
        let inv = rest
            .iter()
            .find(|(k, _)| *k == pivot)
            .expect("pivot present")
            .1
            .inv();
        let row = SparseVec::from_pairs(rest.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect());
        for (k, _) in row.entries() {
            self.occurrences[*k] += 1;
        }
        self.pivot_time[pivot] = self.rows.len() as u32;
        self.rows.push((pivot, row));
        true
    }

    /// The unknowns left free by the current equations, in increasing order.
    pub fn free_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.pivot_time[v] == FREE)
            .collect()
    }

    /// A kernel basis: one vector per free unknown, which takes the value one
    /// there and zero at the other free unknowns.
    pub fn kernel_basis(&self) -> Vec<SparseVec<F>> {
        let free = self.free_vars();
        let mut free_pos = vec![usize::MAX; self.nvars];
        for (i, f) in free.iter().enumerate() {
            free_pos[*f] = i;
        }
        let mut value: Vec<Option<SparseVec<F>>> = vec![None; self.nvars];
        for (i, f) in free.iter().enumerate() {
            value[*f] = Some(SparseVec::unit(i));
        }
        for (pivot, row) in self.rows.iter().rev() {
            let mut val = SparseVec::new();
            for (k, c) in row.entries() {
                if k == pivot {
                    continue;
                }
                let vk = value[*k].as_ref().expect("later pivots solved first");
                val = val.add_scaled(&c.neg(), vk);
            }
            value[*pivot] = Some(val);
        }
        let mut kernel: Vec<Vec<(usize, F)>> = vec![Vec::new(); free.len()];
        for (var, val) in value.into_iter().enumerate() {
            for (f, c) in val.expect("every unknown solved").into_entries() {
                kernel[f].push((var, c));
            }
        }
        kernel.into_iter().map(SparseVec::from_sorted).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Preprocessed form of the system `X g = g X` for all generators `g`.
///
/// Diagonal generators restrict `X` to pairs of indices with equal diagonal
/// signature; permutation generators identify `X_{ab}` with `X_{π(a)π(b)}`;
/// the remaining generators contribute explicit equations. The system
/// decouples over pairs of connected components of the index graph.
struct CommutantSystem<'a, F> {
    dim: usize,
    perms: Vec<Vec<usize>>,
    general: Vec<&'a SparseMatrix<F>>,
    general_t: Vec<SparseMatrix<F>>,
    signature: Vec<usize>,
    components: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

struct Block<F> {
    p: usize,
    q: usize,
    /// Unknown index for each pair (position in P, position in Q), or `None`
    /// if the pair is forced to vanish.
    var_of: Vec<Option<usize>>,
    nvars: usize,
    solver: SparseSolver<F>,
}

impl<'a, F: Field> CommutantSystem<'a, F> {
    fn new(dim: usize, gens: &'a [SparseMatrix<F>]) -> Self {
        let mut diag: Vec<&SparseMatrix<F>> = Vec::new();
        let mut perms = Vec::new();
        let mut general = Vec::new();
        for g in gens {
            assert_eq!(g.dim(), dim, "generator dimension mismatch");
            if g.is_diagonal() {
                diag.push(g);
            } else if let Some(p) = g.as_permutation() {
                perms.push(p);
            } else {
                general.push(g);
            }
        }
        let mut sig_ids: HashMap<Vec<F>, usize> = HashMap::new();
        let signature: Vec<usize> = (0..dim)
            .map(|a| {
                let key: Vec<F> = diag.iter().map(|g| g.get(a, a)).collect();
                let n = sig_ids.len();
                *sig_ids.entry(key).or_insert(n)
            })
            .collect();
        let mut uf = UnionFind::new(dim);
        for p in &perms {
            for (a, &b) in p.iter().enumerate() {
                uf.union(a, b);
            }
        }
        for g in &general {
            for c in 0..dim {
                for (r, _) in g.column(c) {
                    uf.union(*r as usize, c);
                }
            }
        }
        let mut comp_ids: HashMap<usize, usize> = HashMap::new();
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut pos = vec![0; dim];
        #[allow(clippy::needless_range_loop)]
        for a in 0..dim {
            let root = uf.find(a);
            let id = *comp_ids.entry(root).or_insert_with(|| {
                components.push(Vec::new());
                components.len() - 1
            });
            pos[a] = components[id].len();
            components[id].push(a);
        }
        let general_t = general.iter().map(|g| g.transpose()).collect();
        CommutantSystem {
            dim,
            perms,
            general,
            general_t,
            signature,
            components,
            pos,
        }
    }

    /// Component pairs that admit at least one unknown.
    fn block_pairs(&self) -> Vec<(usize, usize)> {
        let sigs: Vec<BTreeSet<usize>> = self
            .components
            .iter()
            .map(|c| c.iter().map(|a| self.signature[*a]).collect())
            .collect();
        let mut out = Vec::new();
        for p in 0..self.components.len() {
            for q in 0..self.components.len() {
                if sigs[p].intersection(&sigs[q]).next().is_some() {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn solve_block(&self, p: usize, q: usize) -> Block<F> {
        let cp = &self.components[p];
        let cq = &self.components[q];
        let (np, nq) = (cp.len(), cq.len());
        let pair = |a: usize, b: usize| self.pos[a] * nq + self.pos[b];
        let mut uf = UnionFind::new(np * nq);
        for perm in &self.perms {
            for &a in cp {
                for &b in cq {
                    uf.union(pair(a, b), pair(perm[a], perm[b]));
                }
            }
        }
        let mut forced = vec![false; np * nq];
        for &a in cp {
            for &b in cq {
                if self.signature[a] != self.signature[b] {
                    let r = uf.find(pair(a, b));
                    forced[r] = true;
                }
            }
        }
        let mut root_var: HashMap<usize, usize> = HashMap::new();
        let mut var_of = vec![None; np * nq];
        #[allow(clippy::needless_range_loop)]
        for idx in 0..np * nq {
            let r = uf.find(idx);
            if forced[r] {
                continue;
            }
            let n = root_var.len();
            var_of[idx] = Some(*root_var.entry(r).or_insert(n));
        }
        let nvars = root_var.len();
        let mut solver = SparseSolver::new(nvars);
        if nvars > 0 {
            for (g, gt) in self.general.iter().zip(&self.general_t) {
                for &a in cp {
                    for &b in cq {
                        let mut terms: Vec<(usize, F)> = Vec::new();
                        for (c, v) in g.column(b) {
                            if let Some(x) = var_of[pair(a, *c as usize)] {
                                terms.push((x, v.clone()));
                            }
                        }
                        for (c, v) in gt.column(a) {
                            if let Some(x) = var_of[pair(*c as usize, b)] {
                                terms.push((x, v.neg()));
                            }
                        }
                        if !terms.is_empty() {
                            solver.add_equation(&SparseVec::from_pairs(terms));
                        }
                    }
                }
            }
        }
        Block {
            p,
            q,
            var_of,
            nvars,
            solver,
        }
    }

    fn block_basis(&self, block: &Block<F>) -> Vec<SparseMatrix<F>> {
        let cp = &self.components[block.p];
        let cq = &self.components[block.q];
        let mut members: Vec<Vec<(usize, usize)>> = vec![Vec::new(); block.nvars];
        for &a in cp {
            for &b in cq {
                if let Some(x) = block.var_of[self.pos[a] * cq.len() + self.pos[b]] {
                    members[x].push((a, b));
                }
            }
        }
        block
            .solver
            .kernel_basis()
            .into_iter()
            .map(|kv| {
                let trip = kv
                    .entries()
                    .iter()
                    .flat_map(|(x, c)| members[*x].iter().map(move |&(a, b)| (a, b, c.clone())));
                SparseMatrix::from_triplets(self.dim, trip)
            })
            .collect()
    }
}

/// A basis of `{X : X g = g X for all g in gens}`.
pub fn commutant_basis<F: Field>(dim: usize, gens: &[SparseMatrix<F>]) -> Vec<SparseMatrix<F>> {
    let sys = CommutantSystem::new(dim, gens);
    let pairs = sys.block_pairs();
    let parts: Vec<Vec<SparseMatrix<F>>> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let block = sys.solve_block(p, q);
            sys.block_basis(&block)
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// The dimension of the commutant of `gens`.
pub fn commutant_dim<F: Field>(dim: usize, gens: &[SparseMatrix<F>]) -> usize {
    let sys = CommutantSystem::new(dim, gens);
    sys.block_pairs()
        .par_iter()
        .map(|&(p, q)| sys.solve_block(p, q).solver.nullity())
        .sum()
}
