//! Specht modules `S(B) = H_d ⊗_{H_{(d_l,…,d_1)}} (ev*_{Q_l} S(μ^(l)) ⊠ ⋯ ⊠ ev*_{Q_1} S(μ^(1)))`
//! in seminormal form, and the Specht flag dimension identity.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::diagram_tableaux::kostka::column_shapes;
use crate::diagram_tableaux::multi_index::factorial;
use crate::diagram_tableaux::{
    col_c_d, hook_length_dim, kostka, standard_young_tableaux, tab_d, Origin, Tableau, YoungTableau,
};
use crate::exact_linear::{Scalar, SparseOperator};
use crate::hecke_algebra::{
    parabolic_coset_reps, CyclotomicParams, HeckeAlgebra, HeckeElement, Perm,
};
use crate::tensor_representation::TensorSpace;

use super::permutation::{permutation_module, PermutationModule, PermutationWorkspace};
use super::RepError;

/// One tensor factor `ev*_a S(μ)`.
struct Block {
    start: usize,
    root: Scalar,
    tableaux: Vec<YoungTableau>,
    index: HashMap<YoungTableau, usize>,
}

impl Block {
    fn size(&self) -> usize {
        self.tableaux.first().map_or(0, |t| t.size())
    }

    /// `s_k v_T` for the local letter `k`, in the seminormal basis.
    fn act_s(&self, k: usize, t: usize) -> Vec<(usize, Scalar)> {
        let tab = &self.tableaux[t];
        let (r1, c1) = tab.position(k);
        let (r2, c2) = tab.position(k + 1);
        if r1 == r2 {
            return vec![(t, Scalar::one())];
        }
        if c1 == c2 {
            return vec![(t, -Scalar::one())];
        }
        let rho = Scalar::from_int(tab.content(k + 1) - tab.content(k)).inv();
        let other = self.index[&tab.swapped(k).expect("not in a common row or column")];
        if r2 > r1 {
            vec![(t, rho), (other, Scalar::one())]
        } else {
            vec![(t, rho.clone()), (other, &Scalar::one() - &(&rho * &rho))]
        }
    }
}

/// `S(B)` for `B ∈ Col^d_c` with explicit generator matrices.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtModule {
    pub tableau: Vec<Scalar>,
    /// `μ^(1), …, μ^(l)`.
    pub shapes: Vec<Vec<usize>>,
    pub dim: usize,
    /// `d!/(d₁!⋯d_l!)·Π f^{μ^(j)}`.
    pub expected_dim: u128,
    pub relations: Vec<RelationCheck>,
    #[serde(skip)]
    pub x: Vec<SparseOperator>,
    #[serde(skip)]
    pub s: Vec<SparseOperator>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// `d!/(d₁!⋯d_l!)·Π f^{μ^(j)}`.
pub fn specht_dimension(shapes: &[Vec<usize>]) -> u128 {
    let sizes: Vec<usize> = shapes.iter().map(|m| m.iter().sum()).collect();
    let d: usize = sizes.iter().sum();
    let mut n = factorial(d as u64);
    for (m, s) in shapes.iter().zip(&sizes) {
        n /= factorial(*s as u64);
        if !m.is_empty() {
            n *= hook_length_dim(m);
        }
    }
    n
}

struct Induced {
    alg: Arc<HeckeAlgebra>,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
    reps: Vec<Perm>,
    rep_index: HashMap<Perm, usize>,
    /// Mixed radix over the block bases.
    radix: Vec<usize>,
    local_dim: usize,
}

impl Induced {
    fn split(&self, mut m: usize) -> (usize, Vec<usize>) {
        let w = m / self.local_dim;
        m %= self.local_dim;
        let mut ts = vec![0; self.blocks.len()];
        for (b, r) in self.radix.iter().enumerate().rev() {
            ts[b] = m % r;
            m /= r;
        }
        (w, ts)
    }

    fn join(&self, w: usize, ts: &[usize]) -> usize {
        let mut m = 0;
        for (t, r) in ts.iter().zip(&self.radix) {
            m = m * r + t;
        }
        w * self.local_dim + m
    }

    /// `x^e · v_T`, diagonal in the seminormal basis.
    fn x_eigen(&self, ts: &[usize], e: &[u8]) -> Scalar {
        let mut c = Scalar::one();
        for (k, &ek) in e.iter().enumerate() {
            if ek == 0 {
                continue;
            }
            let b = &self.blocks[self.block_of[k]];
            let ev =
                &b.root + &Scalar::from_int(b.tableaux[ts[self.block_of[k]]].content(k - b.start));
            c *= &ev.pow(ek as u32);
        }
        c
    }

    /// `v · (vectors in the local factor)` for `v` in the Young subgroup.
    fn act_parabolic(
        &self,
        v: &Perm,
        local: Vec<(Vec<usize>, Scalar)>,
    ) -> Vec<(Vec<usize>, Scalar)> {
        let mut cur = local;
        for &k in v.reduced_word().iter().rev() {
            let bi = self.block_of[k];
            let b = &self.blocks[bi];
            let mut next: HashMap<Vec<usize>, Scalar> = HashMap::new();
            for (ts, c) in cur {
                for (t, a) in b.act_s(k - b.start, ts[bi]) {
                    let mut ts2 = ts.clone();
                    ts2[bi] = t;
                    *next.entry(ts2).or_insert_with(Scalar::zero) += &(&c * &a);
                }
            }
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur
    }

    /// The matrix of `g` on the basis `w ⊗ v_T`.
    fn operator(&self, g: &HeckeElement) -> Result<SparseOperator, RepError> {
        let dim = self.reps.len() * self.local_dim;
        let mut triplets = Vec::new();
        for col in 0..dim {
            let (wi, ts) = self.split(col);
            let gw = g.mul(&self.alg.perm(&self.reps[wi]))?;
            for (u, e, c) in gw.perm_left_terms() {
                let w2 = sort_blocks(&u, &self.blocks);
                let v = w2.inverse().compose(&u);
                let ci = &c * &self.x_eigen(&ts, &e);
                if ci.is_zero() {
                    continue;
                }
                let wj = self.rep_index[&w2];
                for (ts2, a) in self.act_parabolic(&v, vec![(ts.clone(), ci)]) {
                    triplets.push((self.join(wj, &ts2), col, a));
                }
            }
        }
        Ok(SparseOperator::from_triplets(dim, triplets))
    }
}

/// The minimal representative of `u·S_{(d_l,…,d_1)}`: the values of `u` sorted within each block.
fn sort_blocks(u: &Perm, blocks: &[Block]) -> Perm {
    let mut line = u.one_line();
    for b in blocks {
        line[b.start..b.start + b.size()].sort_unstable();
    }
    Perm::from_one_line(&line).expect("permutation")
}

/// Builds `S(B)`; `B` must lie in `Col^d_c` for some `d`.
pub fn specht_module(b: &Tableau, c: &Origin) -> Result<SpechtModule, RepError> {
    let dg = b.diagram();
    if !b.in_col_c(c) {
        return Err(RepError::BadTableau("Col_c"));
    }
    let shapes = column_shapes(b, c)?;
    let d: usize = shapes.iter().flatten().sum();
    let roots = c.roots(dg);
    let mut blocks = Vec::new();
    let mut block_of = Vec::new();
    for j in (0..dg.level()).rev() {
        let mu = &shapes[j];
        if mu.is_empty() {
            continue;
        }
        let tableaux = standard_young_tableaux(mu);
        let index = tableaux
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, t)| (t, k))
            .collect();
        let block = Block {
            start: block_of.len(),
            root: roots[j].clone(),
            tableaux,
            index,
        };
        block_of.extend(std::iter::repeat_n(blocks.len(), block.size()));
        blocks.push(block);
    }
    let composition: Vec<usize> = blocks.iter().map(|b| b.size()).collect();
    let reps = parabolic_coset_reps(d, &composition).expect("composition of d");
    let rep_index = reps
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, w)| (w, k))
        .collect();
    let radix: Vec<usize> = blocks.iter().map(|b| b.tableaux.len()).collect();
    let local_dim = radix.iter().product();
    let alg = HeckeAlgebra::new(CyclotomicParams::affine(d));
    let ind = Induced {
        alg: alg.clone(),
        blocks,
        block_of,
        reps,
        rep_index,
        radix,
        local_dim,
    };
    let x = (1..=d)
        .map(|j| ind.operator(&alg.x(j)?))
        .collect::<Result<Vec<_>, RepError>>()?;
    let s = (1..d)
        .map(|i| ind.operator(&alg.s(i)?))
        .collect::<Result<Vec<_>, RepError>>()?;
    let dim = ind.reps.len() * ind.local_dim;
    let relations = relation_suite(dim, &x, &s, &roots);
    let expected_dim = specht_dimension(&shapes);
    let pass = relations.iter().all(|r| r.holds) && dim as u128 == expected_dim;
    Ok(SpechtModule {
        tableau: b.entries().to_vec(),
        shapes,
        dim,
        expected_dim,
        relations,
        x,
        s,
        pass,
    })
}

/// The defining relations of `H_d(Λ)` on a module given by generator matrices.
pub fn relation_suite(
    dim: usize,
    x: &[SparseOperator],
    s: &[SparseOperator],
    roots: &[Scalar],
) -> Vec<RelationCheck> {
    let id = SparseOperator::identity(dim);
    let mut out = Vec::new();
    let mut check = |relation: &str, holds: bool| {
        out.push(RelationCheck {
            relation: relation.into(),
            holds,
        })
    };
    check("s_i^2 = 1", s.iter().all(|g| g.mul(g) == id));
    check(
        "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
        s.windows(2)
            .all(|w| w[0].mul(&w[1]).mul(&w[0]) == w[1].mul(&w[0]).mul(&w[1])),
    );
    check(
        "s_i s_j = s_j s_i for |i-j| > 1",
        (0..s.len()).all(|i| (i + 2..s.len()).all(|j| s[i].commutator(&s[j]).is_zero())),
    );
    check(
        "x_i x_j = x_j x_i",
        (0..x.len()).all(|i| (i + 1..x.len()).all(|j| x[i].commutator(&x[j]).is_zero())),
    );
    check(
        "s_i x_{i+1} - x_i s_i = 1",
        s.iter()
            .enumerate()
            .all(|(i, g)| g.mul(&x[i + 1]).sub(&x[i].mul(g)) == id),
    );
    check(
        "s_i x_j = x_j s_i for j not in {i, i+1}",
        s.iter().enumerate().all(|(i, g)| {
            (0..x.len())
                .filter(|j| *j != i && *j != i + 1)
                .all(|j| g.commutator(&x[j]).is_zero())
        }),
    );
    let cyclotomic = match x.first() {
        None => true,
        Some(x1) => {
            let mut p = id.clone();
            for q in roots {
                p = p.mul(&x1.sub(&SparseOperator::scalar(dim, q)));
            }
            p.is_zero()
        }
    };
    check("(x_1 - Q_1)...(x_1 - Q_l) = 0", cyclotomic);
    out
}

/// `dim M(A, c) = Σ_{B ∈ Col^d_c} K_{B,A}·dim S(B)` for every `A ∈ Tab^d`.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtFlagReport {
    pub rows: Vec<SpechtFlagRow>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpechtFlagRow {
    pub tableau: Vec<Scalar>,
    pub permutation_dim: usize,
    pub specht_sum: u128,
}

pub fn specht_flag_dim_check(ws: &PermutationWorkspace) -> Result<SpechtFlagReport, RepError> {
    let space = ws.space();
    let modules = tab_d(space.diagram_arc(), space.d())
        .iter()
        .map(|a| permutation_module(ws, a))
        .collect::<Result<Vec<_>, _>>()?;
    specht_flag_from_modules(space, &modules)
}

/// As [`specht_flag_dim_check`], given `M(A, c)` for every `A ∈ Tab^d` in enumeration order.
pub fn specht_flag_from_modules(
    space: &TensorSpace,
    modules: &[PermutationModule],
) -> Result<SpechtFlagReport, RepError> {
    let dg = space.diagram_arc();
    let c = space.origin();
    let shapes: Vec<(Tableau, u128)> = col_c_d(dg, c, space.d())
        .into_iter()
        .map(|b| {
            let s = column_shapes(&b, c)?;
            Ok((b, specht_dimension(&s)))
        })
        .collect::<Result<_, RepError>>()?;
    let tableaux = tab_d(dg, space.d());
    if tableaux.len() != modules.len() {
        return Err(RepError::Precondition(
            "one module per tableau in Tab^d".into(),
        ));
    }
    let mut rows = Vec::new();
    for (a, m) in tableaux.iter().zip(modules) {
        let mut sum = 0u128;
        for (b, dim) in &shapes {
            sum += kostka(b, a, c)? as u128 * dim;
        }
        rows.push(SpechtFlagRow {
            tableau: a.entries().to_vec(),
            permutation_dim: m.dim,
            specht_sum: sum,
        });
    }
    let pass = rows
        .iter()
        .all(|r| r.permutation_dim as u128 == r.specht_sum);
    Ok(SpechtFlagReport { rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram_tableaux::PartitionDiagram;
    use crate::schur_algebra::xi_basis;

    fn origin(dg: &PartitionDiagram, c: &[Scalar]) -> Origin {
        Origin::for_diagram(c.to_vec(), dg).unwrap()
    }

    #[test]
    fn relations_hold_on_all_small_modules() {
        for (parts, c, d) in [
            (&[2, 2][..], vec![Scalar::zero(), Scalar::zero()], 3),
            (&[1, 2], vec![Scalar::zero(), Scalar::new(1, 2)], 3),
            (&[1, 1, 2], vec![Scalar::zero(), Scalar::zero()], 2),
            (&[1], vec![Scalar::zero()], 3),
        ] {
            let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
            let c = origin(&dg, &c);
            for b in col_c_d(&dg, &c, d) {
                let s = specht_module(&b, &c).unwrap();
                assert!(s.pass, "{s:?}");
            }
        }
    }

    #[test]
    fn level_one_is_the_symmetric_group_seminormal_form() {
        let dg = Arc::new(PartitionDiagram::new(&[1]).unwrap());
        let c = Origin::zero(1);
        let b = Tableau::from_ints(dg, &[3]).unwrap();
        let s = specht_module(&b, &c).unwrap();
        assert_eq!(s.shapes, vec![vec![3]]);
        assert_eq!(s.dim, 1);
        assert!(s.s.iter().all(|g| *g == SparseOperator::identity(1)));
    }

    #[test]
    fn flag_dimensions() {
        for (parts, c, d) in [
            (&[2, 2][..], vec![Scalar::zero(), Scalar::zero()], 2),
            (&[1, 2], vec![Scalar::zero(), Scalar::new(1, 2)], 2),
        ] {
            let dg = Arc::new(PartitionDiagram::new(parts).unwrap());
            let c = origin(&dg, &c);
            let v = TensorSpace::new(dg, c, d, 10_000).unwrap();
            let basis = xi_basis(&v);
            let ws = PermutationWorkspace::new(&v, &basis, 1000).unwrap();
            let r = specht_flag_dim_check(&ws).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn rejects_non_column_strict() {
        let dg = Arc::new(PartitionDiagram::new(&[1, 1]).unwrap());
        let b = Tableau::from_ints(dg, &[0, 0]).unwrap();
        assert!(specht_module(&b, &Origin::zero(1)).is_err());
    }
}
