//! Tensor space `V_c^{⊗d}` with the right action of `H_d(Λ)`.

use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;

use crate::diagram_tableaux::multi_index::{left_at, place_permute, swapped};
use crate::diagram_tableaux::{MultiIndex, Origin, PartitionDiagram, TensorIndexer};
use crate::exact_linear::{Scalar, SparseOperator, SparseVec};
use crate::hecke_algebra::{CyclotomicParams, HeckeElement, HeckeMonomial, Perm};

use super::TensorError;

/// Operator images of the generators `x₁, …, x_d` and `s₁, …, s_{d−1}`.
#[derive(Clone, Debug)]
pub struct GeneratorImages {
    pub x: Vec<SparseOperator>,
    pub s: Vec<SparseOperator>,
}

/// `V_c^{⊗d}` with basis `v_i`, `i ∈ I^d` in lexicographic order. Operators
/// use the column convention: column `m` holds the image of the `m`-th basis
/// vector, so a right action satisfies `M(ab) = M(b)·M(a)`.
pub struct TensorSpace {
    diagram: Arc<PartitionDiagram>,
    origin: Origin,
    d: usize,
    indexer: TensorIndexer,
    roots: Vec<Scalar>,
    x_ops: OnceLock<Vec<SparseOperator>>,
    s_ops: OnceLock<Vec<SparseOperator>>,
    x_powers: std::sync::Mutex<FxHashMap<(usize, u8), Arc<SparseOperator>>>,
}

impl std::fmt::Debug for TensorSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TensorSpace")
            .field("parts", &self.diagram.parts())
            .field("origin", &self.origin)
            .field("d", &self.d)
            .finish()
    }
}

impl TensorSpace {
    /// Fails if `N^d` exceeds `cap` or the origin does not fit the diagram.
    pub fn new(
        diagram: Arc<PartitionDiagram>,
        origin: Origin,
        d: usize,
        cap: usize,
    ) -> Result<Self, TensorError> {
        if origin.len() != diagram.level() {
            return Err(TensorError::Diagram(
                crate::diagram_tableaux::DiagramError::OriginLength {
                    expected: diagram.level(),
                    found: origin.len(),
                },
            ));
        }
        let n = diagram.boxes();
        let dim = TensorIndexer::checked_dim(n, d).ok_or(TensorError::CapExceeded {
            required: u128::MAX,
            cap: cap as u128,
        })?;
        if dim > cap {
            return Err(TensorError::CapExceeded {
                required: dim as u128,
                cap: cap as u128,
            });
        }
        let roots = origin.roots(&diagram);
        Ok(TensorSpace {
            diagram,
            origin,
            d,
            indexer: TensorIndexer::new(n, d),
            roots,
            x_ops: OnceLock::new(),
            s_ops: OnceLock::new(),
            x_powers: Default::default(),
        })
    }

    pub fn diagram(&self) -> &PartitionDiagram {
        &self.diagram
    }

    pub fn diagram_arc(&self) -> &Arc<PartitionDiagram> {
        &self.diagram
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.indexer.dim()
    }

    pub fn indexer(&self) -> &TensorIndexer {
        &self.indexer
    }

    /// The roots `Q_j = c_j + q_j − n`.
    pub fn roots(&self) -> &[Scalar] {
        &self.roots
    }

    pub fn params(&self) -> CyclotomicParams {
        CyclotomicParams::cyclotomic(self.d, self.roots.clone())
    }

    pub fn index(&self, i: &[usize]) -> usize {
        self.indexer.encode(i)
    }

    pub fn multi_index(&self, m: usize) -> MultiIndex {
        self.indexer.decode(m)
    }

    pub fn basis(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        self.indexer.all()
    }

    /// `Σ_t (l − col(i_t))`.
    pub fn degree(&self, i: &[usize]) -> usize {
        let l = self.diagram.level();
        i.iter().map(|b| l - self.diagram.col(*b)).sum()
    }

    fn build_x(&self, j: usize) -> SparseOperator {
        let dg = &self.diagram;
        let cols = (0..self.dim()).map(|m| {
            let i = self.indexer.decode(m);
            let mut pairs: Vec<(usize, Scalar)> = Vec::new();
            if let Some(li) = left_at(dg, &i, j) {
                pairs.push((self.index(&li), Scalar::one()));
            }
            let cj = dg.col(i[j]);
            let q = &self.roots[cj - 1];
            if !q.is_zero() {
                pairs.push((m, q.clone()));
            }
            for k in 0..j {
                if dg.col(i[k]) >= cj {
                    pairs.push((self.index(&swapped(&i, k, j)), Scalar::one()));
                }
            }
            for k in j + 1..self.d {
                if dg.col(i[k]) < cj {
                    pairs.push((self.index(&swapped(&i, j, k)), Scalar::from_int(-1)));
                }
            }
            SparseVec::from_pairs(pairs)
        });
        SparseOperator::from_columns(self.dim(), cols.collect())
    }

    fn x_ops(&self) -> &[SparseOperator] {
        self.x_ops
            .get_or_init(|| (0..self.d).map(|j| self.build_x(j)).collect())
    }

    fn s_ops(&self) -> &[SparseOperator] {
        self.s_ops.get_or_init(|| {
            (0..self.d.saturating_sub(1))
                .map(|j| self.act_perm(&Perm::simple(self.d, j)))
                .collect()
        })
    }

    /// The action of `x_j` (`1 ≤ j ≤ d`).
    pub fn act_xj(&self, j: usize) -> Result<SparseOperator, TensorError> {
        if j == 0 || j > self.d {
            return Err(TensorError::OutOfRange {
                name: format!("x{j}"),
                d: self.d,
            });
        }
        Ok(self.x_ops()[j - 1].clone())
    }

    /// The action of `s_j` (`1 ≤ j < d`).
    pub fn act_sj(&self, j: usize) -> Result<SparseOperator, TensorError> {
        if j == 0 || j >= self.d {
            return Err(TensorError::OutOfRange {
                name: format!("s{j}"),
                d: self.d,
            });
        }
        Ok(self.s_ops()[j - 1].clone())
    }

    /// Place permutation `v_i ↦ v_{i·w}`.
    pub fn act_perm(&self, w: &Perm) -> SparseOperator {
        let one_line = w.one_line();
        let triplets = (0..self.dim()).map(|m| {
            let i = self.indexer.decode(m);
            (self.index(&place_permute(&i, &one_line)), m, Scalar::one())
        });
        SparseOperator::from_triplets(self.dim(), triplets)
    }

    /// All generator images of the filtered action.
    pub fn generator_images(&self) -> GeneratorImages {
        GeneratorImages {
            x: self.x_ops().to_vec(),
            s: self.s_ops().to_vec(),
        }
    }

    /// The graded action: `x_i` acts by `e` in slot `i`, `s_i` by place permutation.
    pub fn graded_action(&self) -> GeneratorImages {
        let dg = &self.diagram;
        let x = (0..self.d)
            .map(|j| {
                let triplets = (0..self.dim()).filter_map(|m| {
                    let i = self.indexer.decode(m);
                    left_at(dg, &i, j).map(|li| (self.index(&li), m, Scalar::one()))
                });
                SparseOperator::from_triplets(self.dim(), triplets)
            })
            .collect();
        GeneratorImages {
            x,
            s: self.s_ops().to_vec(),
        }
    }

    fn x_power(&self, k: usize, e: u8) -> Arc<SparseOperator> {
        if let Some(hit) = self.x_powers.lock().expect("poisoned").get(&(k, e)) {
            return hit.clone();
        }
        let op = Arc::new(if e == 0 {
            SparseOperator::identity(self.dim())
        } else {
            self.x_power(k, e - 1).mul(&self.x_ops()[k])
        });
        self.x_powers
            .lock()
            .expect("poisoned")
            .insert((k, e), op.clone());
        op
    }

    /// `Ψ(x^r w) = M(w)·M(x₁)^{r₁}⋯M(x_d)^{r_d}`.
    pub fn psi_monomial(&self, m: &HeckeMonomial) -> SparseOperator {
        let mut op: Option<SparseOperator> = None;
        for (k, e) in m.exps.iter().enumerate() {
            if *e > 0 {
                let p = self.x_power(k, *e);
                op = Some(match op {
                    None => (*p).clone(),
                    Some(o) => o.mul(&p),
                });
            }
        }
        let w = self.act_perm(&m.perm);
        match op {
            None => w,
            Some(o) => w.mul(&o),
        }
    }

    /// Whether elements with these parameters act on this space: same `d`, and
    /// either affine or with a root multiset containing the space's roots.
    pub fn accepts(&self, params: &CyclotomicParams) -> bool {
        if params.d() != self.d {
            return false;
        }
        let Some(roots) = params.roots() else {
            return true;
        };
        let mut pool: Vec<Scalar> = roots.to_vec();
        for q in &self.roots {
            match pool.iter().position(|p| p == q) {
                Some(pos) => {
                    pool.swap_remove(pos);
                }
                None => return false,
            }
        }
        true
    }

    /// The operator of an algebra element.
    pub fn psi(&self, a: &HeckeElement) -> Result<SparseOperator, TensorError> {
        if !self.accepts(a.params()) {
            return Err(TensorError::ParamsMismatch);
        }
        let mut acc = SparseOperator::zero(self.dim());
        for (m, c) in a.terms() {
            acc = acc.add_scaled(c, &self.psi_monomial(m));
        }
        Ok(acc)
    }
}
