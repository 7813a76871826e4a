//! The algebra `H_d(Λ)` (or affine `H_d`) with its normal-form basis
//! `x₁^{r₁} ⋯ x_d^{r_d} w` and multiplication by rewriting.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::exact_linear::Scalar;

use super::params::CyclotomicParams;
use super::perm::Perm;
use super::HeckeError;

/// Exponent vector `(r₁, …, r_d)` (0-based positions).
pub type Exps = Vec<u8>;

/// The monomial `x₁^{r₁} ⋯ x_d^{r_d} · w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HeckeMonomial {
    pub exps: Exps,
    pub perm: Perm,
}

impl HeckeMonomial {
    pub fn new(exps: Exps, perm: Perm) -> Self {
        HeckeMonomial { exps, perm }
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|e| *e as usize).sum()
    }
}

type TermList = Arc<Vec<(HeckeMonomial, Scalar)>>;

/// Coefficient accumulator keyed by monomial.
#[derive(Default)]
struct Acc(FxHashMap<HeckeMonomial, Scalar>);

impl Acc {
    fn add(&mut self, m: HeckeMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m).or_default();
        *e += &c;
    }

    fn into_list(self) -> Vec<(HeckeMonomial, Scalar)> {
        let mut v: Vec<_> = self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// The algebra with memo tables for the two rewriting steps: moving a
/// permutation past a polynomial, and reducing exponents below the level.
pub struct HeckeAlgebra {
    params: CyclotomicParams,
    remainders: Mutex<Vec<Vec<Scalar>>>,
    nf_cache: Mutex<FxHashMap<Exps, TermList>>,
    perm_cache: Mutex<FxHashMap<(Perm, Exps), TermList>>,
}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeckeAlgebra")
            .field("params", &self.params)
            .finish()
    }
}

/// Terms `(exps', coeff)` of the divided difference `∂_i x^e` where
/// `s_i f = (s_i·f) s_i + ∂_i f` and `∂_i f = (f − s_i·f)/(x_{i+1} − x_i)`.
pub fn divided_difference(e: &[u8], i: usize) -> Vec<(Exps, Scalar)> {
    let (p, q) = (e[i], e[i + 1]);
    let (lo, span, sign) = match p.cmp(&q) {
        std::cmp::Ordering::Equal => return Vec::new(),
        std::cmp::Ordering::Greater => (q, p - q, -1),
        std::cmp::Ordering::Less => (p, q - p, 1),
    };
    (0..span)
        .map(|a| {
            let mut f = e.to_vec();
            f[i] = lo + a;
            f[i + 1] = lo + (span - 1 - a);
            (f, Scalar::from_int(sign))
        })
        .collect()
}

impl HeckeAlgebra {
    pub fn new(params: CyclotomicParams) -> Arc<Self> {
        Arc::new(HeckeAlgebra {
            params,
            remainders: Mutex::new(Vec::new()),
            nf_cache: Mutex::new(FxHashMap::default()),
            perm_cache: Mutex::new(FxHashMap::default()),
        })
    }

    pub fn params(&self) -> &CyclotomicParams {
        &self.params
    }

    pub fn d(&self) -> usize {
        self.params.d()
    }

    pub fn level(&self) -> Option<usize> {
        self.params.level()
    }

    /// The normal-form monomial basis (exponents below the level), ordered by
    /// exponent vector, then permutation. Affine algebras have no finite basis.
    pub fn basis(&self) -> Option<Vec<HeckeMonomial>> {
        let l = self.level()?;
        let d = self.d();
        let perms = Perm::all(d);
        let mut out = Vec::new();
        let total = l.pow(d as u32);
        for code in 0..total {
            let mut exps = vec![0u8; d];
            let mut c = code;
            for k in (0..d).rev() {
                exps[k] = (c % l) as u8;
                c /= l;
            }
            for w in &perms {
                out.push(HeckeMonomial::new(exps.clone(), w.clone()));
            }
        }
        Some(out)
    }

    /// `x^k mod Π (x − Q_i)` as coefficients of `1, x, …, x^{l−1}`.
    fn remainder(&self, k: usize) -> Vec<Scalar> {
        let l = self.level().expect("cyclotomic");
        let mut cache = self.remainders.lock().expect("poisoned");
        if cache.is_empty() {
            let f = self.params.cyclotomic_polynomial().expect("cyclotomic");
            let mut r = vec![Scalar::zero(); l];
            if l > 0 {
                r[0] = Scalar::one();
            }
            let _ = f;
            cache.push(r);
        }
        let f = self.params.cyclotomic_polynomial().expect("cyclotomic");
        while cache.len() <= k {
            let prev = cache.last().expect("seeded").clone();
            let mut next = vec![Scalar::zero(); l];
            next[1..l].clone_from_slice(&prev[..l - 1]);
            let top = prev[l - 1].clone();
            if !top.is_zero() {
                for (i, n) in next.iter_mut().enumerate() {
                    *n -= &(&top * &f.coeffs()[i]);
                }
            }
            cache.push(next);
        }
        cache[k].clone()
    }

    /// `u · x^e` in the affine algebra, as terms `x^{e'} w`.
    fn perm_times(&self, u: &Perm, e: &[u8]) -> TermList {
        let key = (u.clone(), e.to_vec());
        if let Some(hit) = self.perm_cache.lock().expect("poisoned").get(&key) {
            return hit.clone();
        }
        let d = self.d();
        let result = if u.is_identity() {
            vec![(
                HeckeMonomial::new(e.to_vec(), Perm::identity(d)),
                Scalar::one(),
            )]
        } else {
            let t = u.reduced_word()[0];
            let s = Perm::simple(d, t);
            let rest = s.compose(u);
            let inner = self.perm_times(&rest, e);
            let mut acc = Acc::default();
            for (m, c) in inner.iter() {
                let mut sf = m.exps.clone();
                sf.swap(t, t + 1);
                acc.add(HeckeMonomial::new(sf, s.compose(&m.perm)), c.clone());
                for (g, cg) in divided_difference(&m.exps, t) {
                    acc.add(HeckeMonomial::new(g, m.perm.clone()), c * &cg);
                }
            }
            acc.into_list()
        };
        let result = Arc::new(result);
        self.perm_cache
            .lock()
            .expect("poisoned")
            .insert(key, result.clone());
        result
    }

    /// Normal form of `x^e` in the cyclotomic quotient.
    fn nf(&self, e: &[u8]) -> TermList {
        let d = self.d();
        let Some(l) = self.level() else {
            return Arc::new(vec![(
                HeckeMonomial::new(e.to_vec(), Perm::identity(d)),
                Scalar::one(),
            )]);
        };
        if let Some(hit) = self.nf_cache.lock().expect("poisoned").get(e) {
            return hit.clone();
        }
        let result = match e.iter().rposition(|x| *x as usize >= l) {
            None => vec![(
                HeckeMonomial::new(e.to_vec(), Perm::identity(d)),
                Scalar::one(),
            )],
            Some(0) => {
                let rem = self.remainder(e[0] as usize);
                let mut out = Vec::new();
                for (k, c) in rem.into_iter().enumerate() {
                    if !c.is_zero() {
                        let mut f = e.to_vec();
                        f[0] = k as u8;
                        out.push((HeckeMonomial::new(f, Perm::identity(d)), c));
                    }
                }
                out.sort_by(|a, b| a.0.cmp(&b.0));
                out
            }
            Some(j) => {
                let mut prefix = e.to_vec();
                let mut tail = e.to_vec();
                for (p, (pre, t)) in prefix.iter_mut().zip(tail.iter_mut()).enumerate() {
                    if p >= j {
                        *pre = 0;
                    }
                    if p <= j {
                        *t = 0;
                    }
                }
                let k = e[j];
                let mut acc = Acc::default();
                for (m, c) in self.nf(&prefix).iter() {
                    for (m2, c2) in self.nf_single(&m.exps, j, k).iter() {
                        let exps: Exps = m2.exps.iter().zip(&tail).map(|(a, b)| a + b).collect();
                        acc.add(HeckeMonomial::new(exps, m2.perm.compose(&m.perm)), c * c2);
                    }
                }
                acc.into_list()
            }
        };
        let result = Arc::new(result);
        self.nf_cache
            .lock()
            .expect("poisoned")
            .insert(e.to_vec(), result.clone());
        result
    }

    /// Normal form of `x^r x_j^k` with `r < l` supported before `j ≥ 1` and
    /// `k ≥ l`, via `x_j^k = s x_{j−1}^k s + Σ_{a+b=k−1} x_{j−1}^a x_j^b s`
    /// and `x_{j−1}^ρ s = s x_j^ρ − Σ_{a+b=ρ−1} x_{j−1}^a x_j^b`, `s = s_{j−1}`.
    fn nf_single(&self, r: &[u8], j: usize, k: u8) -> Vec<(HeckeMonomial, Scalar)> {
        let d = self.d();
        let s = Perm::simple(d, j - 1);
        let rho = r[j - 1];
        let mut rp = r.to_vec();
        rp[j - 1] = 0;
        let mut acc = Acc::default();
        let mut e1 = rp.clone();
        e1[j - 1] = k;
        for (m, c) in self.nf(&e1).iter() {
            let mut t = m.exps.clone();
            t[j] = rho;
            let mut st = t.clone();
            st.swap(j - 1, j);
            acc.add(
                HeckeMonomial::new(st, s.compose(&m.perm).compose(&s)),
                c.clone(),
            );
            for (g, cg) in divided_difference(&t, j - 1) {
                acc.add(HeckeMonomial::new(g, m.perm.compose(&s)), c * &cg);
            }
        }
        for a in 0..k {
            let mut e2 = r.to_vec();
            e2[j - 1] += a;
            e2[j] = k - 1 - a;
            for (m, c) in self.nf(&e2).iter() {
                acc.add(
                    HeckeMonomial::new(m.exps.clone(), m.perm.compose(&s)),
                    c.clone(),
                );
            }
        }
        for a in 0..rho {
            let mut e3 = rp.clone();
            e3[j - 1] = a + k;
            e3[j] = rho - 1 - a;
            for (m, c) in self.nf(&e3).iter() {
                acc.add(HeckeMonomial::new(m.exps.clone(), m.perm.compose(&s)), -c);
            }
        }
        acc.into_list()
    }

    /// Normal form of an arbitrary monomial `x^e · w`.
    fn normalize_into(&self, acc: &mut Acc, e: &[u8], w: &Perm, c: &Scalar) {
        for (m, cm) in self.nf(e).iter() {
            acc.add(
                HeckeMonomial::new(m.exps.clone(), m.perm.compose(w)),
                c * cm,
            );
        }
    }

    /// The product of two normal-form monomials, in normal form.
    pub fn multiply_monomials(
        &self,
        a: &HeckeMonomial,
        b: &HeckeMonomial,
    ) -> Vec<(HeckeMonomial, Scalar)> {
        let mut acc = Acc::default();
        self.multiply_into(&mut acc, a, b, &Scalar::one());
        acc.into_list()
    }

    fn multiply_into(&self, acc: &mut Acc, a: &HeckeMonomial, b: &HeckeMonomial, c: &Scalar) {
        for (m, cm) in self.perm_times(&a.perm, &b.exps).iter() {
            let exps: Exps = a.exps.iter().zip(&m.exps).map(|(x, y)| x + y).collect();
            let w = m.perm.compose(&b.perm);
            self.normalize_into(acc, &exps, &w, &(c * cm));
        }
    }
}

/// An element of `H_d(Λ)` (or `H_d`): a finite combination of normal-form
/// monomials with nonzero exact coefficients.
#[derive(Clone)]
pub struct HeckeElement {
    alg: Arc<HeckeAlgebra>,
    terms: BTreeMap<HeckeMonomial, Scalar>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.params == other.alg.params && self.terms == other.terms
    }
}

impl Eq for HeckeElement {}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl HeckeElement {
    fn from_acc(alg: &Arc<HeckeAlgebra>, acc: Acc) -> Self {
        HeckeElement {
            alg: alg.clone(),
            terms: acc.into_list().into_iter().collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<HeckeAlgebra> {
        &self.alg
    }

    pub fn params(&self) -> &CyclotomicParams {
        &self.alg.params
    }

    pub fn terms(&self) -> &BTreeMap<HeckeMonomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &HeckeMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &HeckeElement) -> Result<(), HeckeError> {
        if self.alg.params != other.alg.params {
            return Err(HeckeError::ParamsMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, c: &Scalar, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, v) in &other.terms {
            let e = terms.entry(m.clone()).or_default();
            *e += &(c * v);
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(HeckeElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement {
                alg: self.alg.clone(),
                terms: BTreeMap::new(),
            };
        }
        HeckeElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Adds a scalar multiple of the identity.
    pub fn add_scalar(&self, c: &Scalar) -> HeckeElement {
        let one = self.alg.one();
        self.add_scaled(c, &one).expect("same algebra")
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(other)?;
        let mut acc = Acc::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                self.alg.multiply_into(&mut acc, a, b, &(ca * cb));
            }
        }
        Ok(HeckeElement::from_acc(&self.alg, acc))
    }

    pub fn pow(&self, e: u32) -> HeckeElement {
        let mut acc = self.alg.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    /// The anti-involution fixing every `x_k` and `s_i`.
    pub fn star(&self) -> HeckeElement {
        let mut acc = Acc::default();
        let d = self.alg.d();
        for (m, c) in &self.terms {
            let left = HeckeMonomial::new(vec![0; d], m.perm.inverse());
            let right = HeckeMonomial::new(m.exps.clone(), Perm::identity(d));
            self.alg.multiply_into(&mut acc, &left, &right, c);
        }
        HeckeElement::from_acc(&self.alg, acc)
    }

    /// The element rewritten as `Σ c · w x^r` (permutation on the left), returned
    /// as `(w, r, c)` sorted by `(w, r)`.
    pub fn perm_left_terms(&self) -> Vec<(Perm, Exps, Scalar)> {
        let mut out: Vec<(Perm, Exps, Scalar)> = self
            .star()
            .terms
            .into_iter()
            .map(|(m, c)| (m.perm.inverse(), m.exps, c))
            .collect();
        out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        out
    }

    /// Largest total `x`-degree among the terms.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }
}

impl HeckeAlgebra {
    pub fn zero(self: &Arc<Self>) -> HeckeElement {
        HeckeElement {
            alg: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> HeckeElement {
        self.monomial(&vec![0; self.d()], &Perm::identity(self.d()))
    }

    pub fn scalar(self: &Arc<Self>, c: &Scalar) -> HeckeElement {
        self.one().scale(c)
    }

    /// `x^e · w`, reduced to normal form.
    pub fn monomial(self: &Arc<Self>, e: &[u8], w: &Perm) -> HeckeElement {
        assert_eq!(e.len(), self.d(), "exponent length");
        assert_eq!(w.degree(), self.d(), "permutation degree");
        let mut acc = Acc::default();
        self.normalize_into(&mut acc, e, w, &Scalar::one());
        HeckeElement::from_acc(self, acc)
    }

    /// The element with a single basis term (must already be normal).
    pub fn basis_element(self: &Arc<Self>, m: &HeckeMonomial) -> HeckeElement {
        self.monomial(&m.exps, &m.perm)
    }

    /// `x_j` for `1 ≤ j ≤ d`.
    pub fn x(self: &Arc<Self>, j: usize) -> Result<HeckeElement, HeckeError> {
        let d = self.d();
        if j == 0 || j > d {
            return Err(HeckeError::GeneratorOutOfRange {
                name: format!("x{j}"),
                d,
            });
        }
        let mut e = vec![0; d];
        e[j - 1] = 1;
        Ok(self.monomial(&e, &Perm::identity(d)))
    }

    /// `s_i` for `1 ≤ i < d`.
    pub fn s(self: &Arc<Self>, i: usize) -> Result<HeckeElement, HeckeError> {
        let d = self.d();
        if i == 0 || i >= d {
            return Err(HeckeError::GeneratorOutOfRange {
                name: format!("s{i}"),
                d,
            });
        }
        Ok(self.monomial(&vec![0; d], &Perm::simple(d, i - 1)))
    }

    /// The permutation `w` as an element.
    pub fn perm(self: &Arc<Self>, w: &Perm) -> HeckeElement {
        self.monomial(&vec![0; self.d()], w)
    }

    /// Generators `x₁, s₁, …, s_{d−1}`.
    pub fn generators(self: &Arc<Self>) -> Vec<HeckeElement> {
        let d = self.d();
        if d == 0 {
            return Vec::new();
        }
        let mut g = vec![self.x(1).expect("d ≥ 1")];
        for i in 1..d {
            g.push(self.s(i).expect("in range"));
        }
        g
    }

    /// Builds an element from explicit terms, reducing each to normal form.
    pub fn from_terms(self: &Arc<Self>, terms: &[(Exps, Perm, Scalar)]) -> HeckeElement {
        let mut acc = Acc::default();
        for (e, w, c) in terms {
            self.normalize_into(&mut acc, e, w, c);
        }
        HeckeElement::from_acc(self, acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn basic_commutation() {
        let h = HeckeAlgebra::new(CyclotomicParams::affine(2));
        let lhs = h.s(1).unwrap().mul(&h.x(2).unwrap()).unwrap();
        let rhs = h
            .x(1)
            .unwrap()
            .mul(&h.s(1).unwrap())
            .unwrap()
            .add_scalar(&int(1));
        assert_eq!(lhs, rhs);
        let lhs = h.s(1).unwrap().mul(&h.x(1).unwrap()).unwrap();
        let rhs = h
            .x(2)
            .unwrap()
            .mul(&h.s(1).unwrap())
            .unwrap()
            .add_scalar(&int(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn level_two_square() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(1, vec![int(0), int(-1)]));
        let x = h.x(1).unwrap();
        assert_eq!(x.mul(&x).unwrap(), x.scale(&int(-1)));
    }

    #[test]
    fn cyclotomic_relation_in_higher_positions() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(3, vec![int(0), int(-1)]));
        for j in 1..=3 {
            let x = h.x(j).unwrap();
            let _ = x.pow(4);
        }
        let x1 = h.x(1).unwrap();
        assert!(x1.mul(&x1.add_scalar(&int(1))).unwrap().is_zero());
    }

    #[test]
    fn associativity_on_generators() {
        let h = HeckeAlgebra::new(CyclotomicParams::cyclotomic(
            3,
            vec![int(0), Scalar::new(1, 2)],
        ));
        let mut gens = h.generators();
        gens.push(h.x(2).unwrap());
        gens.push(h.x(3).unwrap());
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    let ab_c = a.mul(b).unwrap().mul(c).unwrap();
                    let a_bc = a.mul(&b.mul(c).unwrap()).unwrap();
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }

    #[test]
    fn star_is_anti_involution() {
        let h = HeckeAlgebra::new(CyclotomicParams::affine(3));
        let a = h.x(2).unwrap().mul(&h.s(1).unwrap()).unwrap();
        let b = h.s(2).unwrap().mul(&h.x(3).unwrap()).unwrap();
        let lhs = a.mul(&b).unwrap().star();
        let rhs = b.star().mul(&a.star()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(a.star().star(), a);
    }
}
