//! Univariate polynomials with exact coefficients and minimal polynomials.

use std::fmt;

use super::echelon::Echelon;
use super::scalar::Scalar;
use super::sparse::SparseOperator;

/// A univariate polynomial, coefficients listed from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Scalar::one()],
        }
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Self {
        Polynomial::new(vec![-root, Scalar::one()])
    }

    /// `Π (x - root)` over the given roots.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, r| acc.mul(&Polynomial::linear(r)))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Evaluates `p(op)` by Horner's rule.
    pub fn eval_operator(&self, op: &SparseOperator) -> SparseOperator {
        let dim = op.dim();
        self.coeffs
            .iter()
            .rev()
            .fold(SparseOperator::zero(dim), |acc, c| {
                op.mul(&acc).add(&SparseOperator::scalar(dim, c))
            })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mon = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{deg}"),
            };
            if deg == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{abs}*{mon}")?;
            }
        }
        Ok(())
    }
}

/// The monic polynomial of least degree annihilating `op`, found from the
/// first linear dependency among `1, op, op^2, …`.
pub fn minimal_polynomial(op: &SparseOperator) -> Polynomial {
    let dim = op.dim();
    let mut e: Echelon<Scalar> = Echelon::tracking();
    let mut power = SparseOperator::identity(dim);
    for k in 0..=dim {
        if let Some(rel) = e.insert(&power.to_flat()) {
            let mut coeffs: Vec<Scalar> = (0..k).map(|i| -rel.get(i)).collect();
            coeffs.push(Scalar::one());
            return Polynomial::new(coeffs);
        }
        power = op.mul(&power);
    }
    unreachable!("a dependency appears by degree dim")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        assert_eq!(
            minimal_polynomial(&SparseOperator::zero(3)).to_string(),
            "x"
        );
        assert_eq!(
            minimal_polynomial(&SparseOperator::identity(3)).to_string(),
            "x - 1"
        );
        assert_eq!(
            minimal_polynomial(&SparseOperator::zero(0)).to_string(),
            "1"
        );
    }

    #[test]
    fn small_nilpotent_plus_diagonal() {
        let op = SparseOperator::from_triplets(
            3,
            vec![(1, 2, Scalar::one()), (2, 2, Scalar::from_int(-1))],
        );
        let p = minimal_polynomial(&op);
        assert_eq!(p.to_string(), "x^2 + x");
        assert_eq!(
            p,
            Polynomial::from_roots(&[Scalar::zero(), Scalar::from_int(-1)])
        );
        assert!(p.eval_operator(&op).is_zero());
    }

    #[test]
    fn display_fractions() {
        let p = Polynomial::from_roots(&[Scalar::new(1, 2), Scalar::new(-3, 2)]);
        assert_eq!(p.to_string(), "x^2 + x - 3/4");
    }
}
