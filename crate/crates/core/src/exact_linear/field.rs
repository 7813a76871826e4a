//! The field abstraction shared by the exact solver and its prime-field twin.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::scalar::Scalar;

/// Minimal field interface used by the sparse linear algebra kernels.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Reduces an exact rational into this field, `None` if the denominator vanishes.
    fn from_scalar(s: &Scalar) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Scalar::inv(self)
    }
    fn from_i64(v: i64) -> Self {
        Scalar::from_int(v)
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        Some(s.clone())
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

/// The Mersenne prime 2^61 - 1.
pub const PRIME: u64 = (1u64 << 61) - 1;

/// Residues modulo [`PRIME`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % PRIME)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce128(x: u128) -> u64 {
        let lo = (x as u64) & PRIME;
        let hi = (x >> 61) as u64;
        let mut s = lo + (hi & PRIME) + (hi >> 61);
        while s >= PRIME {
            s -= PRIME;
        }
        s
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(n: &BigInt) -> Fp {
        let m = BigInt::from(PRIME);
        let mut r = n % &m;
        if r < BigInt::from(0) {
            r += &m;
        }
        Fp(r.to_u64().expect("residue fits"))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            Fp(self.0 - other.0)
        } else {
            Fp(self.0 + PRIME - other.0)
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Fp::reduce128(self.0 as u128 * other.0 as u128))
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(PRIME - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(PRIME - 2)
    }
    fn from_i64(v: i64) -> Self {
        if v >= 0 {
            Fp::new(v as u64)
        } else {
            Field::neg(&Fp::new(v.unsigned_abs()))
        }
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        let n = Fp::from_bigint(&s.numer());
        let d = Fp::from_bigint(&s.denom());
        if d.is_zero() {
            None
        } else {
            Some(Field::mul(&n, &Field::inv(&d)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let a = Fp::from_i64(-3);
        let b = Fp::from_i64(5);
        assert_eq!(a.add(&b), Fp::from_i64(2));
        assert_eq!(a.mul(&b), Fp::from_i64(-15));
        assert_eq!(b.mul(&b.inv()), Fp::one());
        let half = Fp::from_scalar(&Scalar::new(1, 2)).unwrap();
        assert_eq!(half.add(&half), Fp::one());
    }
}
