//! Prime field arithmetic.
//!
//! Scalars are plain `u32` residues in `[0, p)`; the [`FieldSpec`] carries the
//! characteristic and performs every operation, so vectors stay compact.

use crate::error::{Error, Result};

/// A residue modulo the characteristic of a [`FieldSpec`].
pub type Scalar = u32;

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Validates that `p` is prime.
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// The characteristic.
    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as Scalar
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    /// Multiplicative inverse; panics on zero, which is always a logic error.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, a: Scalar, mut e: u32) -> Scalar {
        let mut base = a % self.p;
        let mut acc: Scalar = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }

    /// `(-1)^e` as a field element.
    #[inline]
    pub fn sign(&self, e: i64) -> Scalar {
        if e.rem_euclid(2) == 0 {
            1 % self.p
        } else {
            self.neg(1 % self.p)
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for display.
    pub fn centered(&self, a: Scalar) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// The nonzero elements `1..p`.
    pub fn units(&self) -> impl Iterator<Item = Scalar> {
        1..self.p
    }
}
