//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Prime field elements carry their modulus so that binary operations need no
//! external context; the modulus is fixed by the [`PolyRing`](crate::PolyRing)
//! that created them.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::univariate::UniPoly;

/// Runtime description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientDomain {
    Rationals,
    PrimeField(u32),
}

impl CoefficientDomain {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientDomain::Rationals => 0,
            CoefficientDomain::PrimeField(p) => *p as u64,
        }
    }
}

impl Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::Rationals => write!(f, "Q"),
            CoefficientDomain::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field whose elements may depend on a runtime context (the modulus).
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    type Ctx: Clone + Debug + PartialEq + Eq + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(n: i64, ctx: &Self::Ctx) -> Self;
    /// Image of a rational number; `None` when the denominator is not invertible.
    fn from_rational(r: &BigRational, ctx: &Self::Ctx) -> Option<Self>;
    fn domain(ctx: &Self::Ctx) -> CoefficientDomain;
    fn validate_ctx(ctx: &Self::Ctx) -> Result<()>;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Split into a sign and an absolute-value literal for printing.
    fn sign_and_magnitude(&self) -> (bool, String);

    /// All roots of a nonzero univariate polynomial lying in the field itself.
    fn univariate_roots(f: &UniPoly<Self>, ctx: &Self::Ctx) -> Result<Vec<Self>>;

    fn characteristic(ctx: &Self::Ctx) -> u64 {
        Self::domain(ctx).characteristic()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn one_like(&self) -> Self;
}

pub type Rational = BigRational;

impl Field for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(n: i64, _: &()) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(r: &BigRational, _: &()) -> Option<Self> {
        Some(r.clone())
    }
    fn domain(_: &()) -> CoefficientDomain {
        CoefficientDomain::Rationals
    }
    fn validate_ctx(_: &()) -> Result<()> {
        Ok(())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
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
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn sign_and_magnitude(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
    fn one_like(&self) -> Self {
        <BigRational as One>::one()
    }
    fn univariate_roots(f: &UniPoly<Self>, _: &()) -> Result<Vec<Self>> {
        crate::univariate::rational_roots(f)
    }
}

/// Element of `F_p` stored as its reduced representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        Fp {
            value: value.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for Fp {
    type Ctx = u32;

    fn zero(p: &u32) -> Self {
        Fp { value: 0, modulus: *p }
    }
    fn one(p: &u32) -> Self {
        Fp::new(1, *p)
    }
    fn from_i64(n: i64, p: &u32) -> Self {
        Fp::new(n, *p)
    }
    fn from_rational(r: &BigRational, p: &u32) -> Option<Self> {
        let m = BigInt::from(*p);
        let num = r.numer().mod_floor(&m).to_i64()?;
        let den = r.denom().mod_floor(&m).to_i64()?;
        Fp::new(num, *p).div(&Fp::new(den, *p))
    }
    fn domain(p: &u32) -> CoefficientDomain {
        CoefficientDomain::PrimeField(*p)
    }
    fn validate_ctx(p: &u32) -> Result<()> {
        if is_prime(*p as u64) {
            Ok(())
        } else {
            Err(Error::NotPrime(*p as u64))
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1 % self.modulus
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value as u64 + other.value as u64;
        let m = self.modulus as u64;
        Fp {
            value: if s >= m { (s - m) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let value = if self.value >= other.value {
            self.value - other.value
        } else {
            (self.value as u64 + self.modulus as u64 - other.value as u64) as u32
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            value: ((self.value as u64 * other.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (g, x, _) = ext_gcd(self.value as i64, self.modulus as i64);
        debug_assert_eq!(g, 1);
        Some(Fp::new(x, self.modulus))
    }
    fn sign_and_magnitude(&self) -> (bool, String) {
        (false, self.value.to_string())
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }
    fn univariate_roots(f: &UniPoly<Self>, p: &u32) -> Result<Vec<Self>> {
        crate::univariate::prime_field_roots(f, *p)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let p = 7u32;
        let a = Fp::new(3, p);
        let b = Fp::new(5, p);
        assert_eq!(a.add(&b).value(), 1);
        assert_eq!(a.sub(&b).value(), 5);
        assert_eq!(a.mul(&b).value(), 1);
        assert_eq!(a.inv().unwrap().value(), 5);
        assert_eq!(Fp::new(-1, p).value(), 6);
        assert!(Fp::zero(&p).inv().is_none());
        for v in 1..7 {
            let x = Fp::new(v, p);
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_image_in_prime_field() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(Fp::from_rational(&half, &5).unwrap().value(), 3);
        assert!(Fp::from_rational(&half, &2).is_none());
    }

    #[test]
    fn pow_and_primality() {
        assert_eq!(Fp::new(2, 101).pow(100).value(), 1);
        assert_eq!(Fp::new(3, 7).pow(0).value(), 1);
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(Fp::validate_ctx(&6).is_err());
    }
}
