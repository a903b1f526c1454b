//! Dense univariate polynomials: gcds, squarefree parts and root finding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Fp};

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &K {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero");
        UniPoly::new(self.coeffs.iter().map(|c| c.mul(&inv)).collect())
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = match self.coeffs.last() {
            None => return x.sub(x),
            Some(c) => c.clone(),
        };
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self, ctx: &K::Ctx) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&K::from_i64(i as i64, ctx)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self, ctx: &K::Ctx) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut out = vec![K::zero(ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn div_rem(&self, divisor: &Self, ctx: &K::Ctx) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let inv = divisor.lead().inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![K::zero(ctx); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, ctx: &K::Ctx) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b, ctx).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f = g(x^p)` with `p` the characteristic; returns `g` (Frobenius fixes `F_p`).
    fn pth_root(&self, p: usize) -> Self {
        UniPoly::new(self.coeffs.iter().step_by(p).cloned().collect())
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self, ctx: &K::Ctx) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.degree() == Some(0) {
            return UniPoly::new(vec![K::one(ctx)]);
        }
        let p = K::characteristic(ctx) as usize;
        let d = self.derivative(ctx);
        if d.is_zero() {
            return self.pth_root(p).squarefree_part(ctx);
        }
        let g = self.gcd(&d, ctx);
        let h = self.div_rem(&g, ctx).0.monic();
        let mut rest = g;
        loop {
            let c = rest.gcd(&h, ctx);
            if c.degree() == Some(0) {
                break;
            }
            rest = rest.div_rem(&c, ctx).0;
        }
        if rest.degree().unwrap_or(0) > 0 {
            // only factors of multiplicity divisible by p remain
            let tail = rest.pth_root(p).squarefree_part(ctx);
            return h.mul(&tail, ctx).monic();
        }
        h
    }
}

const BRUTE_FORCE_LIMIT: u32 = 1 << 20;

/// Roots in `F_p` by exhaustive evaluation.
pub fn prime_field_roots(f: &UniPoly<Fp>, p: u32) -> Result<Vec<Fp>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial has every element as a root".into()));
    }
    if p > BRUTE_FORCE_LIMIT {
        return Err(Error::PointsNotEnumerable(format!("root search over F{p} exceeds the exhaustive bound")));
    }
    Ok((0..p).map(|v| Fp::new(v as i64, p)).filter(|x| f.eval(x).is_zero()).collect())
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Rational roots via the rational root theorem.
pub fn rational_roots(f: &UniPoly<BigRational>) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial has every element as a root".into()));
    }
    let lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = f.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(<BigRational as Zero>::zero());
        ints.drain(..shift);
    }
    if ints.len() > 1 {
        let too_big = || Error::PointsNotEnumerable("coefficients too large for rational root search".into());
        let num = divisors(&ints[0]).ok_or_else(too_big)?;
        let den = divisors(ints.last().expect("nonempty")).ok_or_else(too_big)?;
        let g = UniPoly::<BigRational>::new(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        let mut found = Vec::new();
        for &a in &num {
            for &b in &den {
                for sign in [1i64, -1] {
                    let x = BigRational::new(BigInt::from(a) * sign, BigInt::from(b));
                    if !found.contains(&x) && Field::is_zero(&g.eval(&x)) {
                        found.push(x);
                    }
                }
            }
        }
        roots.extend(found);
    }
    roots.sort();
    Ok(roots)
}
