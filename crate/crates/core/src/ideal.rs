//! Ideals and the operations built on Gröbner bases: quotients, saturation,
//! elimination and intersection.

use std::fmt::{self, Display};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::hilbert::HilbertData;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial, Ring, RingExt};

#[derive(Debug, Clone)]
pub struct Ideal<K: Field> {
    ring: Ring<K>,
    gens: Vec<Polynomial<K>>,
    grevlex: Arc<OnceLock<GroebnerBasis<K>>>,
}

impl<K: Field> Ideal<K> {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring<K>, gens: Vec<Polynomial<K>>) -> Self {
        for g in &gens {
            assert!(g.ring() == ring, "generator from a different ring");
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            grevlex: Arc::new(OnceLock::new()),
        }
    }

    pub fn parse(ring: &Ring<K>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn zero(ring: &Ring<K>) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: &Ring<K>) -> Self {
        Ideal::new(ring, vec![ring.one()])
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &Ring<K>) -> Self {
        Ideal::new(ring, ring.vars())
    }

    fn from_basis(gb: GroebnerBasis<K>) -> Self {
        let ideal = Ideal::new(gb.ring(), gb.elements().to_vec());
        if gb.order() == MonomialOrder::Grevlex {
            let _ = ideal.grevlex.set(gb);
        }
        ideal
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    /// Reduced grevlex basis, computed once and cached.
    pub fn groebner(&self) -> &GroebnerBasis<K> {
        self.grevlex
            .get_or_init(|| buchberger(&self.ring, &self.gens, MonomialOrder::Grevlex))
    }

    pub fn groebner_with(&self, order: MonomialOrder) -> GroebnerBasis<K> {
        if order == MonomialOrder::Grevlex {
            return self.groebner().clone();
        }
        buchberger(&self.ring, &self.gens, order)
    }

    pub fn contains(&self, p: &Polynomial<K>) -> bool {
        p.is_zero() || self.groebner().contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal<K>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals by mutual membership of generators.
    pub fn same_ideal(&self, other: &Ideal<K>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit_ideal()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn first_inhomogeneous(&self) -> Option<&Polynomial<K>> {
        self.gens.iter().find(|g| !g.is_homogeneous())
    }

    pub fn sum(&self, other: &Ideal<K>) -> Ideal<K> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with(&self, extra: &[Polynomial<K>]) -> Ideal<K> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<K>) -> Ideal<K> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The ideal generated by the reduced grevlex basis.
    pub fn minimalized(&self) -> Ideal<K> {
        Ideal::from_basis(self.groebner().clone())
    }

    /// Apply a ring homomorphism to every generator.
    pub fn map(&self, target: &Ring<K>, images: &[Polynomial<K>]) -> Result<Ideal<K>> {
        let gens = self.gens.iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens))
    }

    /// `self ∩ other` by eliminating an auxiliary variable from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal<K>) -> Ideal<K> {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let (ext, embed) = extend_with_aux(&self.ring);
        let t = ext.var(0);
        let one_minus_t = &ext.one() - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.rename_into(&ext, &embed).expect("embedding"));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.rename_into(&ext, &embed).expect("embedding"));
        }
        let gb = buchberger(&ext, &gens, MonomialOrder::Block(1));
        let back: Vec<Option<usize>> = std::iter::once(None).chain((0..self.ring.nvars()).map(Some)).collect();
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| g.rename_into(&self.ring, &back).expect("free of the auxiliary variable"))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I : f = { g : f·g ∈ I }`.
    pub fn quotient(&self, f: &Polynomial<K>) -> Result<Ideal<K>> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = f.constant_value() {
            debug_assert!(!c.is_zero());
            return Ok(self.clone());
        }
        if self.contains(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersect(&Ideal::new(&self.ring, vec![f.clone()]));
        let gens = inter
            .gens
            .iter()
            .map(|g| exact_division(g, f).expect("elements of (f) are divisible by f"))
            .collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `I : J`, the intersection of the quotients by the generators of `J`.
    pub fn quotient_ideal(&self, other: &Ideal<K>) -> Ideal<K> {
        let mut acc: Option<Ideal<K>> = None;
        for g in &other.gens {
            let q = self.quotient(g).expect("nonzero generator");
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// `I : f^∞`, iterating quotients until the chain stabilizes.
    pub fn saturate_poly(&self, f: &Polynomial<K>) -> Result<Ideal<K>> {
        let mut current = self.minimalized();
        loop {
            let next = current.quotient(f)?.minimalized();
            if current.contains_ideal(&next) {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I : J^∞ = ⋂_g (I : g^∞)` over the generators `g` of `J`.
    pub fn saturate(&self, other: &Ideal<K>) -> Ideal<K> {
        let mut acc: Option<Ideal<K>> = None;
        for g in &other.gens {
            let s = self.saturate_poly(g).expect("nonzero generator");
            acc = Some(match acc {
                None => s,
                Some(a) => {
                    if a.contains_ideal(&s) {
                        s
                    } else if s.contains_ideal(&a) {
                        a
                    } else {
                        a.intersect(&s)
                    }
                }
            });
        }
        acc.map(|a| a.minimalized()).unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// `I ∩ K[kept variables]`, returned as an ideal of the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal<K> {
        if drop.is_empty() {
            return self.minimalized();
        }
        let n = self.ring.nvars();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let perm: Vec<usize> = drop.iter().copied().chain(keep.iter().copied()).collect();
        let names: Vec<&str> = perm.iter().map(|&i| self.ring.var_names()[i].as_str()).collect();
        let weights = perm.iter().map(|&i| self.ring.weights()[i]).collect();
        let permuted = PolyRing::with_weights(&names, weights, self.ring.ctx().clone()).expect("valid permutation");
        let mut forward = vec![None; n];
        for (new, &old) in perm.iter().enumerate() {
            forward[old] = Some(new);
        }
        let gens: Vec<Polynomial<K>> = self
            .gens
            .iter()
            .map(|g| g.rename_into(&permuted, &forward).expect("total map"))
            .collect();
        let gb = buchberger(&permuted, &gens, MonomialOrder::Block(drop.len()));
        let k = drop.len();
        let backward: Vec<Option<usize>> = perm.iter().map(|&old| Some(old)).collect();
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
            .map(|g| g.rename_into(&self.ring, &backward).expect("total map"))
            .collect();
        Ideal::new(&self.ring, kept).minimalized()
    }

    /// `f ∈ rad(I)`, decided by `1 ∈ I + (1 - t·f)` with an auxiliary `t`.
    pub fn radical_contains(&self, f: &Polynomial<K>) -> bool {
        if self.contains(f) {
            return true;
        }
        let (ext, embed) = extend_with_aux(&self.ring);
        let t = ext.var(0);
        let mut gens: Vec<Polynomial<K>> = self
            .gens
            .iter()
            .map(|g| g.rename_into(&ext, &embed).expect("embedding"))
            .collect();
        let f = f.rename_into(&ext, &embed).expect("embedding");
        gens.push(&ext.one() - &(&t * &f));
        buchberger(&ext, &gens, MonomialOrder::Grevlex).is_unit_ideal()
    }

    pub fn hilbert_data(&self) -> Result<HilbertData> {
        crate::hilbert::hilbert_data(self)
    }
}

impl<K: Field> Display for Ideal<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn extend_with_aux<K: Field>(ring: &Ring<K>) -> (Ring<K>, Vec<Option<usize>>) {
    let mut name = String::from("aux");
    let mut k = 0;
    while ring.var_index(&name).is_some() {
        k += 1;
        name = format!("aux{k}");
    }
    let mut names = vec![name];
    names.extend(ring.var_names().iter().cloned());
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    let ext = PolyRing::with_weights(&names, weights, ring.ctx().clone()).expect("fresh variable name");
    let embed = (1..=ring.nvars()).map(Some).collect();
    (ext, embed)
}

/// `a / b` when `b` divides `a` exactly.
pub fn exact_division<K: Field>(a: &Polynomial<K>, b: &Polynomial<K>) -> Option<Polynomial<K>> {
    let ring = a.ring();
    let (lm_b, lc_b) = b.terms().first()?.clone();
    let inv = lc_b.inv()?;
    let mut rem = a.clone();
    let mut quot = ring.zero();
    while let Some((m, c)) = rem.terms().first().cloned() {
        if !lm_b.divides(&m) {
            return None;
        }
        let q = lm_b.quotient_of(&m);
        let c = c.mul(&inv);
        rem = &rem - &b.mul_term(&q, &c);
        quot = &quot + &ring.monomial(q, c);
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn ring(vars: &[&str]) -> Ring<Rational> {
        PolyRing::new(vars, ()).unwrap()
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y", "z"]);
        let x = r.var(0);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(i.quotient(&x).unwrap().same_ideal(&Ideal::parse(&r, &["x"]).unwrap()));
        let j = Ideal::parse(&r, &["x^2*y", "x*z"]).unwrap();
        let q = j.quotient(&x).unwrap();
        assert!(q.same_ideal(&Ideal::parse(&r, &["x*y", "z"]).unwrap()));
        assert!(j.quotient(&r.one()).unwrap().same_ideal(&j));
        assert_eq!(j.quotient(&r.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn saturation() {
        let r = ring(&["x", "y", "z"]);
        let j = Ideal::parse(&r, &["x^2*y", "x*z"]).unwrap();
        let s = j.saturate(&Ideal::parse(&r, &["x"]).unwrap());
        assert!(s.same_ideal(&Ideal::parse(&r, &["y", "z"]).unwrap()));
        assert!(j.saturate(&Ideal::unit(&r)).same_ideal(&j));
    }

    #[test]
    fn elimination() {
        let r = ring(&["x", "y", "z"]);
        let a = Ideal::parse(&r, &["x - y^2"]).unwrap().eliminate(&[0]);
        assert!(a.is_zero());
        let b = Ideal::parse(&r, &["x*y", "x - z"]).unwrap().eliminate(&[0]);
        assert!(b.same_ideal(&Ideal::parse(&r, &["y*z"]).unwrap()));
        let c = Ideal::parse(&r, &["x*y", "x - z"]).unwrap();
        assert_eq!(c.eliminate(&[]).gens(), c.groebner().elements());
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = PolyRing::<Fp>::new(&["x", "y"], 5).unwrap();
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        assert!(a.intersect(&b).same_ideal(&Ideal::parse(&r, &["x*y"]).unwrap()));
        assert!(a.intersect(&Ideal::zero(&r)).is_zero());
    }

    #[test]
    fn radical_membership() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^3", "y^2 - x*y"]).unwrap();
        assert!(i.radical_contains(&r.var(0)));
        assert!(i.radical_contains(&r.var(1)));
        assert!(!i.radical_contains(&r.parse("x + 1").unwrap()));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let r = ring(&["x", "y"]);
        let a = r.parse("x^2 - y^2").unwrap();
        assert_eq!(exact_division(&a, &r.parse("x + y").unwrap()).unwrap(), r.parse("x - y").unwrap());
        assert!(exact_division(&a, &r.parse("x").unwrap()).is_none());
    }
}
