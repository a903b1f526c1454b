//! Polynomial rings and sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{CoefficientDomain, Field};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring `K[x_1, ..., x_n]` with an optional positive grading.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing<K: Field> {
    vars: Vec<String>,
    weights: Vec<u32>,
    ctx: K::Ctx,
}

pub type Ring<K> = Arc<PolyRing<K>>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl<K: Field> PolyRing<K> {
    pub fn new<S: AsRef<str>>(vars: &[S], ctx: K::Ctx) -> Result<Ring<K>> {
        Self::with_weights(vars, vec![1; vars.len()], ctx)
    }

    pub fn with_weights<S: AsRef<str>>(vars: &[S], weights: Vec<u32>, ctx: K::Ctx) -> Result<Ring<K>> {
        K::validate_ctx(&ctx)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if weights.len() != vars.len() {
            return Err(Error::InvalidRing("one weight per variable is required".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { vars, weights, ctx }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn domain(&self) -> CoefficientDomain {
        K::domain(&self.ctx)
    }

    pub fn characteristic(&self) -> u64 {
        K::characteristic(&self.ctx)
    }

    pub fn coeff(&self, n: i64) -> K {
        K::from_i64(n, &self.ctx)
    }
}

/// Constructors that need the shared ring handle.
pub trait RingExt<K: Field> {
    fn zero(&self) -> Polynomial<K>;
    fn one(&self) -> Polynomial<K>;
    fn constant(&self, c: K) -> Polynomial<K>;
    fn int(&self, n: i64) -> Polynomial<K>;
    fn var(&self, index: usize) -> Polynomial<K>;
    fn var_named(&self, name: &str) -> Result<Polynomial<K>>;
    fn vars(&self) -> Vec<Polynomial<K>>;
    fn monomial(&self, m: Monomial, c: K) -> Polynomial<K>;
    fn from_terms(&self, terms: Vec<(Monomial, K)>) -> Polynomial<K>;
    fn parse(&self, text: &str) -> Result<Polynomial<K>>;
}

impl<K: Field> RingExt<K> for Ring<K> {
    fn zero(&self) -> Polynomial<K> {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    fn one(&self) -> Polynomial<K> {
        self.constant(K::one(&self.ctx))
    }

    fn constant(&self, c: K) -> Polynomial<K> {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    fn int(&self, n: i64) -> Polynomial<K> {
        self.constant(self.coeff(n))
    }

    fn var(&self, index: usize) -> Polynomial<K> {
        assert!(index < self.nvars(), "variable index out of range");
        self.monomial(Monomial::var(self.nvars(), index, 1), K::one(&self.ctx))
    }

    fn var_named(&self, name: &str) -> Result<Polynomial<K>> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn vars(&self) -> Vec<Polynomial<K>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    fn monomial(&self, m: Monomial, c: K) -> Polynomial<K> {
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    fn from_terms(&self, terms: Vec<(Monomial, K)>) -> Polynomial<K> {
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), self.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Polynomial::from_unsorted(self.clone(), acc.into_iter().collect())
    }

    fn parse(&self, text: &str) -> Result<Polynomial<K>> {
        crate::parse::parse_poly(text, self)
    }
}

/// Sparse polynomial; terms are kept in strictly descending grevlex order
/// with no zero coefficients, which makes the representation canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    ring: Ring<K>,
    terms: Vec<(Monomial, K)>,
}

fn desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(b, a)
}

impl<K: Field> Polynomial<K> {
    pub(crate) fn from_unsorted(ring: Ring<K>, mut terms: Vec<(Monomial, K)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<K> {
        match self.terms.as_slice() {
            [] => Some(K::zero(self.ring.ctx())),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        self.terms
            .binary_search_by(|(t, _)| desc(t, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| K::zero(self.ring.ctx()))
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, K)> {
        if order == MonomialOrder::Grevlex {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Weighted degree with respect to the ring grading.
    pub fn degree(&self) -> Option<u32> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.weighted_degree(w)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let w = self.ring.weights();
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(w));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        // multiplication by a monomial preserves the order of terms
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
        }
    }

    /// Divide by the grevlex leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match desc(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if subtract { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if subtract { c.neg() } else { c.clone() })));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial::from_unsorted(self.ring.clone(), acc.into_iter().collect()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a point given as one coefficient per variable.
    pub fn evaluate(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = K::zero(self.ring.ctx());
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u64));
                }
            }
            total = total.add(&t);
        }
        total
    }

    /// Evaluate with values given by variable name.
    pub fn evaluate_named(&self, values: &BTreeMap<String, K>) -> Result<K> {
        let mut point = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.var_names() {
            match values.get(name) {
                Some(v) => point.push(v.clone()),
                None => {
                    if self.variables().iter().any(|&i| &self.ring.var_names()[i] == name) {
                        return Err(Error::Unassigned(name.clone()));
                    }
                    point.push(K::zero(self.ring.ctx()));
                }
            }
        }
        Ok(self.evaluate(&point))
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; the images fix the target ring.
    pub fn substitute(&self, images: &[Polynomial<K>]) -> Result<Polynomial<K>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| !(Arc::ptr_eq(&p.ring, &target) || *p.ring == *target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial<K>>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitute selected variables by polynomials of the same ring.
    pub fn substitute_vars(&self, assignment: &BTreeMap<usize, Polynomial<K>>) -> Result<Polynomial<K>> {
        let images: Vec<Polynomial<K>> = (0..self.ring.nvars())
            .map(|i| assignment.get(&i).cloned().unwrap_or_else(|| self.ring.var(i)))
            .collect();
        self.substitute(&images)
    }

    /// Move into `target`, mapping variable `i` to variable `var_map[i]` of the target.
    /// Variables mapped to `None` must not occur.
    pub fn rename_into(&self, target: &Ring<K>, var_map: &[Option<usize>]) -> Result<Polynomial<K>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => exps[j] += e,
                    None => return Err(Error::Unassigned(self.ring.var_names()[i].clone())),
                }
            }
            terms.push((Monomial::from_exponents(exps), c.clone()));
        }
        Ok(target.from_terms(terms))
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial<K> {
        let ctx = self.ring.ctx();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let c = c.mul(&K::from_i64(e as i64, ctx));
            if c.is_zero() {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.push((Monomial::from_exponents(exps), c));
        }
        self.ring.from_terms(terms)
    }

    pub fn homogeneous_part(&self, degree: u32) -> Polynomial<K> {
        let w = self.ring.weights();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.weighted_degree(w) == degree).cloned().collect(),
        }
    }
}

/// Matrix of partial derivatives: entry `(i, j)` is `d gens[i] / d vars[j]`.
pub fn jacobian<K: Field>(gens: &[Polynomial<K>], vars: &[usize]) -> Vec<Vec<Polynomial<K>>> {
    gens.iter()
        .map(|g| vars.iter().map(|&v| g.partial_derivative(v)).collect())
        .collect()
}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: Self) -> Polynomial<K> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: Self) -> Polynomial<K> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: Self) -> Polynomial<K> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<K: Field> $tr for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: Self) -> Polynomial<K> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl<K: Field> Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = c.sign_and_magnitude();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(m, names);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<K: Field> Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} over {})", self.ring.domain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn qring(vars: &[&str]) -> Ring<Rational> {
        PolyRing::new(vars, ()).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let r = qring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert!((&p * &r.zero()).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = PolyRing::<Fp>::new(&["x"], 2).unwrap();
        let x1 = &r.var(0) + &r.one();
        assert_eq!((&x1 * &x1).to_string(), "x^2 + 1");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = qring(&["x"]);
        let b = qring(&["y"]);
        assert_eq!(a.var(0).try_mul(&b.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn invalid_rings_are_rejected() {
        assert!(PolyRing::<Rational>::new(&["x", "x"], ()).is_err());
        assert!(PolyRing::<Rational>::new(&["1x"], ()).is_err());
        assert!(PolyRing::<Fp>::new(&["x"], 4).is_err());
        assert!(PolyRing::<Rational>::with_weights(&["x"], vec![0], ()).is_err());
    }

    #[test]
    fn derivatives() {
        let r = qring(&["x", "y"]);
        let p = r.parse("x^2*y").unwrap();
        assert_eq!(p.partial_derivative(0).to_string(), "2*x*y");
        assert!(r.int(5).partial_derivative(0).is_zero());
        let f3 = PolyRing::<Fp>::new(&["x"], 3).unwrap();
        assert!(f3.parse("x^3").unwrap().partial_derivative(0).is_zero());
    }

    #[test]
    fn substitution() {
        let r = qring(&["p12", "p13", "p14", "p23", "p24", "p34"]);
        let l5 = r.parse("p14 + p23").unwrap();
        let mut vals = BTreeMap::new();
        vals.insert("p14".to_string(), Rational::from_i64(1, &()));
        vals.insert("p23".to_string(), Rational::from_i64(0, &()));
        assert_eq!(l5.evaluate_named(&vals).unwrap(), Rational::from_i64(1, &()));
        assert!(matches!(r.parse("p12").unwrap().evaluate_named(&vals), Err(Error::Unassigned(_))));
        let ident = r.vars();
        assert_eq!(l5.substitute(&ident).unwrap(), l5);
    }

    #[test]
    fn homogeneity_respects_weights() {
        let r = PolyRing::<Rational>::with_weights(&["x", "y"], vec![1, 2], ()).unwrap();
        assert!(r.parse("x^2 + y").unwrap().is_homogeneous());
        assert!(!r.parse("x + y").unwrap().is_homogeneous());
        assert_eq!(r.parse("x^2*y").unwrap().degree(), Some(4));
    }

    #[test]
    fn jacobian_of_linear_forms() {
        let r = qring(&["a", "b", "c"]);
        let gens = vec![r.parse("a").unwrap(), r.parse("b").unwrap()];
        let jac = jacobian(&gens, &[0, 1, 2]);
        assert_eq!(jac[0][0], r.one());
        assert!(jac[0][1].is_zero() && jac[1][0].is_zero());
        assert!(jacobian::<Rational>(&[], &[0]).is_empty());
    }
}
