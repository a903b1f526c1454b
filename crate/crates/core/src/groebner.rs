//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are managed with the Gebauer–Möller installation (product and chain
//! criteria) and selected by the sugar strategy; ties are broken by the lcm
//! and then by the pair indices so that runs are fully deterministic.

use std::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring, RingExt};

type Terms<K> = Vec<(Monomial, K)>;

fn divmask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

fn sort_desc<K: Field>(terms: &mut Terms<K>, order: MonomialOrder) {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
}

/// `a - c * m * b`, where `a` and `b` are sorted descending.
fn sub_scaled<K: Field>(a: &[(Monomial, K)], c: &K, m: &Monomial, b: &[(Monomial, K)], order: MonomialOrder) -> Terms<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: usize| (b[j].0.mul(m), b[j].1.mul(c));
    let mut pending = if b.is_empty() { None } else { Some(next_b(0)) };
    while i < a.len() {
        let Some((bm, bc)) = pending.as_ref() else { break };
        match order.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), bc.neg()));
                j += 1;
                pending = if j < b.len() { Some(next_b(j)) } else { None };
            }
            Ordering::Equal => {
                let v = a[i].1.sub(bc);
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                pending = if j < b.len() { Some(next_b(j)) } else { None };
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some((bm, bc)) = pending {
        out.push((bm, bc.neg()));
        j += 1;
        while j < b.len() {
            let (bm, bc) = next_b(j);
            out.push((bm, bc.neg()));
            j += 1;
        }
    }
    out
}

/// Divisors used during reduction: monic, sorted descending.
struct Reducers<'a, K: Field> {
    polys: Vec<&'a [(Monomial, K)]>,
    masks: Vec<u64>,
}

impl<'a, K: Field> Reducers<'a, K> {
    fn new(polys: Vec<&'a [(Monomial, K)]>) -> Self {
        let masks = polys.iter().map(|p| divmask(&p[0].0)).collect();
        Reducers { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        let mm = divmask(m);
        (0..self.polys.len()).find(|&k| self.masks[k] & !mm == 0 && self.polys[k][0].0.divides(m))
    }

    /// Full reduction: no term of the result is divisible by a leading monomial.
    fn reduce(&self, mut f: Terms<K>, order: MonomialOrder) -> Terms<K> {
        let mut done: Terms<K> = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let (m, c) = &f[start];
            match self.find(m) {
                None => start += 1,
                Some(k) => {
                    let g = self.polys[k];
                    let q = g[0].0.quotient_of(m);
                    let c = c.clone();
                    done.extend(f.drain(..start));
                    f = sub_scaled(&f[1..], &c, &q, &g[1..], order);
                    start = 0;
                }
            }
        }
        done.extend(f);
        done
    }
}

fn make_monic<K: Field>(terms: &mut Terms<K>) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (_, c) in terms.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

fn internal<K: Field>(p: &Polynomial<K>, order: MonomialOrder) -> Terms<K> {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        sort_desc(&mut t, order);
    }
    t
}

/// Remainder of `p` on division by `basis`; every divisor is used in the given order.
pub fn normal_form<K: Field>(p: &Polynomial<K>, basis: &[Polynomial<K>], order: MonomialOrder) -> Polynomial<K> {
    let divisors: Vec<Terms<K>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut t = internal(g, order);
            make_monic(&mut t);
            t
        })
        .collect();
    let reducers = Reducers::new(divisors.iter().map(|d| d.as_slice()).collect());
    let out = reducers.reduce(internal(p, order), order);
    Polynomial::from_unsorted(p.ring().clone(), out)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<K: Field> {
    order: MonomialOrder,
    polys: Vec<Terms<K>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<K: Field> Engine<K> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lm(i).lcm(self.lm(j));
        let d = lcm.degree();
        let si = self.sugar[i] + d - self.lm(i).degree();
        let sj = self.sugar[j] + d - self.lm(j).degree();
        Pair {
            i,
            j,
            lcm,
            sugar: si.max(sj),
        }
    }

    fn update(&mut self, h: usize) {
        let lm_h = self.lm(h).clone();
        let mut candidates: Vec<Pair> = self.active.iter().map(|&g| self.pair(g, h)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while !candidates.is_empty() {
            let p = candidates.remove(0);
            let coprime = lm_h.is_coprime(self.lm(p.i));
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !lm_h.is_coprime(self.lm(p.i)));
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                if !lm_h.divides(&p.lcm) {
                    return true;
                }
                let li = self.lm(p.i).lcm(&lm_h);
                let lj = self.lm(p.j).lcm(&lm_h);
                li == p.lcm || lj == p.lcm
            })
            .collect();
        self.pairs.extend(kept);
        let active = std::mem::take(&mut self.active);
        self.active = active.into_iter().filter(|&g| !lm_h.divides(self.lm(g))).collect();
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Terms<K> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f[0].0.quotient_of(&p.lcm);
        let mg = g[0].0.quotient_of(&p.lcm);
        // both monic: S = mf * f - mg * g, leading terms cancel
        let a: Terms<K> = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let one = f[0].1.one_like();
        sub_scaled(&a, &one, &mg, &g[1..], self.order)
    }

    fn reduce_by_active(&self, f: Terms<K>) -> Terms<K> {
        let reducers = Reducers::new(self.active.iter().map(|&i| self.polys[i].as_slice()).collect());
        reducers.reduce(f, self.order)
    }

    /// Insert a monic polynomial; returns true if it is a unit.
    fn insert(&mut self, poly: Terms<K>, sugar: u32) -> bool {
        let unit = poly[0].0.is_one();
        self.polys.push(poly);
        self.sugar.push(sugar);
        let h = self.polys.len() - 1;
        if unit {
            self.active = vec![h];
            self.pairs.clear();
            return true;
        }
        self.update(h);
        false
    }
}

/// A reduced Gröbner basis together with its ring and monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field> {
    ring: Ring<K>,
    order: MonomialOrder,
    elements: Vec<Polynomial<K>>,
    leading: Vec<Monomial>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic elements sorted by increasing leading monomial.
    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    fn divisors(&self) -> Vec<Terms<K>> {
        self.elements.iter().map(|g| internal(g, self.order)).collect()
    }

    pub fn reduce(&self, p: &Polynomial<K>) -> Polynomial<K> {
        let divisors = self.divisors();
        let reducers = Reducers::new(divisors.iter().map(|d| d.as_slice()).collect());
        Polynomial::from_unsorted(self.ring.clone(), reducers.reduce(internal(p, self.order), self.order))
    }

    pub fn contains(&self, p: &Polynomial<K>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Every S-polynomial reduces to zero (Buchberger's criterion, checked directly).
    pub fn is_groebner(&self) -> bool {
        let divisors = self.divisors();
        let reducers = Reducers::new(divisors.iter().map(|d| d.as_slice()).collect());
        for i in 0..divisors.len() {
            for j in i + 1..divisors.len() {
                let (f, g) = (&divisors[i], &divisors[j]);
                let lcm = f[0].0.lcm(&g[0].0);
                let a: Terms<K> = f[1..].iter().map(|(m, c)| (m.mul(&f[0].0.quotient_of(&lcm)), c.clone())).collect();
                let s = sub_scaled(&a, &f[0].1, &g[0].0.quotient_of(&lcm), &g[1..], self.order);
                if !reducers.reduce(s, self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic and no term of any element divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let divisors = self.divisors();
        divisors.iter().enumerate().all(|(i, g)| {
            g[0].1.is_one()
                && g.iter().all(|(m, _)| {
                    divisors
                        .iter()
                        .enumerate()
                        .all(|(j, h)| j == i || !h[0].0.divides(m))
                })
        })
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<K: Field>(ring: &Ring<K>, gens: &[Polynomial<K>], order: MonomialOrder) -> GroebnerBasis<K> {
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut unit = false;
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut t = internal(g, order);
        make_monic(&mut t);
        let sugar = g.total_degree().unwrap_or(0);
        if engine.insert(t, sugar) {
            unit = true;
            break;
        }
    }
    while !unit {
        let Some(pair) = engine.next_pair() else { break };
        let s = engine.spoly(&pair);
        let mut h = engine.reduce_by_active(s);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        unit = engine.insert(h, pair.sugar);
    }
    finish(ring, engine, order)
}

fn finish<K: Field>(ring: &Ring<K>, engine: Engine<K>, order: MonomialOrder) -> GroebnerBasis<K> {
    let mut basis: Vec<Terms<K>> = engine.active.iter().map(|&i| engine.polys[i].clone()).collect();
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms<K>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&[(Monomial, K)]> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.as_slice())
            .collect();
        let reducers = Reducers::new(others);
        let g = &minimal[i];
        let mut tail = reducers.reduce(g[1..].to_vec(), order);
        let mut full = vec![g[0].clone()];
        full.append(&mut tail);
        make_monic(&mut full);
        reduced.push(full);
    }
    let leading = reduced.iter().map(|g| g[0].0.clone()).collect();
    let elements = reduced
        .into_iter()
        .map(|g| Polynomial::from_unsorted(ring.clone(), g))
        .collect();
    GroebnerBasis {
        ring: ring.clone(),
        order,
        elements,
        leading,
    }
}

/// Ideal membership through a grevlex Gröbner basis.
pub fn ideal_member<K: Field>(p: &Polynomial<K>, gens: &[Polynomial<K>]) -> bool {
    if p.is_zero() {
        return true;
    }
    buchberger(p.ring(), gens, MonomialOrder::Grevlex).contains(p)
}

/// Convenience for the unit polynomial of a ring.
pub fn unit_basis<K: Field>(ring: &Ring<K>, order: MonomialOrder) -> GroebnerBasis<K> {
    buchberger(ring, &[ring.one()], order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::poly::PolyRing;

    fn ring(vars: &[&str]) -> Ring<Rational> {
        PolyRing::new(vars, ()).unwrap()
    }

    fn polys<K: Field>(r: &Ring<K>, texts: &[&str]) -> Vec<Polynomial<K>> {
        texts.iter().map(|t| r.parse(t).unwrap()).collect()
    }

    #[test]
    fn normal_form_by_hand_reduction() {
        let r = ring(&["x", "y"]);
        let nf = normal_form(&r.parse("x^2*y").unwrap(), &polys(&r, &["x^2 - y"]), MonomialOrder::Lex);
        assert_eq!(nf.to_string(), "y^2");
        let g = r.parse("x*y + 3").unwrap();
        assert!(normal_form(&g, std::slice::from_ref(&g), MonomialOrder::Grevlex).is_zero());
        assert_eq!(normal_form(&g, &[], MonomialOrder::Grevlex), g);
    }

    #[test]
    fn small_bases() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &polys(&r, &["x^2 - y", "y"]), MonomialOrder::Lex);
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["y", "x^2"]);
        let unit = buchberger(&r, &[r.one()], MonomialOrder::Grevlex);
        assert!(unit.is_unit_ideal());
        assert_eq!(unit.elements().len(), 1);
        assert!(buchberger(&r, &[], MonomialOrder::Grevlex).is_zero_ideal());
    }

    #[test]
    fn single_quadric_is_its_own_basis() {
        let r = ring(&["p12", "p13", "p14", "p23", "p24", "p34"]);
        let q = r.parse("p12*p34 - p13*p24 + p14*p23").unwrap();
        let gb = buchberger(&r, &[q.scale(&Rational::from_i64(3, &()))], MonomialOrder::Grevlex);
        assert_eq!(gb.elements(), &[q.monic()]);
    }

    #[test]
    fn membership() {
        let r = ring(&["x"]);
        assert!(ideal_member(&r.one(), &polys(&r, &["x", "x + 1"])));
        assert!(!ideal_member(&r.var(0), &polys(&r, &["x^2"])));
    }

    #[test]
    fn cyclic_three_is_groebner_and_reduced() {
        let r = PolyRing::<Fp>::new(&["a", "b", "c"], 32003).unwrap();
        let gens = polys(&r, &["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
            let gb = buchberger(&r, &gens, order);
            assert!(gb.is_groebner());
            assert!(gb.is_reduced());
            for g in &gens {
                assert!(gb.contains(g));
            }
        }
        let lex = buchberger(&r, &gens, MonomialOrder::Lex);
        assert_eq!(lex.elements()[0].to_string(), "c^3 + 32002");
    }
}
