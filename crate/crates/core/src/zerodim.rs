//! Zero-dimensional ideals: the finite quotient algebra, minimal polynomials,
//! radicals, rational points and local multiplicities.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Display};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, RingExt};
use crate::univariate::UniPoly;

/// A point given by one field constant per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointZ<K: Field> {
    pub coordinates: Vec<K>,
}

impl<K: Field> PointZ<K> {
    pub fn new(coordinates: Vec<K>) -> Self {
        PointZ { coordinates }
    }

    pub fn lies_on(&self, ideal: &Ideal<K>) -> bool {
        ideal.gens().iter().all(|g| g.evaluate(&self.coordinates).is_zero())
    }

    /// Maximal ideal `(x_i - a_i)` of the affine point.
    pub fn affine_ideal(&self, ring: &Ring<K>) -> Ideal<K> {
        let gens = self
            .coordinates
            .iter()
            .enumerate()
            .map(|(i, a)| &ring.var(i) - &ring.constant(a.clone()))
            .collect();
        Ideal::new(ring, gens)
    }

    /// Homogeneous ideal of the projective point, `(a_j x_i - a_i x_j)`.
    pub fn projective_ideal(&self, ring: &Ring<K>) -> Ideal<K> {
        let Some(i) = self.first_nonzero() else {
            return Ideal::irrelevant(ring);
        };
        let a_i = ring.constant(self.coordinates[i].clone());
        let x_i = ring.var(i);
        let gens = (0..self.coordinates.len())
            .filter(|&j| j != i)
            .map(|j| &(&a_i * &ring.var(j)) - &(&ring.constant(self.coordinates[j].clone()) * &x_i))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coordinates.iter().position(|c| !c.is_zero())
    }

    /// Print as the list of linear generators of the point ideal.
    pub fn describe(&self, ring: &Ring<K>) -> String {
        self.affine_ideal(ring).to_string()
    }
}

impl<K: Field> Display for PointZ<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coordinates.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `R/I` for a zero-dimensional ideal, with the standard monomials as basis.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra<K: Field> {
    gb: GroebnerBasis<K>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<K: Field> QuotientAlgebra<K> {
    pub fn new(ideal: &Ideal<K>) -> Result<Self> {
        Self::from_basis(ideal.groebner().clone())
    }

    pub fn from_basis(gb: GroebnerBasis<K>) -> Result<Self> {
        let ring = gb.ring().clone();
        let n = ring.nvars();
        let lms = gb.leading_monomials();
        if !gb.is_unit_ideal() {
            for v in 0..n {
                if !lms.iter().any(|m| m.pure_power_var() == Some(v)) {
                    return Err(Error::NotZeroDimensional);
                }
            }
        }
        let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
        let mut basis = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        let one = Monomial::one(n);
        if standard(&one) {
            seen.insert(one.clone());
            queue.push_back(one);
        }
        while let Some(m) = queue.pop_front() {
            for v in 0..n {
                let next = m.mul(&Monomial::var(n, v, 1));
                if standard(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            basis.push(m);
        }
        let order = gb.order();
        basis.sort_by(|a, b| order.cmp(a, b));
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(QuotientAlgebra { gb, basis, index })
    }

    pub fn ring(&self) -> &Ring<K> {
        self.gb.ring()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn reduce(&self, p: &Polynomial<K>) -> Polynomial<K> {
        self.gb.reduce(p)
    }

    pub fn coordinates(&self, p: &Polynomial<K>) -> Vec<K> {
        let ctx = self.ring().ctx();
        let mut v = vec![K::zero(ctx); self.basis.len()];
        for (m, c) in self.reduce(p).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn element(&self, coords: &[K]) -> Polynomial<K> {
        let terms = self.basis.iter().cloned().zip(coords.iter().cloned()).collect();
        self.ring().from_terms(terms)
    }

    /// Matrix of multiplication by `f`; column `j` holds `f * basis[j]`.
    pub fn multiplication_matrix(&self, f: &Polynomial<K>) -> Matrix<K> {
        let ring = self.ring();
        let ctx = ring.ctx();
        let d = self.dimension();
        let mut m = Matrix::zeros(d, d, ctx);
        let one = K::one(ctx);
        for (j, b) in self.basis.iter().enumerate() {
            let col = self.coordinates(&f.mul_term(b, &one));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Monic generator of `{ g in K[t] : g(f) = 0 in R/I }`.
    pub fn minimal_polynomial(&self, f: &Polynomial<K>) -> UniPoly<K> {
        let ring = self.ring();
        let ctx = ring.ctx();
        let d = self.dimension();
        // echelon rows: (vector, combination of powers, pivot)
        let mut rows: Vec<(Vec<K>, Vec<K>, usize)> = Vec::new();
        let mut power = self.reduce(&ring.one());
        for k in 0..=d {
            let mut v = self.coordinates(&power);
            let mut combo = vec![K::zero(ctx); d + 1];
            combo[k] = K::one(ctx);
            for (rv, rc, p) in &rows {
                let c = v[*p].clone();
                if c.is_zero() {
                    continue;
                }
                for (a, b) in v.iter_mut().zip(rv) {
                    *a = a.sub(&c.mul(b));
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a = a.sub(&c.mul(b));
                }
            }
            match v.iter().position(|c| !c.is_zero()) {
                None => return UniPoly::new(combo).monic(),
                Some(p) => {
                    let inv = v[p].inv().expect("nonzero");
                    let v: Vec<K> = v.iter().map(|c| c.mul(&inv)).collect();
                    let combo: Vec<K> = combo.iter().map(|c| c.mul(&inv)).collect();
                    rows.push((v, combo, p));
                }
            }
            power = self.reduce(&(&power * f));
        }
        unreachable!("d + 1 powers in a d-dimensional space are dependent")
    }

    /// Basis of `{ a : g a = 0 for every g }`, lifted to polynomials.
    pub fn annihilator(&self, gens: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
        let ctx = self.ring().ctx();
        let d = self.dimension();
        if gens.is_empty() {
            return self.basis.iter().map(|b| self.ring().monomial(b.clone(), K::one(ctx))).collect();
        }
        let mut stacked = Matrix::zeros(d * gens.len(), d, ctx);
        for (k, g) in gens.iter().enumerate() {
            let m = self.multiplication_matrix(g);
            for i in 0..d {
                for j in 0..d {
                    stacked.set(k * d + i, j, m.get(i, j).clone());
                }
            }
        }
        stacked.kernel(ctx).iter().map(|v| self.element(v)).collect()
    }

    /// Dimension of the common generalized eigenspace of the coordinate
    /// multiplications at `pt`, which is the length of the local ring there.
    pub fn local_length(&self, pt: &PointZ<K>) -> usize {
        let ring = self.ring();
        let ctx = ring.ctx();
        let d = self.dimension();
        if d == 0 {
            return 0;
        }
        let mut stacked: Vec<Vec<K>> = Vec::new();
        for (i, a) in pt.coordinates.iter().enumerate() {
            let shifted = &ring.var(i) - &ring.constant(a.clone());
            let m = self.multiplication_matrix(&shifted);
            let mut p = m.clone();
            let mut e = 1;
            while e < d {
                p = p.mul(&p, ctx);
                e *= 2;
            }
            for r in 0..d {
                stacked.push(p.row(r).to_vec());
            }
        }
        d - Matrix::from_rows(stacked, ctx).rank()
    }
}

pub fn quotient_dimension<K: Field>(ideal: &Ideal<K>) -> Result<usize> {
    Ok(QuotientAlgebra::new(ideal)?.dimension())
}

fn univariate_in<K: Field>(ring: &Ring<K>, var: usize, f: &UniPoly<K>) -> Polynomial<K> {
    let n = ring.nvars();
    ring.from_terms(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::var(n, var, k as u32), c.clone()))
            .collect(),
    )
}

/// Radical of a zero-dimensional ideal: add the squarefree part of the minimal
/// polynomial of each variable.
pub fn zero_dim_radical<K: Field>(ideal: &Ideal<K>) -> Result<Ideal<K>> {
    let alg = QuotientAlgebra::new(ideal)?;
    if alg.dimension() == 0 {
        return Ok(ideal.minimalized());
    }
    let ring = ideal.ring();
    let ctx = ring.ctx();
    let extra: Vec<Polynomial<K>> = (0..ring.nvars())
        .map(|v| {
            let mp = alg.minimal_polynomial(&ring.var(v));
            univariate_in(ring, v, &mp.squarefree_part(ctx))
        })
        .collect();
    Ok(ideal.with(&extra).minimalized())
}

/// All points of `V(I)` with coordinates in the coefficient field.
pub fn variety_points<K: Field>(ideal: &Ideal<K>) -> Result<Vec<PointZ<K>>> {
    let mut out = Vec::new();
    solve(ideal.clone(), 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn solve<K: Field>(ideal: Ideal<K>, var: usize, partial: &mut Vec<K>, out: &mut Vec<PointZ<K>>) -> Result<()> {
    if ideal.is_unit() {
        return Ok(());
    }
    let ring = ideal.ring().clone();
    if var == ring.nvars() {
        out.push(PointZ::new(partial.clone()));
        return Ok(());
    }
    let alg = QuotientAlgebra::new(&ideal)?;
    let mp = alg.minimal_polynomial(&ring.var(var));
    for r in K::univariate_roots(&mp, ring.ctx())? {
        let lin = &ring.var(var) - &ring.constant(r.clone());
        partial.push(r);
        solve(ideal.with(&[lin]), var + 1, partial, out)?;
        partial.pop();
    }
    Ok(())
}

/// Stratum `I + (x_0, …, x_{i-1}) + (x_i - 1)` of a homogeneous ideal.
pub fn stratum<K: Field>(ideal: &Ideal<K>, i: usize) -> Ideal<K> {
    let ring = ideal.ring();
    let mut extra: Vec<Polynomial<K>> = (0..i).map(|j| ring.var(j)).collect();
    extra.push(&ring.var(i) - &ring.one());
    ideal.with(&extra)
}

/// Affine chart `I + (x_i - 1)` of a homogeneous ideal.
pub fn chart<K: Field>(ideal: &Ideal<K>, i: usize) -> Ideal<K> {
    let ring = ideal.ring();
    ideal.with(&[&ring.var(i) - &ring.one()])
}

/// Rational points of the projective scheme of a homogeneous ideal, normalized
/// so that the first nonzero coordinate is 1.
pub fn projective_points<K: Field>(ideal: &Ideal<K>) -> Result<Vec<PointZ<K>>> {
    let mut out = Vec::new();
    for i in 0..ideal.ring().nvars() {
        out.extend(variety_points(&stratum(ideal, i))?);
    }
    Ok(out)
}

/// Number of geometric points of a projective zero-dimensional scheme.
pub fn projective_radical_degree<K: Field>(ideal: &Ideal<K>) -> Result<usize> {
    let mut total = 0;
    for i in 0..ideal.ring().nvars() {
        total += quotient_dimension(&zero_dim_radical(&stratum(ideal, i))?)?;
    }
    Ok(total)
}

/// Length of the local ring of `R/I` at an affine point, obtained by
/// saturating away every other primary component:
/// `dim R/I - dim R/(I : m_P^∞)`.
pub fn local_multiplicity<K: Field>(ideal: &Ideal<K>, pt: &PointZ<K>) -> Result<usize> {
    if !pt.lies_on(ideal) {
        return Err(Error::PointNotOnVariety(pt.describe(ideal.ring())));
    }
    let total = quotient_dimension(ideal)?;
    let away = ideal.saturate(&pt.affine_ideal(ideal.ring()));
    Ok(total - quotient_dimension(&away)?)
}

/// The same length computed from generalized eigenspaces of `R/I`.
pub fn local_multiplicity_linear<K: Field>(ideal: &Ideal<K>, pt: &PointZ<K>) -> Result<usize> {
    if !pt.lies_on(ideal) {
        return Err(Error::PointNotOnVariety(pt.describe(ideal.ring())));
    }
    Ok(QuotientAlgebra::new(ideal)?.local_length(pt))
}

/// Multiplicity of a projective point, read in the chart of its first nonzero
/// coordinate.
pub fn projective_multiplicity<K: Field>(ideal: &Ideal<K>, pt: &PointZ<K>) -> Result<usize> {
    let i = pt.first_nonzero().ok_or_else(|| Error::InvalidArgument("the zero vector is not a projective point".into()))?;
    let inv = pt.coordinates[i].inv().expect("nonzero");
    let normalized = PointZ::new(pt.coordinates.iter().map(|c| c.mul(&inv)).collect());
    if !normalized.lies_on(ideal) {
        return Err(Error::PointNotOnVariety(pt.to_string()));
    }
    local_multiplicity_linear(&chart(ideal, i), &normalized)
}

/// True when no primary component of the zero-dimensional ideal is reduced,
/// certified by `(I : rad I) ⊆ rad I`.
pub fn all_components_nonreduced<K: Field>(ideal: &Ideal<K>) -> Result<bool> {
    let alg = QuotientAlgebra::new(ideal)?;
    if alg.dimension() == 0 {
        return Ok(true);
    }
    let rad = zero_dim_radical(ideal)?;
    Ok(alg.annihilator(rad.gens()).iter().all(|a| rad.contains(a)))
}

/// The same certificate for a projective scheme, checked chart by chart.
pub fn all_projective_components_nonreduced<K: Field>(ideal: &Ideal<K>) -> Result<bool> {
    for i in 0..ideal.ring().nvars() {
        if !all_components_nonreduced(&chart(ideal, i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive scan of `P^{n-1}(F_p)`: the number of points satisfying `pred`
/// and the first one in scan order. Points are normalized with first nonzero
/// coordinate 1 and visited in lexicographic order of their coordinates.
pub fn scan_projective_points<F>(p: u32, n: usize, pred: F) -> (u64, Option<PointZ<crate::field::Fp>>)
where
    F: Fn(&[crate::field::Fp]) -> bool + Sync,
{
    use crate::field::Fp;
    use rayon::prelude::*;
    // one job per (first nonzero index, value of the next coordinate)
    let jobs: Vec<(usize, Option<u32>)> = (0..n)
        .rev()
        .flat_map(|i| {
            if i + 1 < n {
                (0..p).map(|v| (i, Some(v))).collect::<Vec<_>>()
            } else {
                vec![(i, None)]
            }
        })
        .collect();
    let results: Vec<(u64, Option<Vec<Fp>>)> = jobs
        .par_iter()
        .map(|&(i, next)| {
            let mut pt = vec![Fp::new(0, p); n];
            pt[i] = Fp::new(1, p);
            let start = match next {
                Some(v) => {
                    pt[i + 1] = Fp::new(v as i64, p);
                    i + 2
                }
                None => i + 1,
            };
            let free = n - start;
            let mut digits = vec![0u32; free];
            let mut count = 0;
            let mut first = None;
            loop {
                for (k, &d) in digits.iter().enumerate() {
                    pt[start + k] = Fp::new(d as i64, p);
                }
                if pred(&pt) {
                    count += 1;
                    if first.is_none() {
                        first = Some(pt.clone());
                    }
                }
                let mut k = free;
                loop {
                    if k == 0 {
                        return (count, first);
                    }
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] < p {
                        break;
                    }
                    digits[k] = 0;
                }
            }
        })
        .collect();
    let mut total = 0;
    let mut first = None;
    for (c, f) in results {
        total += c;
        if first.is_none() {
            first = f;
        }
    }
    (total, first.map(PointZ::new))
}
