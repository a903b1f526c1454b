//! Plücker coordinates of `G(d, m)`, the hyperplane sections `l_s`, Schubert
//! and Richardson ideals, the affine chart at `p_{1m}` and the involution τ.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, Ring, RingExt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertVariant {
    Standard,
    Opposite,
    Richardson,
}

/// Plücker ring of `G(d, m)` with one variable `p<i1>…<id>` per sorted tuple.
#[derive(Debug, Clone)]
pub struct GrassmannContext<K: Field> {
    d: usize,
    m: usize,
    ring: Ring<K>,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

fn subsets(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..=m {
            cur.push(i);
            rec(i + 1, m, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, d, &mut Vec::new(), &mut out);
    out
}

pub fn tuple_name(t: &[usize]) -> String {
    format!("p{}", t.iter().map(|i| i.to_string()).collect::<String>())
}

impl<K: Field> GrassmannContext<K> {
    pub fn new(d: usize, m: usize, ctx: K::Ctx) -> Result<Self> {
        if !(2..=3).contains(&d) {
            return Err(Error::Unsupported(format!("Grassmannians G({d}, m) need d in {{2, 3}}")));
        }
        if d >= m || m > 9 {
            return Err(Error::InvalidArgument(format!("G({d}, {m}) needs {d} < m <= 9")));
        }
        let tuples = subsets(m, d);
        let names: Vec<String> = tuples.iter().map(|t| tuple_name(t)).collect();
        let ring = PolyRing::new(&names, ctx)?;
        let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(GrassmannContext {
            d,
            m,
            ring,
            tuples,
            index,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Relative dimension `d(m - d)`.
    pub fn n(&self) -> usize {
        self.d * (self.m - self.d)
    }

    /// Number of Plücker coordinates minus one.
    pub fn big_n(&self) -> usize {
        self.tuples.len() - 1
    }

    pub fn var_index(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    pub fn p(&self, tuple: &[usize]) -> Polynomial<K> {
        self.ring.var(self.var_index(tuple).expect("sorted tuple within range"))
    }

    /// `± p_sorted(tuple)`, or 0 when an index repeats.
    fn signed_p(&self, tuple: &[usize]) -> Polynomial<K> {
        let mut t = tuple.to_vec();
        let mut sign = 1;
        for i in 0..t.len() {
            for j in 0..t.len() - 1 - i {
                if t[j] == t[j + 1] {
                    return self.ring.zero();
                }
                if t[j] > t[j + 1] {
                    t.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return self.ring.zero();
        }
        let p = self.p(&t);
        if sign < 0 {
            -&p
        } else {
            p
        }
    }

    /// Three-term relations for `d = 2`; a basis of the span of the
    /// Grassmann–Plücker relations for `d = 3`.
    pub fn pluecker_ideal(&self) -> Ideal<K> {
        Ideal::new(&self.ring, self.pluecker_relations())
    }

    pub fn pluecker_relations(&self) -> Vec<Polynomial<K>> {
        if self.d == 2 {
            return subsets(self.m, 4)
                .into_iter()
                .map(|s| {
                    let (i, j, k, l) = (s[0], s[1], s[2], s[3]);
                    let a = &self.p(&[i, j]) * &self.p(&[k, l]);
                    let b = &self.p(&[i, k]) * &self.p(&[j, l]);
                    let c = &self.p(&[i, l]) * &self.p(&[j, k]);
                    &(&a - &b) + &c
                })
                .collect();
        }
        let mut candidates = Vec::new();
        for small in subsets(self.m, self.d - 1) {
            for big in subsets(self.m, self.d + 1) {
                let mut rel = self.ring.zero();
                for k in 0..big.len() {
                    let mut left = small.clone();
                    left.push(big[k]);
                    let mut right = big.clone();
                    right.remove(k);
                    let term = &self.signed_p(&left) * &self.signed_p(&right);
                    rel = if k % 2 == 0 { &rel - &term } else { &rel + &term };
                }
                if !rel.is_zero() {
                    candidates.push(rel);
                }
            }
        }
        independent_subset(&self.ring, candidates)
    }

    pub fn index_sum_range(&self) -> (usize, usize) {
        let lo = self.d * (self.d + 1) / 2;
        let hi = (self.m - self.d + 1..=self.m).sum();
        (lo, hi)
    }

    /// `l_s = Σ_{|I| = s} p_I`.
    pub fn hyperplane_form(&self, s: usize) -> Result<Polynomial<K>> {
        let (lo, hi) = self.index_sum_range();
        if s < lo || s > hi {
            return Err(Error::InvalidArgument(format!("index sum {s} outside {lo}..={hi}")));
        }
        Ok(self
            .tuples
            .iter()
            .filter(|t| t.iter().sum::<usize>() == s)
            .fold(self.ring.zero(), |acc, t| &acc + &self.p(t)))
    }

    /// Index sums `3..=2m-1` without `m + 1`.
    pub fn v_indices(&self) -> Result<Vec<usize>> {
        self.require_d2()?;
        Ok((3..=2 * self.m - 1).filter(|&s| s != self.m + 1).collect())
    }

    pub fn v_forms(&self) -> Result<Vec<Polynomial<K>>> {
        self.v_indices()?.into_iter().map(|s| self.hyperplane_form(s)).collect()
    }

    pub fn v_ideal(&self) -> Result<Ideal<K>> {
        Ok(Ideal::new(&self.ring, self.v_forms()?))
    }

    fn require_d2(&self) -> Result<()> {
        if self.d != 2 {
            return Err(Error::Unsupported("only defined for G(2, m)".into()));
        }
        Ok(())
    }

    fn check_pair(&self, (i, j): (usize, usize)) -> Result<()> {
        self.require_d2()?;
        if !(1 <= i && i < j && j <= self.m) {
            return Err(Error::InvalidArgument(format!("invalid Schubert index ({i}, {j}) for m = {}", self.m)));
        }
        Ok(())
    }

    /// Variables `p_ab` with `(a, b)` not componentwise below `(i, j)`.
    fn killed(&self, (i, j): (usize, usize)) -> Vec<(usize, usize)> {
        self.tuples
            .iter()
            .map(|t| (t[0], t[1]))
            .filter(|&(a, b)| !(a <= i && b <= j))
            .collect()
    }

    fn reversed(&self, (a, b): (usize, usize)) -> (usize, usize) {
        (self.m + 1 - b, self.m + 1 - a)
    }

    pub fn schubert_ideal(&self, pair: (usize, usize), variant: SchubertVariant) -> Result<Ideal<K>> {
        self.check_pair(pair)?;
        let standard = || self.killed(pair).into_iter().map(|(a, b)| self.p(&[a, b])).collect::<Vec<_>>();
        let opposite = || {
            self.killed(pair)
                .into_iter()
                .map(|ab| {
                    let (a, b) = self.reversed(ab);
                    self.p(&[a, b])
                })
                .collect::<Vec<_>>()
        };
        let extra = match variant {
            SchubertVariant::Standard => standard(),
            SchubertVariant::Opposite => opposite(),
            SchubertVariant::Richardson => {
                let mut v = standard();
                v.extend(opposite());
                v
            }
        };
        Ok(self.pluecker_ideal().with(&extra))
    }

    /// `Y_{std} ∩ Y^{opp}`.
    pub fn richardson_ideal(&self, std: (usize, usize), opp: (usize, usize)) -> Result<Ideal<K>> {
        let a = self.schubert_ideal(std, SchubertVariant::Standard)?;
        let b = self.schubert_ideal(opp, SchubertVariant::Opposite)?;
        Ok(a.sum(&b))
    }

    /// Pairs `(i, j)` with `Y_{i,j}` of dimension `dim`, i.e. `i + j - 3 = dim`.
    pub fn schubert_pairs_of_dim(&self, dim: usize) -> Vec<(usize, usize)> {
        self.tuples
            .iter()
            .map(|t| (t[0], t[1]))
            .filter(|&(i, j)| i + j == dim + 3)
            .collect()
    }

    /// Ring of the chart `p_{1m} = 1` with variables `q<a><b>`.
    pub fn chart_ring(&self) -> Result<Ring<K>> {
        self.require_d2()?;
        let names: Vec<String> = self
            .tuples
            .iter()
            .filter(|t| **t != [1, self.m])
            .map(|t| format!("q{}{}", t[0], t[1]))
            .collect();
        PolyRing::new(&names, self.ring.ctx().clone())
    }

    /// Images of the Plücker variables under `p_{1m} ↦ 1`, `p_ab ↦ q_ab`.
    pub fn dehomogenization(&self, chart: &Ring<K>) -> Vec<Polynomial<K>> {
        let mut k = 0;
        self.tuples
            .iter()
            .map(|t| {
                if *t == [1, self.m] {
                    chart.one()
                } else {
                    k += 1;
                    chart.var(k - 1)
                }
            })
            .collect()
    }

    /// The ideal `a` of `X ∩ V` in the chart `p_{1m} = 1`.
    pub fn affine_chart_ideal(&self) -> Result<Ideal<K>> {
        let chart = self.chart_ring()?;
        let images = self.dehomogenization(&chart);
        let mut gens = Vec::new();
        for g in self.pluecker_relations().iter().chain(self.v_forms()?.iter()) {
            gens.push(g.substitute(&images)?);
        }
        Ok(Ideal::new(&chart, gens))
    }

    /// The complement involution `p_ij ↦ p_kl`, `{i, j, k, l} = {1, 2, 3, 4}`.
    pub fn tau_images(&self) -> Result<Vec<Polynomial<K>>> {
        if self.d != 2 || self.m != 4 {
            return Err(Error::Unsupported("τ is defined on G(2, 4) only".into()));
        }
        Ok(self
            .tuples
            .iter()
            .map(|t| {
                let rest: Vec<usize> = (1..=4).filter(|i| !t.contains(i)).collect();
                self.p(&rest)
            })
            .collect())
    }

    pub fn tau_apply(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        p.substitute(&self.tau_images()?)
    }

    pub fn tau_ideal(&self, ideal: &Ideal<K>) -> Result<Ideal<K>> {
        ideal.map(&self.ring, &self.tau_images()?)
    }

    /// The ten forms `l_6, …, l_15` on `G(3, 6)`.
    pub fn g36_forms(&self) -> Result<Vec<Polynomial<K>>> {
        if self.d != 3 || self.m != 6 {
            return Err(Error::Unsupported("these forms are defined on G(3, 6) only".into()));
        }
        (6..=15).map(|s| self.hyperplane_form(s)).collect()
    }

    /// Coordinate point `e_I`.
    pub fn coordinate_point(&self, tuple: &[usize]) -> Vec<K> {
        let ctx = self.ring.ctx();
        let k = self.var_index(tuple).expect("valid tuple");
        (0..self.tuples.len()).map(|i| if i == k { K::one(ctx) } else { K::zero(ctx) }).collect()
    }

    /// Maximal minors of an `m x d` matrix, in variable order.
    pub fn minor_vector(&self, rows: &[Vec<K>]) -> Vec<K> {
        self.tuples.iter().map(|t| determinant(&t.iter().map(|&i| rows[i - 1].clone()).collect::<Vec<_>>())).collect()
    }
}

pub fn determinant<K: Field>(rows: &[Vec<K>]) -> K {
    let n = rows.len();
    let mut a: Vec<Vec<K>> = rows.to_vec();
    let mut det = a[0][0].one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return det.sub(&det);
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv().expect("nonzero pivot");
        for r in c + 1..n {
            let f = a[r][c].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let v = a[r][k].sub(&f.mul(&a[c][k]));
                a[r][k] = v;
            }
        }
    }
    det
}

/// Greedy maximal linearly independent subfamily, in input order.
pub fn independent_subset<K: Field>(ring: &Ring<K>, polys: Vec<Polynomial<K>>) -> Vec<Polynomial<K>> {
    let ctx = ring.ctx();
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    for p in &polys {
        for (m, _) in p.terms() {
            let next = columns.len();
            columns.entry(m.clone()).or_insert(next);
        }
    }
    let mut kept = Vec::new();
    let mut rank = 0;
    let mut rows: Vec<Vec<K>> = Vec::new();
    for p in polys {
        let mut row = vec![K::zero(ctx); columns.len()];
        for (m, c) in p.terms() {
            row[columns[m]] = c.clone();
        }
        rows.push(row);
        let r = Matrix::from_rows(rows.clone(), ctx).rank();
        if r > rank {
            rank = r;
            kept.push(p);
        } else {
            rows.pop();
        }
    }
    kept
}
