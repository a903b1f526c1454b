//! Hilbert series of standard-graded quotients via the monomial-ideal pivot
//! recursion on leading terms.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Hilbert series data of `R/I`: `HS(t) = numerator(t) / (1 - t)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Coefficients of the first numerator from `t^0` upward.
    pub numerator: Vec<i64>,
    /// Numerator after cancelling every `(1 - t)` factor.
    pub reduced_numerator: Vec<i64>,
    pub nvars: usize,
    /// Krull dimension minus one; `-1` for the unit ideal.
    pub proj_dim: i64,
    /// `h(1)` of the reduced numerator; 0 for the unit ideal.
    pub degree: i64,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        let numerator = trim(numerator);
        if numerator.is_empty() {
            return HilbertData {
                numerator,
                reduced_numerator: vec![],
                nvars,
                proj_dim: -1,
                degree: 0,
            };
        }
        let mut reduced = numerator.clone();
        let mut cancelled = 0usize;
        while reduced.iter().sum::<i64>() == 0 {
            reduced = divide_one_minus_t(&reduced);
            cancelled += 1;
        }
        let degree = reduced.iter().sum();
        HilbertData {
            numerator,
            reduced_numerator: reduced,
            nvars,
            proj_dim: nvars as i64 - cancelled as i64 - 1,
            degree,
        }
    }

    /// `dim_K (R/I)_d`, read off the series.
    pub fn hilbert_function(&self, d: u32) -> i64 {
        // coefficient of t^d in numerator * sum_k C(k + n - 1, n - 1) t^k
        let n = self.nvars as i64;
        let mut total = 0i64;
        for (i, &c) in self.numerator.iter().enumerate() {
            if i as u32 > d || c == 0 {
                continue;
            }
            let k = (d - i as u32) as i64;
            total += c * binomial(k + n - 1, n - 1);
        }
        total
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p = (1 - t) q  =>  q_i = p_0 + ... + p_i
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0i64;
    for &c in &p[..p.len() - 1] {
        acc += c;
        out.push(acc);
    }
    trim(out)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return if k == 0 && n == -1 { 1 } else { 0 };
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

fn shift(a: &[i64], k: usize) -> Vec<i64> {
    if a.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; k];
    out.extend_from_slice(a);
    out
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

struct PivotRecursion {
    memo: HashMap<Vec<Vec<u32>>, Vec<i64>>,
}

impl PivotRecursion {
    /// Numerator `N` with `HS(R/I) = N / (1 - t)^n` for the monomial ideal `I`.
    fn numerator(&mut self, gens: Vec<Vec<u32>>) -> Vec<i64> {
        let gens = minimalize(gens);
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
            return vec![];
        }
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let result = self.compute(&gens);
        self.memo.insert(gens, result.clone());
        result
    }

    fn compute(&mut self, gens: &[Vec<u32>]) -> Vec<i64> {
        let nvars = gens[0].len();
        let pure = |g: &Vec<u32>| g.iter().filter(|&&e| e > 0).count() == 1;
        let mixed: Vec<&Vec<u32>> = gens.iter().filter(|g| !pure(g)).collect();
        if mixed.is_empty() {
            return gens.iter().fold(vec![1], |acc, g| {
                let d = g.iter().sum::<u32>() as usize;
                let mut f = vec![0i64; d + 1];
                f[0] = 1;
                f[d] = -1;
                poly_mul(&acc, &f)
            });
        }
        if mixed.len() == 1 && gens.len() == 1 {
            let d = mixed[0].iter().sum::<u32>() as usize;
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] = -1;
            return f;
        }
        // most frequent variable among the mixed generators
        let mut counts = vec![0usize; nvars];
        for g in &mixed {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
        let var = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty");
        let mut exps: Vec<u32> = mixed.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
        exps.sort_unstable();
        let e = exps[(exps.len() - 1) / 2];

        let mut pivot = vec![0u32; nvars];
        pivot[var] = e;
        let mut with_pivot: Vec<Vec<u32>> = gens.to_vec();
        with_pivot.push(pivot);
        let colon: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h[var] = h[var].saturating_sub(e);
                h
            })
            .collect();
        let a = self.numerator(with_pivot);
        let b = self.numerator(colon);
        poly_add(&a, &shift(&b, e as usize))
    }
}

/// Hilbert numerator of `R/(gens)` for a monomial ideal in `nvars` variables.
pub fn monomial_ideal_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let mut rec = PivotRecursion { memo: HashMap::new() };
    let gens = gens.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>();
    if nvars == 0 {
        return if gens.is_empty() { vec![1] } else { vec![] };
    }
    rec.numerator(gens)
}

pub fn hilbert_data<K: Field>(ideal: &Ideal<K>) -> Result<HilbertData> {
    let ring = ideal.ring();
    if !ring.is_standard_graded() {
        return Err(Error::Unsupported("Hilbert series require every variable to have degree 1".into()));
    }
    if let Some(g) = ideal.first_inhomogeneous() {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let lms = ideal.groebner().leading_monomials().to_vec();
    let num = monomial_ideal_numerator(&lms, ring.nvars());
    Ok(HilbertData::from_numerator(num, ring.nvars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::PolyRing;

    fn data(vars: &[&str], gens: &[&str]) -> HilbertData {
        let r = PolyRing::<Rational>::new(vars, ()).unwrap();
        Ideal::parse(&r, gens).unwrap().hilbert_data().unwrap()
    }

    #[test]
    fn fat_point() {
        let h = data(&["x", "y", "z"], &["x^2", "x*y", "y^2"]);
        assert_eq!((h.proj_dim, h.degree), (0, 3));
        assert_eq!(h.reduced_numerator, vec![1, 2]);
        for d in 2..8 {
            assert_eq!(h.hilbert_function(d), 3);
        }
    }

    #[test]
    fn zero_and_unit_ideals() {
        let h = data(&["a", "b", "c", "d"], &[]);
        assert_eq!((h.proj_dim, h.degree), (3, 1));
        let u = data(&["a", "b"], &["1"]);
        assert_eq!((u.proj_dim, u.degree), (-1, 0));
    }

    #[test]
    fn two_points_in_p5() {
        let h = data(
            &["p12", "p13", "p14", "p23", "p24", "p34"],
            &["p12", "p13", "p24", "p34", "p14*p23"],
        );
        assert_eq!((h.proj_dim, h.degree), (0, 2));
    }

    #[test]
    fn hypersurfaces_and_complete_intersections() {
        let h = data(&["x", "y", "z"], &["x^3 + y^3 + z^3"]);
        assert_eq!((h.proj_dim, h.degree), (1, 3));
        let ci = data(&["x", "y", "z", "w"], &["x*y - z*w", "x^2 + y^2 + z^2 + w^2"]);
        assert_eq!((ci.proj_dim, ci.degree), (1, 4));
    }

    #[test]
    fn rejects_inhomogeneous_and_weighted() {
        let r = PolyRing::<Rational>::new(&["x", "y"], ()).unwrap();
        let err = Ideal::parse(&r, &["x^2 - y"]).unwrap().hilbert_data().unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous(_)));
        let w = PolyRing::<Rational>::with_weights(&["x", "y"], vec![1, 2], ()).unwrap();
        let err = Ideal::parse(&w, &["x^2 - y"]).unwrap().hilbert_data().unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }
}
