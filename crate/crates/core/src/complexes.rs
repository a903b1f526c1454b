//! Graded free complexes over a polynomial ring, Koszul complexes, graded
//! homology and chain maps.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, RingExt};

/// Row-major matrix of polynomials; `rows` = target rank, `cols` = source rank.
pub type PolyMatrix<K> = Vec<Vec<Polynomial<K>>>;

/// A graded free module `⊕ S(twists[b])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub twists: Vec<i64>,
    /// Optional names for the basis elements, e.g. `e23`.
    pub labels: Vec<String>,
}

impl FreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        FreeModule { twists, labels: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// `M_low <- M_{low+1} <- …`; `differentials[k]` maps `modules[k+1]` to `modules[k]`.
#[derive(Debug, Clone)]
pub struct FreeComplex<K: Field> {
    ring: Ring<K>,
    low: i64,
    modules: Vec<FreeModule>,
    differentials: Vec<PolyMatrix<K>>,
}

fn zero_matrix<K: Field>(ring: &Ring<K>, rows: usize, cols: usize) -> PolyMatrix<K> {
    vec![vec![ring.zero(); cols]; rows]
}

fn shape<K: Field>(m: &PolyMatrix<K>, cols_if_empty: usize) -> (usize, usize) {
    (m.len(), m.first().map_or(cols_if_empty, |r| r.len()))
}

pub fn matrix_product<K: Field>(ring: &Ring<K>, a: &PolyMatrix<K>, b: &PolyMatrix<K>, inner: usize, cols: usize) -> PolyMatrix<K> {
    let rows = a.len();
    let mut out = zero_matrix(ring, rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

impl<K: Field> FreeComplex<K> {
    /// Checks matrix shapes and that every entry has the degree forced by the twists.
    pub fn new(ring: &Ring<K>, low: i64, modules: Vec<FreeModule>, differentials: Vec<PolyMatrix<K>>) -> Result<Self> {
        if modules.is_empty() {
            if !differentials.is_empty() {
                return Err(Error::ShapeMismatch("differentials without modules".into()));
            }
        } else if differentials.len() + 1 != modules.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let (src, tgt) = (&modules[k + 1], &modules[k]);
            if d.len() != tgt.rank() || d.iter().any(|row| row.len() != src.rank()) {
                return Err(Error::ShapeMismatch(format!(
                    "differential at position {} must be {}x{}",
                    low + k as i64 + 1,
                    tgt.rank(),
                    src.rank()
                )));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if e.ring() != ring {
                        return Err(Error::RingMismatch);
                    }
                    if e.is_zero() {
                        continue;
                    }
                    let want = tgt.twists[r] - src.twists[c];
                    if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                        return Err(Error::NotHomogeneous(format!(
                            "entry ({r}, {c}) of the differential at position {} should have degree {want}: {e}",
                            low + k as i64 + 1
                        )));
                    }
                }
            }
        }
        Ok(FreeComplex {
            ring: ring.clone(),
            low,
            modules,
            differentials,
        })
    }

    pub fn empty(ring: &Ring<K>) -> Self {
        FreeComplex {
            ring: ring.clone(),
            low: 0,
            modules: vec![],
            differentials: vec![],
        }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.modules.len() as i64 - 1
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, position: i64) -> Option<&FreeModule> {
        usize::try_from(position - self.low).ok().and_then(|k| self.modules.get(k))
    }

    pub fn rank(&self, position: i64) -> usize {
        self.module(position).map_or(0, |m| m.rank())
    }

    /// `d_position : M_position -> M_{position-1}`, if both modules exist.
    pub fn differential(&self, position: i64) -> Option<&PolyMatrix<K>> {
        usize::try_from(position - self.low - 1).ok().and_then(|k| self.differentials.get(k))
    }

    pub fn differentials(&self) -> &[PolyMatrix<K>] {
        &self.differentials
    }

    /// Shift every twist by `k`.
    pub fn twisted(&self, k: i64) -> Self {
        let mut out = self.clone();
        for m in &mut out.modules {
            for t in &mut m.twists {
                *t += k;
            }
        }
        out
    }

    /// Renumber homological positions so that the lowest is `low`.
    pub fn with_low(mut self, low: i64) -> Self {
        self.low = low;
        self
    }

    /// Append a module below the current lowest one.
    pub fn augmented(&self, module: FreeModule, d: PolyMatrix<K>) -> Result<Self> {
        let mut modules = vec![module];
        modules.extend(self.modules.iter().cloned());
        let mut diffs = vec![d];
        diffs.extend(self.differentials.iter().cloned());
        FreeComplex::new(&self.ring, self.low - 1, modules, diffs)
    }

    /// Products `d_{i-1} d_i`, one per consecutive pair.
    fn squares(&self) -> Vec<(i64, PolyMatrix<K>)> {
        (1..self.differentials.len())
            .map(|k| {
                let a = &self.differentials[k - 1];
                let b = &self.differentials[k];
                let p = matrix_product(&self.ring, a, b, self.modules[k].rank(), self.modules[k + 1].rank());
                (self.low + k as i64 + 1, p)
            })
            .collect()
    }

    pub fn is_complex(&self) -> bool {
        self.squares().iter().all(|(_, p)| p.iter().flatten().all(|e| e.is_zero()))
    }

    /// `d² ≡ 0` modulo an ideal.
    pub fn is_complex_modulo(&self, ideal: &Ideal<K>) -> bool {
        self.squares().iter().all(|(_, p)| p.iter().flatten().all(|e| ideal.contains(e)))
    }

    /// First position `i` with `d_{i-1} d_i ≠ 0`, with an offending entry.
    pub fn first_nonzero_square(&self) -> Option<(i64, Polynomial<K>)> {
        self.squares()
            .into_iter()
            .find_map(|(i, p)| p.into_iter().flatten().find(|e| !e.is_zero()).map(|e| (i, e)))
    }

    /// Internal degrees in which generators of the modules live.
    pub fn generator_degrees(&self) -> Option<(i64, i64)> {
        let degs = self.modules.iter().flat_map(|m| m.twists.iter().map(|t| -t));
        let lo = degs.clone().min()?;
        let hi = degs.max()?;
        Some((lo, hi))
    }

    /// `[lowest generator degree, lowest + 2·nvars]`.
    pub fn default_window(&self) -> (i64, i64) {
        let lo = self.generator_degrees().map_or(0, |(lo, _)| lo);
        (lo, lo + 2 * self.ring.nvars() as i64)
    }

    /// Matrix of `d_position` restricted to internal degree `degree`, with
    /// the monomial bases of the source and target graded pieces.
    fn graded_piece(&self, position: i64, degree: i64, cache: &mut MonomialCache) -> Matrix<K> {
        let ctx = self.ring.ctx();
        let src = self.module(position).expect("source exists");
        let tgt = self.module(position - 1).expect("target exists");
        let d = self.differential(position).expect("differential exists");
        let mut row_offset = Vec::new();
        let mut row_index: Vec<HashMap<Monomial, usize>> = Vec::new();
        let mut rows = 0;
        for &t in &tgt.twists {
            let mons = cache.get(degree + t);
            row_offset.push(rows);
            row_index.push(mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect());
            rows += mons.len();
        }
        let mut columns: Vec<Vec<(usize, K)>> = Vec::new();
        for (c, &a) in src.twists.iter().enumerate() {
            for mu in cache.get(degree + a) {
                let mut col = Vec::new();
                for r in 0..tgt.rank() {
                    let e = &d[r][c];
                    for (m, v) in e.terms() {
                        let prod = m.mul(&mu);
                        let idx = row_index[r][&prod];
                        col.push((row_offset[r] + idx, v.clone()));
                    }
                }
                columns.push(col);
            }
        }
        let mut m = Matrix::zeros(rows, columns.len(), ctx);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col {
                m.set(i, j, v);
            }
        }
        m
    }

    fn piece_dimension(&self, position: i64, degree: i64, cache: &mut MonomialCache) -> usize {
        self.module(position)
            .map_or(0, |m| m.twists.iter().map(|&t| cache.get(degree + t).len()).sum())
    }

    /// `dim_K H_position(C)_degree`.
    pub fn homology_dimension(&self, position: i64, degree: i64) -> Result<usize> {
        if self.module(position).is_none() {
            return Err(Error::PositionOutOfRange(position));
        }
        let mut cache = MonomialCache::new(self.ring.weights().to_vec());
        let dim = self.piece_dimension(position, degree, &mut cache);
        let kernel = if self.differential(position).is_some() {
            dim - self.graded_piece(position, degree, &mut cache).rank()
        } else {
            dim
        };
        let image = if self.differential(position + 1).is_some() {
            self.graded_piece(position + 1, degree, &mut cache).rank()
        } else {
            0
        };
        kernel
            .checked_sub(image)
            .ok_or_else(|| Error::InvalidArgument(format!("d^2 != 0 at position {position} in degree {degree}")))
    }

    /// Homology dimensions for every position in `positions` and degree in the
    /// window, computed in parallel and returned in order.
    pub fn homology_table(&self, positions: &[i64], window: (i64, i64)) -> Result<Vec<(i64, i64, usize)>> {
        let jobs: Vec<(i64, i64)> = positions
            .iter()
            .flat_map(|&p| (window.0..=window.1).map(move |d| (p, d)))
            .collect();
        jobs.par_iter()
            .map(|&(p, d)| self.homology_dimension(p, d).map(|h| (p, d, h)))
            .collect()
    }
}

struct MonomialCache {
    weights: Vec<u32>,
    by_degree: HashMap<i64, Vec<Monomial>>,
}

impl MonomialCache {
    fn new(weights: Vec<u32>) -> Self {
        MonomialCache {
            weights,
            by_degree: HashMap::new(),
        }
    }

    fn get(&mut self, degree: i64) -> Vec<Monomial> {
        if degree < 0 {
            return vec![];
        }
        let weights = &self.weights;
        self.by_degree
            .entry(degree)
            .or_insert_with(|| monomials_of_degree(weights, degree as u32))
            .clone()
    }
}

/// All monomials of weighted degree `d`.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(cur.clone()));
            }
            return;
        }
        let mut e = 0;
        while e * weights[i] <= left {
            cur.push(e);
            rec(weights, i + 1, left - e * weights[i], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}

/// `k`-subsets of `{1..n}` in descending lexicographic order, e.g. 23, 13, 12.
pub fn koszul_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// Koszul complex of homogeneous `gens`; position `k` has basis
/// `e_I`, `|I| = k`, and `e_{i1<…<ik} ↦ Σ_j (-1)^{j+1} f_{ij} e_{I∖ij}`.
pub fn koszul_complex<K: Field>(ring: &Ring<K>, gens: &[Polynomial<K>]) -> Result<FreeComplex<K>> {
    let n = gens.len();
    let mut degs = Vec::with_capacity(n);
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        degs.push(g.degree().unwrap_or(0) as i64);
    }
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| koszul_basis(n, k)).collect();
    let modules = bases
        .iter()
        .map(|basis| FreeModule {
            twists: basis.iter().map(|s| -s.iter().map(|&i| degs[i - 1]).sum::<i64>()).collect(),
            labels: basis
                .iter()
                .map(|s| format!("e{}", s.iter().map(|i| i.to_string()).collect::<String>()))
                .collect(),
        })
        .collect();
    let mut differentials = Vec::with_capacity(n);
    for k in 1..=n {
        let src = &bases[k];
        let tgt = &bases[k - 1];
        let index: HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut d = zero_matrix(ring, tgt.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for (j, &i) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(j);
                let r = index[&rest];
                let g = &gens[i - 1];
                d[r][c] = if j % 2 == 0 { g.clone() } else { -g };
            }
        }
        differentials.push(d);
    }
    FreeComplex::new(ring, 0, modules, differentials)
}

/// A family of matrices `f_i : C_i -> D_{i+shift}`; missing positions are zero.
#[derive(Debug, Clone)]
pub struct ChainMap<K: Field> {
    pub source: FreeComplex<K>,
    pub target: FreeComplex<K>,
    pub shift: i64,
    pub maps: BTreeMap<i64, PolyMatrix<K>>,
}

impl<K: Field> ChainMap<K> {
    pub fn new(source: FreeComplex<K>, target: FreeComplex<K>, shift: i64, maps: BTreeMap<i64, PolyMatrix<K>>) -> Result<Self> {
        for (&i, m) in &maps {
            let rows = target.rank(i + shift);
            let cols = source.rank(i);
            if source.module(i).is_none() || target.module(i + shift).is_none() {
                return Err(Error::ShapeMismatch(format!("no modules for the map at position {i}")));
            }
            if shape(m, cols) != (rows, cols) {
                return Err(Error::ShapeMismatch(format!("map at position {i} must be {rows}x{cols}")));
            }
        }
        Ok(ChainMap {
            source,
            target,
            shift,
            maps,
        })
    }

    pub fn identity(c: &FreeComplex<K>) -> Self {
        let ring = c.ring();
        let maps = (c.low()..=c.high())
            .map(|i| {
                let r = c.rank(i);
                let mut m = zero_matrix(ring, r, r);
                for (k, row) in m.iter_mut().enumerate() {
                    row[k] = ring.one();
                }
                (i, m)
            })
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            shift: 0,
            maps,
        }
    }

    fn map_or_zero(&self, i: i64) -> PolyMatrix<K> {
        self.maps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| zero_matrix(self.source.ring(), self.target.rank(i + self.shift), self.source.rank(i)))
    }

    /// `d^target ∘ f_i` and `f_{i-1} ∘ d^source` for the square leaving position `i`.
    fn square(&self, i: i64) -> (PolyMatrix<K>, PolyMatrix<K>) {
        let ring = self.source.ring();
        let j = i + self.shift;
        let cols = self.source.rank(i);
        let rows = self.target.rank(j - 1);
        let left = match self.target.differential(j) {
            Some(d) => matrix_product(ring, d, &self.map_or_zero(i), self.target.rank(j), cols),
            None => zero_matrix(ring, rows, cols),
        };
        let right = match self.source.differential(i) {
            Some(d) => matrix_product(ring, &self.map_or_zero(i - 1), d, self.source.rank(i - 1), cols),
            None => zero_matrix(ring, rows, cols),
        };
        (left, right)
    }

    /// First square that fails to commute, with the offending entry difference.
    pub fn first_failure(&self, modulo: Option<&Ideal<K>>) -> Option<(i64, usize, usize, Polynomial<K>)> {
        for i in self.source.low()..=self.source.high() {
            if self.target.module(i + self.shift - 1).is_none() {
                continue;
            }
            let (left, right) = self.square(i);
            for (r, (lrow, rrow)) in left.iter().zip(&right).enumerate() {
                for (c, (a, b)) in lrow.iter().zip(rrow).enumerate() {
                    let diff = a - b;
                    let ok = match modulo {
                        None => diff.is_zero(),
                        Some(ideal) => ideal.contains(&diff),
                    };
                    if !ok {
                        return Some((i, r, c, diff));
                    }
                }
            }
        }
        None
    }

    pub fn commutes(&self) -> bool {
        self.first_failure(None).is_none()
    }

    pub fn commutes_modulo(&self, ideal: &Ideal<K>) -> bool {
        self.first_failure(Some(ideal)).is_none()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap<K>) -> Result<ChainMap<K>> {
        let ring = self.source.ring();
        let mut maps = BTreeMap::new();
        for (&i, f) in &self.maps {
            let j = i + self.shift;
            if let Some(g) = other.maps.get(&j) {
                let inner = self.target.rank(j);
                let cols = self.source.rank(i);
                maps.insert(i, matrix_product(ring, g, f, inner, cols));
            }
        }
        ChainMap::new(self.source.clone(), other.target.clone(), self.shift + other.shift, maps)
    }
}

pub fn check_chain_map<K: Field>(m: &ChainMap<K>) -> bool {
    m.commutes()
}

/// `gens` is regular on `R/ambient` iff the projective dimension drops by
/// exactly `gens.len()`; valid when `R/ambient` is Cohen–Macaulay.
pub fn is_regular_sequence<K: Field>(gens: &[Polynomial<K>], ambient: &Ideal<K>) -> Result<bool> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let before = ambient.hilbert_data()?.proj_dim;
    let after = ambient.with(gens).hilbert_data()?.proj_dim;
    Ok(after == before - gens.len() as i64)
}
