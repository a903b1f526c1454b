//! Dense exact linear algebra over a field.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize, ctx: &K::Ctx) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(ctx); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: &K::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.set(i, i, K::one(ctx));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>, ctx: &K::Ctx) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols, ctx);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self, ctx: &K::Ctx) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(ctx); self.cols];
                v[f] = K::one(ctx);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[K], ctx: &K::Ctx) -> Vec<K> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(K::zero(ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix<K>, ctx: &K::Ctx) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::<K>::zeros(self.rows, other.cols, ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Exact rank of a matrix whose entries are constant polynomials.
pub fn matrix_rank<K: Field>(m: &[Vec<Polynomial<K>>]) -> Result<usize> {
    let Some(first) = m.iter().flatten().next() else {
        return Ok(0);
    };
    let ctx = first.ring().ctx().clone();
    let mut rows = Vec::with_capacity(m.len());
    for (i, row) in m.iter().enumerate() {
        let mut r = Vec::with_capacity(row.len());
        for (j, e) in row.iter().enumerate() {
            r.push(e.constant_value().ok_or(Error::NonConstantEntry { row: i, col: j })?);
        }
        rows.push(r);
    }
    Ok(Matrix::from_rows(rows, &ctx).rank())
}

/// Evaluate every entry of a polynomial matrix at a point.
pub fn evaluate_matrix<K: Field>(m: &[Vec<Polynomial<K>>], point: &[K]) -> Vec<Vec<Polynomial<K>>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    use crate::poly::RingExt;
                    e.ring().constant(e.evaluate(point))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::poly::{PolyRing, RingExt};

    #[test]
    fn rank_of_identity_and_zero() {
        let r = PolyRing::<Rational>::new(&["x"], ()).unwrap();
        let id: Vec<Vec<_>> = (0..3)
            .map(|i| (0..3).map(|j| r.int((i == j) as i64)).collect())
            .collect();
        assert_eq!(matrix_rank(&id).unwrap(), 3);
        let z = vec![vec![r.zero(); 3]; 2];
        assert_eq!(matrix_rank(&z).unwrap(), 0);
        let bad = vec![vec![r.var(0)]];
        assert_eq!(matrix_rank(&bad), Err(Error::NonConstantEntry { row: 0, col: 0 }));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = vec![vec![1, 1], vec![1, 3]];
        let q = Matrix::<Rational>::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v, &())).collect()).collect(),
            &(),
        );
        assert_eq!(q.rank(), 2);
        let f2 = Matrix::<Fp>::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Fp::new(v, 2)).collect()).collect(),
            &2,
        );
        assert_eq!(f2.rank(), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::<Fp>::from_rows(
            vec![
                vec![Fp::new(1, 7), Fp::new(2, 7), Fp::new(3, 7)],
                vec![Fp::new(2, 7), Fp::new(4, 7), Fp::new(6, 7)],
            ],
            &7,
        );
        let ker = m.kernel(&7);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&v, &7).iter().all(|x| x.is_zero()));
        }
    }
}
