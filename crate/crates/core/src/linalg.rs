//! Exact linear algebra over [`Coefficient`]: incremental row echelon forms
//! for spans and ranks, and dense square solves.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("entry depends on the symbols c1..c3")]
    Symbolic,
}

pub type SparseVec = BTreeMap<usize, Coefficient>;

pub fn sparse_from_dense(v: &[Coefficient]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn axpy(v: &mut SparseVec, a: &Coefficient, row: &SparseVec) {
    for (col, x) in row {
        let d = a * x;
        let entry = v.entry(*col).or_default();
        *entry = &*entry - &d;
        if entry.is_zero() {
            v.remove(col);
        }
    }
}

/// Row echelon basis of a growing subspace. Each stored row has a leading
/// entry `1` at its pivot column and no entries to the left of it.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        let mut v = v.clone();
        let mut cursor = 0;
        while let Some((&col, _)) = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)) {
            let a = v[&col].clone();
            axpy(&mut v, &a, &self.rows[&col]);
            cursor = col + 1;
        }
        Ok(v)
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_empty())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool, LinalgError> {
        let mut r = self.reduce(v)?;
        let Some((&lead, c)) = r.iter().next() else {
            return Ok(false);
        };
        let inv = c.inverse().map_err(|_| LinalgError::Symbolic)?;
        for x in r.values_mut() {
            *x = &*x * &inv;
        }
        self.rows.insert(lead, r);
        Ok(true)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}

pub fn rank_of<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Result<usize, LinalgError> {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v)?;
    }
    Ok(e.rank())
}

/// Dense square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Coefficient>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Coefficient::zero(); n * n] }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Coefficient>(n: usize, mut f: F) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coefficient) {
        self.data[i * self.n + j] = v;
    }

    /// True if every row and every column has exactly one nonzero entry.
    pub fn is_generalized_permutation(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).filter(|&j| !self.get(i, j).is_zero()).count() == 1)
            && (0..n).all(|j| (0..n).filter(|&i| !self.get(i, j).is_zero()).count() == 1)
    }

    pub fn rank(&self) -> Result<usize, LinalgError> {
        let rows: Vec<SparseVec> =
            (0..self.n).map(|i| sparse_from_dense(&self.data[i * self.n..(i + 1) * self.n])).collect();
        rank_of(&rows)
    }

    /// Solves `self * x = b` by Gauss-Jordan elimination.
    pub fn solve(&self, b: &[Coefficient]) -> Result<Vec<Coefficient>, LinalgError> {
        let n = self.n;
        let mut a: Vec<Vec<Coefficient>> =
            (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(LinalgError::Singular)?;
            a.swap(col, piv);
            rhs.swap(col, piv);
            let inv = a[col][col].inverse().map_err(|_| LinalgError::Symbolic)?;
            for x in &mut a[col][col..] {
                *x = &*x * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = &*x - &(&f * p);
                }
                let d = &f * &rhs[col];
                rhs[r] = &rhs[r] - &d;
            }
        }
        Ok(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coefficient {
        Coefficient::from(n)
    }

    #[test]
    fn rank_and_membership() {
        let v1 = sparse_from_dense(&[c(1), c(2), c(0)]);
        let v2 = sparse_from_dense(&[c(2), c(4), c(0)]);
        let v3 = sparse_from_dense(&[c(0), Coefficient::nu(), c(1)]);
        let mut e = Echelon::new();
        assert!(e.insert(&v1).unwrap());
        assert!(!e.insert(&v2).unwrap());
        assert!(e.insert(&v3).unwrap());
        assert_eq!(e.rank(), 2);
        let sum = sparse_from_dense(&[c(1), &c(2) + &Coefficient::nu(), c(1)]);
        assert!(e.contains(&sum).unwrap());
        assert!(!e.contains(&sparse_from_dense(&[c(0), c(0), c(1)])).unwrap());
    }

    #[test]
    fn solve_small_system() {
        let q = Coefficient::q_pow(1);
        let m = Matrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => q.clone(),
            (0, 1) => c(1),
            (1, 0) => c(1),
            _ => c(0),
        });
        let x = m.solve(&[c(3), q.clone()]).unwrap();
        assert_eq!(x[0], q);
        assert_eq!(x[1], &c(3) - &(&q * &q));
        assert!(!m.is_generalized_permutation());
        assert_eq!(Matrix::zeros(2).solve(&[c(1), c(1)]), Err(LinalgError::Singular));
    }
}
