//! Sparse matrices with arbitrary-precision integer entries.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sparse integer matrix. Entries are stored by (row, col) with no
/// explicit zeros; at most one entry per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> SparseIntMatrix {
        SparseIntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> SparseIntMatrix {
        let mut m = SparseIntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<SparseIntMatrix>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = SparseIntMatrix::zero(rows, cols);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r},{c}) outside {rows}x{cols}"
                )));
            }
            if m.entries.contains_key(&(r, c)) {
                return Err(Error::DimensionMismatch(format!("duplicate entry ({r},{c})")));
            }
            m.set(r, c, v);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sets an entry, removing it when zero.
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Matrix-matrix product (used for small verification checks).
    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = SparseIntMatrix::zero(self.rows, other.cols);
        // index other's rows
        let mut rows_of: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.iter() {
            rows_of[r].push((c, v));
        }
        for (r, k, v) in self.iter() {
            for &(c, w) in &rows_of[k] {
                out.add_to(r, c, &(v * w));
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for (r, c, e) in self.iter() {
            if !v[c].is_zero() {
                out[r] += e * &v[c];
            }
        }
        Ok(out)
    }
}
