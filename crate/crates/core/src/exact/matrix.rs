//! Sparse matrices over an exact scalar ring.
//!
//! Entries are stored in a `BTreeMap` keyed by `(row, col)` so iteration
//! order, and therefore every downstream computation, is deterministic.
//! Stored entries are always nonzero.

use crate::error::Error;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self, Error> {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside {rows}x{cols}"
                )));
            }
            if !v.is_zero() {
                m.entries.insert((r, c), v);
            }
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Column vector from a slice.
    pub fn column(values: &[T]) -> Self {
        let mut m = Self::zero(values.len(), 1);
        for (i, v) in values.iter().enumerate() {
            m.set(i, 0, v.clone());
        }
        m
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

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.set(c, r, v.clone());
        }
        m
    }

    pub fn neg(&self) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, -v.clone());
        }
        m
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v.clone() * s.clone());
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = self.clone();
        for (r, c, v) in other.iter() {
            m.add_to(r, c, v.clone());
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // group rhs entries by row for the sparse product
        let mut by_row: BTreeMap<usize, Vec<(usize, &T)>> = BTreeMap::new();
        for (r, c, v) in other.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut m = Self::zero(self.rows, other.cols);
        for (r, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    m.add_to(r, c, a.clone() * b.clone());
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, Error> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} with vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![T::zero(); self.rows];
        for (r, c, a) in self.iter() {
            if !v[c].is_zero() {
                let term = a.clone() * v[c].clone();
                out[r] += term;
            }
        }
        Ok(out)
    }

    pub fn col_vec(&self, c: usize) -> Vec<T> {
        let mut out = vec![T::zero(); self.rows];
        for (r, cc, v) in self.iter() {
            if cc == c {
                out[r] = v.clone();
            }
        }
        out
    }

    /// Stack horizontally: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zero(self.rows, self.cols + other.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v.clone());
        }
        for (r, c, v) in other.iter() {
            m.set(r, self.cols + c, v.clone());
        }
        Ok(m)
    }

    /// Stack vertically: `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zero(self.rows + other.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v.clone());
        }
        for (r, c, v) in other.iter() {
            m.set(self.rows + r, c, v.clone());
        }
        Ok(m)
    }

    /// Block diagonal of the given matrices.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zero(rows, cols);
        let mut ro = 0;
        let mut co = 0;
        for b in blocks {
            for (r, c, v) in b.iter() {
                m.set(ro + r, co + c, v.clone());
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Keep the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut m = Self::zero(self.rows, cols.len());
        for (new_c, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                let v = self.get(r, c);
                if !v.is_zero() {
                    m.set(r, new_c, v);
                }
            }
        }
        m
    }

    /// Keep the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        self.transpose().select_cols(rows).transpose()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let mut m = SparseMatrix::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, f(v));
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            d[r][c] = v.clone();
        }
        d
    }
}

impl<T: Scalar> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.render()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
