use std::ops::{Index, IndexMut};

use crate::error::LinalgError;
use crate::scalar::Scalar;

use super::{LinearOperator, Vector};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows. An empty outer list gives a 0x0 matrix.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::RaggedRows {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> Result<&[T], LinalgError> {
        if row >= self.rows {
            return Err(self.out_of_range(row, 0));
        }
        Ok(&self.entries[row * self.cols..(row + 1) * self.cols])
    }

    fn out_of_range(&self, row: usize, col: usize) -> LinalgError {
        LinalgError::EntryOutOfRange {
            row,
            col,
            rows: self.rows,
            cols: self.cols,
        }
    }

    fn offset(&self, row: usize, col: usize) -> Result<usize, LinalgError> {
        if row < self.rows && col < self.cols {
            Ok(row * self.cols + col)
        } else {
            Err(self.out_of_range(row, col))
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Result<T, LinalgError> {
        self.offset(row, col).map(|k| self.entries[k])
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) -> Result<(), LinalgError> {
        let k = self.offset(row, col)?;
        self.entries[k] = value;
        Ok(())
    }

    pub fn scale(&self, factor: T) -> Result<Self, LinalgError> {
        if !factor.is_finite() {
            return Err(LinalgError::NonFiniteScale);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| factor * e).collect(),
        })
    }

    /// `A·v`, accumulating each row in increasing column order.
    pub fn matvec(&self, v: &Vector<T>) -> Result<Vector<T>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::MatVecMismatch {
                cols: self.cols,
                len: v.len(),
            });
        }
        if !v.is_column() {
            return Err(LinalgError::MatVecRowVector);
        }
        let x = v.as_slice();
        let mut result = vec![T::zero(); self.rows];
        for (row, out) in result.iter_mut().enumerate() {
            let entries = &self.entries[row * self.cols..(row + 1) * self.cols];
            for (&a, &xc) in entries.iter().zip(x) {
                *out += a * xc;
            }
        }
        Ok(Vector::new(result))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        t
    }

    /// Exact (bitwise) symmetry.
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (r + 1..self.cols).all(|c| {
                    bitwise_eq(
                        self.entries[r * self.cols + c],
                        self.entries[c * self.cols + r],
                    )
                })
            })
    }
}

// integer_decode separates every non-NaN bit pattern, ±0 included
fn bitwise_eq<T: Scalar>(a: T, b: T) -> bool {
    a.integer_decode() == b.integer_decode()
}

impl<T: Scalar> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;

    fn index(&self, (row, col): (usize, usize)) -> &T {
        let k = self.offset(row, col).unwrap_or_else(|e| panic!("{e}"));
        &self.entries[k]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut T {
        let k = self.offset(row, col).unwrap_or_else(|e| panic!("{e}"));
        &mut self.entries[k]
    }
}

impl<T: Scalar> LinearOperator<T> for DenseMatrix<T> {
    fn nrows(&self) -> usize {
        self.rows
    }

    fn ncols(&self) -> usize {
        self.cols
    }

    fn apply(&self, v: &Vector<T>) -> Result<Vector<T>, LinalgError> {
        self.matvec(v)
    }
}
