use crate::error::LinalgError;
use crate::scalar::Scalar;

use super::{DenseMatrix, LinearOperator, Vector};

/// Compressed row storage.
///
/// Row `i` owns `values[row_ptr[i]..row_ptr[i + 1]]`, with the matching
/// column positions in `col_indices`, sorted strictly increasing. Exact zeros
/// are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CrsMatrix<T> {
    rows: usize,
    cols: usize,
    values: Vec<T>,
    col_indices: Vec<usize>,
    row_ptr: Vec<usize>,
}

impl<T: Scalar> CrsMatrix<T> {
    pub fn from_dense(m: &DenseMatrix<T>) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        let mut values = Vec::new();
        let mut col_indices = Vec::new();
        let mut row_ptr = Vec::with_capacity(rows + 1);
        row_ptr.push(0);
        for r in 0..rows {
            for (c, &v) in m.entries()[r * cols..(r + 1) * cols].iter().enumerate() {
                if v != T::zero() {
                    values.push(v);
                    col_indices.push(c);
                }
            }
            row_ptr.push(values.len());
        }
        Self {
            rows,
            cols,
            values,
            col_indices,
            row_ptr,
        }
    }

    /// Validates raw CRS arrays.
    pub fn from_parts(
        rows: usize,
        cols: usize,
        values: Vec<T>,
        col_indices: Vec<usize>,
        row_ptr: Vec<usize>,
    ) -> Result<Self, LinalgError> {
        let bad = |msg: String| Err(LinalgError::BadCrs(msg));
        if row_ptr.len() != rows + 1 {
            return bad(format!(
                "row_ptr has length {}, expected {}",
                row_ptr.len(),
                rows + 1
            ));
        }
        if row_ptr[0] != 0 {
            return bad("row_ptr[0] must be 0".into());
        }
        if values.len() != col_indices.len() {
            return bad(format!(
                "{} values but {} column indices",
                values.len(),
                col_indices.len()
            ));
        }
        if row_ptr[rows] != values.len() {
            return bad(format!(
                "row_ptr[{rows}] = {} but {} values stored",
                row_ptr[rows],
                values.len()
            ));
        }
        for (r, w) in row_ptr.windows(2).enumerate() {
            if w[1] < w[0] {
                return bad(format!("row_ptr decreases at row {r}"));
            }
            let idx = &col_indices[w[0]..w[1]];
            if let Some(&c) = idx.iter().find(|&&c| c >= cols) {
                return bad(format!(
                    "column index {c} in row {r} exceeds {cols} columns"
                ));
            }
            if idx.windows(2).any(|p| p[1] <= p[0]) {
                return bad(format!("column indices of row {r} not strictly increasing"));
            }
        }
        if values.iter().any(|&v| v == T::zero()) {
            return bad("explicitly stored zero".into());
        }
        Ok(Self {
            rows,
            cols,
            values,
            col_indices,
            row_ptr,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            values: vec![T::one(); n],
            col_indices: (0..n).collect(),
            row_ptr: (0..=n).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn get(&self, row: usize, col: usize) -> Result<T, LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::EntryOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        Ok(match self.col_indices[span.clone()].binary_search(&col) {
            Ok(k) => self.values[span.start + k],
            Err(_) => T::zero(),
        })
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let mut m = DenseMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                m[(r, self.col_indices[k])] = self.values[k];
            }
        }
        m
    }

    /// `A·v` over stored entries, each row accumulated in increasing column
    /// order like [`DenseMatrix::matvec`], so both agree bitwise on finite data.
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
        let result = self
            .row_ptr
            .windows(2)
            .map(|w| {
                let mut sum = T::zero();
                for k in w[0]..w[1] {
                    sum += self.values[k] * x[self.col_indices[k]];
                }
                sum
            })
            .collect();
        Ok(Vector::new(result))
    }
}

impl<T: Scalar> From<&DenseMatrix<T>> for CrsMatrix<T> {
    fn from(m: &DenseMatrix<T>) -> Self {
        Self::from_dense(m)
    }
}

impl<T: Scalar> LinearOperator<T> for CrsMatrix<T> {
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
