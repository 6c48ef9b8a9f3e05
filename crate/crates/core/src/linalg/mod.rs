//! Vectors, dense and compressed-row matrices.

mod crs;
mod dense;
mod vector;

pub use crs::CrsMatrix;
pub use dense::DenseMatrix;
pub use vector::{Orientation, Transposed, Vector};

use crate::error::LinalgError;

/// Anything that can apply a matrix to a column vector.
pub trait LinearOperator<T> {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn apply(&self, v: &Vector<T>) -> Result<Vector<T>, LinalgError>;
}

impl<T, M: LinearOperator<T> + ?Sized> LinearOperator<T> for &M {
    fn nrows(&self) -> usize {
        (**self).nrows()
    }

    fn ncols(&self) -> usize {
        (**self).ncols()
    }

    fn apply(&self, v: &Vector<T>) -> Result<Vector<T>, LinalgError> {
        (**self).apply(v)
    }
}
