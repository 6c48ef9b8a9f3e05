use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::LinalgError;
use crate::scalar::Scalar;

/// Row or column layout of a [`Vector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    Row,
    #[default]
    Column,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Row => Orientation::Column,
            Orientation::Column => Orientation::Row,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Row => "row",
            Orientation::Column => "column",
        }
    }
}

/// Owned vector of scalars with a row/column flag.
///
/// All arithmetic returns new values; inputs are never modified. Operations
/// with preconditions return `Result`; the operator overloads (`+`, `-`, `*`)
/// panic with the same diagnostic instead.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Vector<T> {
    components: Vec<T>,
    orientation: Orientation,
}

impl<T: Scalar> Vector<T> {
    /// Column vector from components.
    pub fn new(components: Vec<T>) -> Self {
        Self {
            components,
            orientation: Orientation::Column,
        }
    }

    pub fn row(components: Vec<T>) -> Self {
        Self {
            components,
            orientation: Orientation::Row,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![T::zero(); len])
    }

    /// Unit basis vector `e_index` of length `len`.
    pub fn unit(len: usize, index: usize) -> Result<Self, LinalgError> {
        let mut v = Self::zeros(len);
        v.set(index, T::one())?;
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_row(&self) -> bool {
        self.orientation == Orientation::Row
    }

    pub fn is_column(&self) -> bool {
        self.orientation == Orientation::Column
    }

    pub fn as_slice(&self) -> &[T] {
        &self.components
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.components.iter()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.components
    }

    /// Flips the orientation flag. Components are not moved.
    pub fn transpose(mut self) -> Self {
        self.orientation = self.orientation.flipped();
        self
    }

    /// Borrowed transpose, used to spell `vᵀ·w` without copying `v`.
    pub fn t(&self) -> Transposed<'_, T> {
        Transposed(self)
    }

    pub fn get(&self, index: usize) -> Result<T, LinalgError> {
        self.components
            .get(index)
            .copied()
            .ok_or(LinalgError::IndexOutOfRange {
                index,
                len: self.len(),
            })
    }

    pub fn set(&mut self, index: usize, value: T) -> Result<(), LinalgError> {
        let len = self.len();
        match self.components.get_mut(index) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(LinalgError::IndexOutOfRange { index, len }),
        }
    }

    pub fn scale(&self, factor: T) -> Result<Self, LinalgError> {
        if !factor.is_finite() {
            return Err(LinalgError::NonFiniteScale);
        }
        Ok(Self {
            components: self.components.iter().map(|&c| factor * c).collect(),
            orientation: self.orientation,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: T, other: &Self) -> Result<Self, LinalgError> {
        if !factor.is_finite() {
            return Err(LinalgError::NonFiniteScale);
        }
        self.zip_with(other, |a, b| a + factor * b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Result<Self, LinalgError> {
        if self.len() != other.len() {
            return Err(LinalgError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        if self.orientation != other.orientation {
            return Err(LinalgError::OrientationMismatch {
                left: self.orientation.name(),
                right: other.orientation.name(),
            });
        }
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            orientation: self.orientation,
        })
    }

    /// Inner product `self · other`; `self` must be a row vector and `other`
    /// a column vector.
    pub fn dot(&self, other: &Self) -> Result<T, LinalgError> {
        inner(self.orientation, self.as_slice(), other)
    }

    /// `sqrt(vᵀ v)`, independent of orientation.
    pub fn l2_norm(&self) -> T {
        accumulate(self.as_slice(), self.as_slice()).sqrt()
    }
}

/// A vector viewed with its orientation flipped.
#[derive(Debug, Clone, Copy)]
pub struct Transposed<'a, T>(&'a Vector<T>);

impl<T: Scalar> Transposed<'_, T> {
    pub fn orientation(&self) -> Orientation {
        self.0.orientation.flipped()
    }

    pub fn dot(&self, other: &Vector<T>) -> Result<T, LinalgError> {
        inner(self.orientation(), self.0.as_slice(), other)
    }
}

fn inner<T: Scalar>(left: Orientation, lhs: &[T], rhs: &Vector<T>) -> Result<T, LinalgError> {
    if left != Orientation::Row || rhs.orientation != Orientation::Column {
        return Err(LinalgError::DotOrientation {
            left: left.name(),
            right: rhs.orientation.name(),
        });
    }
    if lhs.len() != rhs.len() {
        return Err(LinalgError::LengthMismatch {
            left: lhs.len(),
            right: rhs.len(),
        });
    }
    Ok(accumulate(lhs, rhs.as_slice()))
}

// Left-to-right in index order.
fn accumulate<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut sum = T::zero();
    for (&x, &y) in a.iter().zip(b) {
        sum += x * y;
    }
    sum
}

impl<T: Scalar> From<Vec<T>> for Vector<T> {
    fn from(components: Vec<T>) -> Self {
        Self::new(components)
    }
}

impl<T: Scalar, const N: usize> From<[T; N]> for Vector<T> {
    fn from(components: [T; N]) -> Self {
        Self::new(components.to_vec())
    }
}

impl<T: Scalar> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<T: Scalar> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, index: usize) -> &T {
        let len = self.len();
        self.components
            .get(index)
            .unwrap_or_else(|| panic!("{}", LinalgError::IndexOutOfRange { index, len }))
    }
}

impl<T: Scalar> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, index: usize) -> &mut T {
        let len = self.len();
        self.components
            .get_mut(index)
            .unwrap_or_else(|| panic!("{}", LinalgError::IndexOutOfRange { index, len }))
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;

    fn add(self, rhs: Self) -> Vector<T> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;

    fn sub(self, rhs: Self) -> Vector<T> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Mul<T> for &Vector<T> {
    type Output = Vector<T>;

    fn mul(self, factor: T) -> Vector<T> {
        self.scale(factor).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Mul<T> for Vector<T> {
    type Output = Vector<T>;

    fn mul(self, factor: T) -> Vector<T> {
        &self * factor
    }
}

macro_rules! scalar_times_vector {
    ($($t:ty),*) => {$(
        impl Mul<&Vector<$t>> for $t {
            type Output = Vector<$t>;

            fn mul(self, v: &Vector<$t>) -> Vector<$t> {
                v * self
            }
        }

        impl Mul<Vector<$t>> for $t {
            type Output = Vector<$t>;

            fn mul(self, v: Vector<$t>) -> Vector<$t> {
                &v * self
            }
        }
    )*};
}

scalar_times_vector!(f32, f64);

impl<T: Scalar> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")?;
        if self.is_row() {
            write!(f, "ᵀ")?;
        }
        Ok(())
    }
}
