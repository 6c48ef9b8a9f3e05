//! Relative floating-point comparison and a small complex-number type.
//!
//! [`approx_eq`] implements the classic relative test
//! `|a - b| <= max(|a|, |b|) * eps * tolerance`. Because the threshold scales
//! with the larger magnitude, comparing a nonzero value against exactly `0.0`
//! is always `false`; tests that need to check "close to zero" should compare
//! `|x|` against an explicit absolute bound instead.
//!
//! An alternative based on stepping to the next representable value
//! (`nextafter`) exists but is not offered here.

use std::ops::Add;

use num_traits::Zero;

use crate::error::CompareError;
use crate::scalar::Scalar;

/// Which machine epsilon a comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// binary32, `f32::EPSILON`
    Single,
    /// binary64, `f64::EPSILON`
    #[default]
    Double,
}

impl Precision {
    pub fn epsilon(self) -> f64 {
        match self {
            Precision::Single => f32::EPSILON as f64,
            Precision::Double => f64::EPSILON,
        }
    }
}

/// Tolerance (in multiples of machine epsilon) and precision for [`approx_eq`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatCompareSpec {
    tolerance_multiplier: f64,
    precision: Precision,
}

impl Default for FloatCompareSpec {
    fn default() -> Self {
        Self {
            tolerance_multiplier: 1.0,
            precision: Precision::Double,
        }
    }
}

impl FloatCompareSpec {
    pub fn new(tolerance_multiplier: f64, precision: Precision) -> Result<Self, CompareError> {
        if !(tolerance_multiplier.is_finite() && tolerance_multiplier > 0.0) {
            return Err(CompareError::BadTolerance(tolerance_multiplier));
        }
        Ok(Self {
            tolerance_multiplier,
            precision,
        })
    }

    pub fn double(tolerance_multiplier: f64) -> Result<Self, CompareError> {
        Self::new(tolerance_multiplier, Precision::Double)
    }

    pub fn single(tolerance_multiplier: f64) -> Result<Self, CompareError> {
        Self::new(tolerance_multiplier, Precision::Single)
    }

    pub fn tolerance_multiplier(&self) -> f64 {
        self.tolerance_multiplier
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }
}

/// Relative comparison in the precision of `T`, with `tolerance` multiples of
/// `T::epsilon()`.
pub fn approx_eq_in<T: Scalar>(a: T, b: T, tolerance: T) -> Result<bool, CompareError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(CompareError::NonFinite {
            a: a.to_f64().unwrap_or(f64::NAN),
            b: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(tolerance.is_finite() && tolerance > T::zero()) {
        return Err(CompareError::BadTolerance(
            tolerance.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let difference = (a - b).abs();
    let (abs_a, abs_b) = (a.abs(), b.abs());
    let largest = if abs_b > abs_a { abs_b } else { abs_a };
    Ok(difference <= largest * T::epsilon() * tolerance)
}

/// Relative comparison of two binary64 values under `spec`.
///
/// With [`Precision::Single`] both inputs are first rounded to `f32` and the
/// whole test runs in single precision.
pub fn approx_eq(a: f64, b: f64, spec: FloatCompareSpec) -> Result<bool, CompareError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(CompareError::NonFinite { a, b });
    }
    match spec.precision {
        Precision::Double => approx_eq_in(a, b, spec.tolerance_multiplier),
        Precision::Single => approx_eq_in(a as f32, b as f32, spec.tolerance_multiplier as f32),
    }
}

/// Complex number over any numeric kind with addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ComplexNumber<T> {
    real: T,
    imaginary: T,
}

impl<T: Copy> ComplexNumber<T> {
    pub const fn new(real: T, imaginary: T) -> Self {
        Self { real, imaginary }
    }

    pub fn real_part(&self) -> T {
        self.real
    }

    pub fn imaginary_part(&self) -> T {
        self.imaginary
    }
}

impl<T: Copy + Zero> ComplexNumber<T> {
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
}

impl<T: Copy + Add<Output = T>> Add for ComplexNumber<T> {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        Self::new(self.real + other.real, self.imaginary + other.imaginary)
    }
}
