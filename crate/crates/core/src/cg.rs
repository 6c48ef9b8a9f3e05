//! Conjugate-gradient iteration for symmetric positive-definite operators.
//!
//! One step, starting from `r⁰ = d⁰ = b − Aφ⁰`:
//!
//! ```text
//! α    = (dⁿᵀ rⁿ) / (dⁿᵀ A dⁿ)
//! φⁿ⁺¹ = φⁿ + α dⁿ
//! rⁿ⁺¹ = rⁿ − α A dⁿ
//! β    = (rⁿ⁺¹ᵀ rⁿ⁺¹) / (rⁿᵀ rⁿ)
//! dⁿ⁺¹ = rⁿ⁺¹ + β dⁿ
//! ```
//!
//! `A dⁿ` is evaluated once per step. The residual follows the recurrence
//! above and is never recomputed from `b − Aφ`. The driver stops when the
//! absolute residual norm `‖r‖₂` is at most the configured tolerance.

use crate::error::CgError;
use crate::linalg::{LinearOperator, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct CgConfig<T> {
    max_iterations: usize,
    tolerance: T,
    initial_guess: Option<Vector<T>>,
}

impl<T: Scalar> CgConfig<T> {
    pub fn new(max_iterations: usize, tolerance: T) -> Result<Self, CgError> {
        if max_iterations == 0 {
            return Err(CgError::ZeroIterations);
        }
        if !(tolerance.is_finite() && tolerance > T::zero()) {
            return Err(CgError::BadTolerance(
                tolerance.to_f64().unwrap_or(f64::NAN),
            ));
        }
        Ok(Self {
            max_iterations,
            tolerance,
            initial_guess: None,
        })
    }

    pub fn with_initial_guess(mut self, x0: Vector<T>) -> Self {
        self.initial_guess = Some(x0);
        self
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn initial_guess(&self) -> Option<&Vector<T>> {
        self.initial_guess.as_ref()
    }
}

/// Iterate, residual and search direction after `n` steps, with the step
/// length and `β` of the step that produced them (both 0 initially).
#[derive(Debug, Clone, PartialEq)]
pub struct CgState<T> {
    pub phi: Vector<T>,
    pub r: Vector<T>,
    pub d: Vector<T>,
    pub alpha: T,
    pub beta: T,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CgResult<T> {
    pub solution: Vector<T>,
    pub iterations: usize,
    pub residual_norm: T,
    pub converged: bool,
    /// A zero denominator stopped the iteration before the tolerance was met.
    pub breakdown: bool,
}

fn check_shape<T, A: LinearOperator<T>>(a: &A, len: usize) -> Result<(), CgError> {
    if a.nrows() != len || a.ncols() != len {
        return Err(CgError::OperatorShape {
            rows: a.nrows(),
            cols: a.ncols(),
            len,
        });
    }
    Ok(())
}

pub fn cg_init<T: Scalar, A: LinearOperator<T>>(
    a: &A,
    b: &Vector<T>,
    x0: &Vector<T>,
) -> Result<CgState<T>, CgError> {
    check_shape(a, b.len())?;
    let r = b.try_sub(&a.apply(x0)?)?;
    Ok(CgState {
        phi: x0.clone(),
        d: r.clone(),
        r,
        alpha: T::zero(),
        beta: T::zero(),
        n: 0,
    })
}

/// Advances one step. A zero `dᵀAd` or `rᵀr` yields [`CgError::Breakdown`]
/// and leaves `state` untouched.
pub fn cg_step<T: Scalar, A: LinearOperator<T>>(
    state: &CgState<T>,
    a: &A,
) -> Result<CgState<T>, CgError> {
    let CgState { phi, r, d, .. } = state;
    let ad = a.apply(d)?;
    let d_ad = d.t().dot(&ad)?;
    if d_ad == T::zero() {
        return Err(CgError::Breakdown("alpha"));
    }
    let r_r = r.t().dot(r)?;
    if r_r == T::zero() {
        return Err(CgError::Breakdown("beta"));
    }
    let alpha = d.t().dot(r)? / d_ad;
    let phi_next = phi.add_scaled(alpha, d)?;
    let r_next = r.add_scaled(-alpha, &ad)?;
    let beta = r_next.t().dot(&r_next)? / r_r;
    let d_next = r_next.add_scaled(beta, d)?;
    Ok(CgState {
        phi: phi_next,
        r: r_next,
        d: d_next,
        alpha,
        beta,
        n: state.n + 1,
    })
}

pub fn cg_solve<T: Scalar, A: LinearOperator<T>>(
    a: &A,
    b: &Vector<T>,
    config: &CgConfig<T>,
) -> Result<CgResult<T>, CgError> {
    cg_solve_with(a, b, config, |_| {})
}

/// Like [`cg_solve`], calling `observe` with the initial state and after
/// every completed step.
pub fn cg_solve_with<T: Scalar, A: LinearOperator<T>>(
    a: &A,
    b: &Vector<T>,
    config: &CgConfig<T>,
    mut observe: impl FnMut(&CgState<T>),
) -> Result<CgResult<T>, CgError> {
    let zeros;
    let x0 = match &config.initial_guess {
        Some(x0) => x0,
        None => {
            zeros = Vector::zeros(b.len());
            &zeros
        }
    };
    let mut state = cg_init(a, b, x0)?;
    observe(&state);
    let mut residual = state.r.l2_norm();
    let mut breakdown = false;
    while (residual.is_nan() || residual > config.tolerance) && state.n < config.max_iterations {
        match cg_step(&state, a) {
            Ok(next) => state = next,
            Err(CgError::Breakdown(_)) => {
                breakdown = true;
                break;
            }
            Err(e) => return Err(e),
        }
        observe(&state);
        residual = state.r.l2_norm();
    }
    Ok(CgResult {
        iterations: state.n,
        residual_norm: residual,
        converged: residual <= config.tolerance,
        breakdown,
        solution: state.phi,
    })
}
