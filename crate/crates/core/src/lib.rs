//! Small numerical toolkit: vectors and dense/CRS matrices, a conjugate
//! gradient solver, and a finite-volume solver for the steady 1D heat
//! equation, plus a test-pyramid audit for CSV test-run manifests.
//!
//! Numeric code is generic over [`Scalar`] (`f32`, `f64`); the `*F64`
//! aliases below are what the CLI and most callers use.

pub mod cg;
pub mod cli;
pub mod error;
pub mod heat1d;
pub mod linalg;
pub mod numkit;
pub mod pyramid;
mod scalar;

pub use cg::{cg_init, cg_solve, cg_solve_with, cg_step, CgConfig, CgResult, CgState};
pub use error::{CgError, CompareError, HeatError, LinalgError, PyramidError};
pub use heat1d::{
    analytic_solution, assemble, cell_centers, solve_heat, solve_heat_with, stencil_coefficients,
    AssembledSystem, HeatProblem, HeatSolution, StencilCoefficients, Storage,
};
pub use linalg::{CrsMatrix, DenseMatrix, LinearOperator, Orientation, Vector};
pub use numkit::{approx_eq, approx_eq_in, ComplexNumber, FloatCompareSpec, Precision};
pub use pyramid::{
    parse_manifest, pyramid_report, render_report, write_manifest, Layer, PyramidReport, Status,
    TestRecord,
};
pub use scalar::Scalar;

pub type VectorF64 = Vector<f64>;
pub type VectorF32 = Vector<f32>;
pub type DenseMatrixF64 = DenseMatrix<f64>;
pub type DenseMatrixF32 = DenseMatrix<f32>;
pub type CrsMatrixF64 = CrsMatrix<f64>;
pub type CrsMatrixF32 = CrsMatrix<f32>;
pub type CgConfigF64 = CgConfig<f64>;
pub type CgResultF64 = CgResult<f64>;
pub type HeatProblemF64 = HeatProblem<f64>;
pub type HeatSolutionF64 = HeatSolution<f64>;
