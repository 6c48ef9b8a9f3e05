//! Finite-volume discretization of the steady 1D heat equation
//! `Γ d²T/dx² = 0` on `0 < x < L` with Dirichlet values `T_L`, `T_R`.
//!
//! Cells are uniform with centers at `xᵢ = iΔx + Δx/2`. Interior rows read
//! `−a_W T_W + a_P T_P − a_E T_E = 0`. The half-cell distance to a boundary
//! face enters through the source pair `s_P = −2Γ/Δx`, `s_U = 2Γ/Δx`: the
//! boundary diagonal becomes `a_P − s_P − a_W` and the right-hand side
//! `s_U · T_boundary`. The assembled matrix is symmetric positive definite.

use crate::cg::{cg_solve, CgConfig, CgResult};
use crate::error::HeatError;
use crate::linalg::{CrsMatrix, DenseMatrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatProblem<T> {
    gamma: T,
    domain_length: T,
    number_of_cells: usize,
    boundary_left: T,
    boundary_right: T,
}

impl<T: Scalar> HeatProblem<T> {
    pub fn new(
        gamma: T,
        domain_length: T,
        number_of_cells: usize,
        boundary_left: T,
        boundary_right: T,
    ) -> Result<Self, HeatError> {
        let as_f64 = |v: T| v.to_f64().unwrap_or(f64::NAN);
        if !(gamma.is_finite() && gamma > T::zero()) {
            return Err(HeatError::BadGamma(as_f64(gamma)));
        }
        if !(domain_length.is_finite() && domain_length > T::zero()) {
            return Err(HeatError::BadLength(as_f64(domain_length)));
        }
        if number_of_cells == 0 {
            return Err(HeatError::NoCells);
        }
        if !(boundary_left.is_finite() && boundary_right.is_finite()) {
            return Err(HeatError::BadBoundary);
        }
        Ok(Self {
            gamma,
            domain_length,
            number_of_cells,
            boundary_left,
            boundary_right,
        })
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn domain_length(&self) -> T {
        self.domain_length
    }

    pub fn number_of_cells(&self) -> usize {
        self.number_of_cells
    }

    pub fn boundary_left(&self) -> T {
        self.boundary_left
    }

    pub fn boundary_right(&self) -> T {
        self.boundary_right
    }

    pub fn dx(&self) -> T {
        self.domain_length / T::from_count(self.number_of_cells)
    }
}

impl Default for HeatProblem<f64> {
    /// Γ = 1, L = 1, N = 100, T_L = 0, T_R = 1.
    fn default() -> Self {
        Self::new(1.0, 1.0, 100, 0.0, 1.0).expect("valid defaults")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilCoefficients<T> {
    pub dx: T,
    pub a_w: T,
    pub a_e: T,
    pub a_p: T,
    pub s_p: T,
    pub s_u: T,
}

pub fn stencil_coefficients<T: Scalar>(p: &HeatProblem<T>) -> StencilCoefficients<T> {
    let dx = p.dx();
    let two = T::lit(2.0);
    let a_e = p.gamma / dx;
    let a_w = p.gamma / dx;
    StencilCoefficients {
        dx,
        a_w,
        a_e,
        a_p: a_e + a_w,
        s_p: -two * p.gamma / dx,
        s_u: two * p.gamma / dx,
    }
}

pub fn cell_centers<T: Scalar>(p: &HeatProblem<T>) -> Vector<T> {
    let dx = p.dx();
    let half = dx / T::lit(2.0);
    (0..p.number_of_cells)
        .map(|i| T::from_count(i) * dx + half)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssembledSystem<T> {
    pub matrix: DenseMatrix<T>,
    pub rhs: Vector<T>,
    pub cell_centers: Vector<T>,
}

/// Dense tridiagonal assembly. For a single cell both boundary corrections
/// land on the same diagonal entry and are summed.
pub fn assemble<T: Scalar>(p: &HeatProblem<T>) -> AssembledSystem<T> {
    let n = p.number_of_cells;
    let c = stencil_coefficients(p);
    let mut matrix = DenseMatrix::zeros(n, n);
    for i in 0..n {
        matrix[(i, i)] = c.a_p;
    }
    matrix[(0, 0)] += -c.s_p - c.a_w;
    matrix[(n - 1, n - 1)] += -c.s_p - c.a_e;
    for i in 0..n - 1 {
        matrix[(i, i + 1)] = -c.a_e;
        matrix[(i + 1, i)] = -c.a_w;
    }

    let mut rhs = Vector::zeros(n);
    rhs[0] = c.s_u * p.boundary_left;
    if n == 1 {
        rhs[0] += c.s_u * p.boundary_right;
    } else {
        rhs[n - 1] = c.s_u * p.boundary_right;
    }

    AssembledSystem {
        matrix,
        rhs,
        cell_centers: cell_centers(p),
    }
}

/// The exact continuous solution `T(x) = T_L + (T_R − T_L)·x/L` at the cell centers.
pub fn analytic_solution<T: Scalar>(p: &HeatProblem<T>) -> Vector<T> {
    let slope = (p.boundary_right - p.boundary_left) / p.domain_length;
    cell_centers(p)
        .iter()
        .map(|&x| p.boundary_left + slope * x)
        .collect()
}

/// Matrix storage used for the CG solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Storage {
    #[default]
    Dense,
    Crs,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeatSolution<T> {
    pub temperature: Vector<T>,
    pub cell_centers: Vector<T>,
    pub cg: CgResult<T>,
    pub l2_error_vs_analytic: T,
}

pub fn solve_heat<T: Scalar>(
    p: &HeatProblem<T>,
    cfg: &CgConfig<T>,
) -> Result<HeatSolution<T>, HeatError> {
    solve_heat_with(p, cfg, Storage::Dense)
}

pub fn solve_heat_with<T: Scalar>(
    p: &HeatProblem<T>,
    cfg: &CgConfig<T>,
    storage: Storage,
) -> Result<HeatSolution<T>, HeatError> {
    let system = assemble(p);
    let cg = match storage {
        Storage::Dense => cg_solve(&system.matrix, &system.rhs, cfg)?,
        Storage::Crs => cg_solve(&CrsMatrix::from_dense(&system.matrix), &system.rhs, cfg)?,
    };
    let temperature = cg.solution.clone();
    let l2_error_vs_analytic = temperature
        .try_sub(&analytic_solution(p))
        .map_err(crate::error::CgError::from)?
        .l2_norm();
    Ok(HeatSolution {
        temperature,
        cell_centers: system.cell_centers,
        cg,
        l2_error_vs_analytic,
    })
}
