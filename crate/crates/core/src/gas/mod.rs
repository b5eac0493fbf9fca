//! CSRBF collocation for the unsteady isothermal gas equation
//!
//! ```text
//! y'' + 2x / sqrt(1 - α y) · y' = 0,   y(0) = 1,  y(∞) = 0,   0 ≤ α ≤ 1
//! ```
//!
//! solved through `u = 1 - α y`, which turns the problem into
//! `u'' + 2x / sqrt(u) · u' = 0` with `u(0) = 1 - α` and `u(L∞) = 1`.
//! The derivative `u'` is expanded in the kernel basis, `u` is recovered by
//! integrating from the origin (so `u(0)` holds for every coefficient vector),
//! and the residual is collocated on a graded grid.

mod newton;
mod report;
mod solution;

pub use newton::{solve, CollocationSystem};
pub use report::{Sample, SolutionReport};
pub use solution::GasSolution;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interpolation::{build_matrix, CenterSet};
use crate::kernels::ScaledKernel;
use crate::matrix::DenseMatrix;

/// Sample abscissae for reported profiles.
pub const PROFILE_SAMPLE_X: [f64; 16] = [
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.2, 1.4, 1.8, 2.2, 2.6, 3.0,
];

/// Lower bound on `u_n` at collocation points accepted by the line search.
pub const POSITIVITY_FLOOR: f64 = 1e-12;

/// Problem definition and solver settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GasProblem {
    pub alpha: f64,
    pub l_inf: f64,
    pub n: usize,
    pub rho: f64,
    pub kernel: ScaledKernel,
    pub newton_tol: f64,
    pub newton_max_iter: usize,
    pub quadrature_m: usize,
}

impl GasProblem {
    /// Defaults: `α = 0.5`, `L∞ = 5`, `N = 30`, `ϱ = 1.5`, tolerance `1e-12`,
    /// 50 Newton steps and a 61-point rule for `‖Res‖²`.
    pub fn new(kernel: ScaledKernel) -> Self {
        Self {
            alpha: 0.5,
            l_inf: 5.0,
            n: 30,
            rho: 1.5,
            kernel,
            newton_tol: 1e-12,
            newton_max_iter: 50,
            quadrature_m: 60,
        }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn with_rho(mut self, rho: f64) -> Self {
        self.rho = rho;
        self
    }

    pub fn with_l_inf(mut self, l_inf: f64) -> Self {
        self.l_inf = l_inf;
        self
    }

    pub fn with_kernel(mut self, kernel: ScaledKernel) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn with_quadrature_m(mut self, m: usize) -> Self {
        self.quadrature_m = m;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if !(0.0..=1.0).contains(&self.alpha) {
            return fail(format!("alpha must lie in [0, 1], got {}", self.alpha));
        }
        if !(self.l_inf.is_finite() && self.l_inf > 0.0) {
            return fail(format!("l_inf must be positive, got {}", self.l_inf));
        }
        if self.n < 3 {
            return fail(format!("n must be at least 3, got {}", self.n));
        }
        if !(self.rho.is_finite() && self.rho > 0.0) {
            return fail(format!("rho must be positive, got {}", self.rho));
        }
        if !(self.newton_tol > 0.0) || self.newton_max_iter == 0 {
            return fail("Newton tolerance and iteration cap must be positive".into());
        }
        if self.quadrature_m == 0 {
            return fail("quadrature m must be at least 1".into());
        }
        Ok(())
    }

    pub fn collocation_points(&self) -> CenterSet {
        collocation_points(self.n, self.l_inf, self.rho)
    }

    pub fn centers(&self) -> CenterSet {
        center_points(self.n, self.l_inf, self.rho)
    }

    /// Interpolation matrix on the collocation grid, the matrix whose
    /// conditioning and sparsity are reported.
    pub fn diagnostic_matrix(&self) -> DenseMatrix {
        build_matrix(&self.collocation_points(), &self.kernel)
    }
}

fn graded(j: usize, n: usize, l_inf: f64, rho: f64) -> f64 {
    l_inf * (j as f64 / n as f64).powf(rho)
}

/// `x_j = L∞ (j/N)^ϱ` for `j = 1..N-1`, followed by the boundary node `L∞`.
pub fn collocation_points(n: usize, l_inf: f64, rho: f64) -> CenterSet {
    let mut pts: Vec<f64> = (1..n).map(|j| graded(j, n, l_inf, rho)).collect();
    pts.push(l_inf);
    CenterSet::new(pts).expect("graded grid is strictly increasing")
}

/// Kernel centers `L∞ (j/N)^ϱ` for `j = 0..N-1`; the origin carries a center so
/// the steep slope at the outflow face is resolved.
pub fn center_points(n: usize, l_inf: f64, rho: f64) -> CenterSet {
    let pts: Vec<f64> = (0..n).map(|j| graded(j, n, l_inf, rho)).collect();
    CenterSet::new(pts).expect("graded grid is strictly increasing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::KernelFamily;

    #[test]
    fn collocation_grid_examples() {
        let g = collocation_points(30, 5.0, 1.5);
        assert_eq!(g.len(), 30);
        assert_eq!(*g.points().last().unwrap(), 5.0);
        assert!((g.points()[0] - 5.0 * (1.0f64 / 30.0).powf(1.5)).abs() < 1e-15);
        assert!((g.points()[0] - 0.030_429_0).abs() < 1e-7);

        let u = collocation_points(5, 2.0, 1.0);
        let expected = [0.4, 0.8, 1.2, 1.6, 2.0];
        for (a, b) in u.points().iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn centers_share_the_interior_grid() {
        let c = center_points(30, 5.0, 1.5);
        let x = collocation_points(30, 5.0, 1.5);
        assert_eq!(c.points()[0], 0.0);
        assert_eq!(&c.points()[1..], &x.points()[..29]);
    }

    #[test]
    fn validation() {
        let k = ScaledKernel::new(KernelFamily::wendland(3, 5).unwrap(), 2.5).unwrap();
        assert!(GasProblem::new(k).validate().is_ok());
        assert!(GasProblem::new(k).with_alpha(1.5).validate().is_err());
        assert!(GasProblem::new(k).with_alpha(-0.1).validate().is_err());
        assert!(GasProblem::new(k).with_n(2).validate().is_err());
        assert!(GasProblem::new(k).with_rho(0.0).validate().is_err());
        assert!(GasProblem::new(k).with_l_inf(-1.0).validate().is_err());
        assert!(GasProblem::new(k).with_quadrature_m(0).validate().is_err());
    }
}
