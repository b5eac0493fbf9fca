use crate::error::{Error, Result};
use crate::interpolation::CenterSet;
use crate::quadrature::GaussLegendreRule;

use super::{GasProblem, SolutionReport, PROFILE_SAMPLE_X};

/// Converged coefficients and the evaluators built on them.
#[derive(Debug, Clone, PartialEq)]
pub struct GasSolution {
    problem: GasProblem,
    xi: Vec<f64>,
    centers: CenterSet,
    grid: CenterSet,
    iterations: usize,
    converged: bool,
}

impl GasSolution {
    pub(crate) fn new(problem: GasProblem, xi: Vec<f64>, iterations: usize) -> Self {
        let centers = problem.centers();
        let grid = problem.collocation_points();
        Self {
            problem,
            xi,
            centers,
            grid,
            iterations,
            converged: true,
        }
    }

    /// Wraps an arbitrary coefficient vector, e.g. to inspect a trial state.
    pub fn from_coefficients(problem: GasProblem, xi: Vec<f64>) -> Result<Self> {
        problem.validate()?;
        if xi.len() != problem.n {
            return Err(Error::Dimension {
                expected: problem.n,
                got: xi.len(),
            });
        }
        let mut sol = Self::new(problem, xi, 0);
        sol.converged = false;
        Ok(sol)
    }

    pub fn problem(&self) -> &GasProblem {
        &self.problem
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.xi
    }

    pub fn centers(&self) -> &CenterSet {
        &self.centers
    }

    pub fn grid(&self) -> &CenterSet {
        &self.grid
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    fn expand<F: Fn(f64) -> f64>(&self, basis: F) -> f64 {
        self.centers
            .points()
            .iter()
            .zip(&self.xi)
            .map(|(&c, &xi)| xi * basis(c))
            .sum()
    }

    /// `u_n(x) = Σ ξ_i ∫_0^x φ_i + (1 - α)`.
    pub fn u_n(&self, x: f64) -> f64 {
        self.integral_part(x) + (1.0 - self.problem.alpha)
    }

    fn integral_part(&self, x: f64) -> f64 {
        let k = &self.problem.kernel;
        self.expand(|c| k.antiderivative(c, x))
    }

    pub fn u_n_prime(&self, x: f64) -> f64 {
        let k = &self.problem.kernel;
        self.expand(|c| k.value(x, c))
    }

    pub fn u_n_second(&self, x: f64) -> f64 {
        let k = &self.problem.kernel;
        self.expand(|c| k.dx(x, c))
    }

    /// `Res(x) = u_n'' + 2x / sqrt(u_n) · u_n'`.
    pub fn residual(&self, x: f64) -> Result<f64> {
        let u = self.u_n(x);
        if !(u > 0.0) {
            return Err(Error::Domain { x, value: u });
        }
        Ok(self.u_n_second(x) + 2.0 * x / u.sqrt() * self.u_n_prime(x))
    }

    /// `y(x) = (1 - u_n(x)) / α`, evaluated as `1 - Σ ξ_i ∫_0^x φ_i / α`.
    pub fn reconstruct_y(&self, x: f64) -> Result<f64> {
        let alpha = self.problem.alpha;
        if alpha == 0.0 {
            return Err(Error::UndefinedReconstruction);
        }
        Ok(1.0 - self.integral_part(x) / alpha)
    }

    /// `y'(0) = -u_n'(0) / α`.
    pub fn initial_slope(&self) -> Result<f64> {
        let alpha = self.problem.alpha;
        if alpha == 0.0 {
            return Err(Error::UndefinedReconstruction);
        }
        Ok(-self.u_n_prime(0.0) / alpha)
    }

    /// `∫_0^{L∞} Res² dx` with an `(m+1)`-point Gauss-Legendre rule.
    pub fn residual_norm_sq(&self) -> Result<f64> {
        let rule = GaussLegendreRule::new(self.problem.quadrature_m)?;
        let mut first_error = None;
        let value = rule.integrate(0.0, self.problem.l_inf, |x| match self.residual(x) {
            Ok(r) => r * r,
            Err(e) => {
                first_error.get_or_insert(e);
                f64::NAN
            }
        });
        match first_error {
            Some(e) => Err(e),
            None => Ok(value),
        }
    }

    /// Solution summary with the profile sampled at [`PROFILE_SAMPLE_X`].
    pub fn report(&self) -> Result<SolutionReport> {
        let p = &self.problem;
        let a = p.diagnostic_matrix();
        let y_defined = p.alpha > 0.0;
        let y_samples = if y_defined {
            PROFILE_SAMPLE_X
                .iter()
                .map(|&x| self.reconstruct_y(x).map(|y| super::Sample { x, y }))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        Ok(SolutionReport {
            kernel: p.kernel.family(),
            r_omega: p.kernel.r_omega(),
            alpha: p.alpha,
            n: p.n,
            rho: p.rho,
            l_inf: p.l_inf,
            y_defined,
            y_samples,
            y_prime_0: if y_defined { Some(self.initial_slope()?) } else { None },
            res_norm_sq: self.residual_norm_sq()?,
            condition_number: a.condition_number_2(),
            zero_percent: a.zero_percentage(),
            iterations: self.iterations,
        })
    }

    /// `(x, y(x))` on `points` evenly spaced nodes over `[0, L∞]`.
    pub fn profile(&self, points: usize) -> Result<Vec<(f64, f64)>> {
        let l = self.problem.l_inf;
        let last = points.saturating_sub(1).max(1) as f64;
        (0..points)
            .map(|i| {
                let x = if i + 1 == points { l } else { l * i as f64 / last };
                self.reconstruct_y(x).map(|y| (x, y))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{KernelFamily, ScaledKernel};

    fn problem(alpha: f64) -> GasProblem {
        let k = ScaledKernel::new(KernelFamily::wendland(3, 5).unwrap(), 2.5).unwrap();
        GasProblem::new(k).with_alpha(alpha)
    }

    #[test]
    fn zero_coefficients_give_flat_profile() {
        let sol = GasSolution::from_coefficients(problem(0.5), vec![0.0; 30]).unwrap();
        for x in [0.0, 0.7, 3.1, 5.0] {
            assert_eq!(sol.u_n(x), 0.5);
            assert_eq!(sol.u_n_prime(x), 0.0);
            assert_eq!(sol.u_n_second(x), 0.0);
            assert_eq!(sol.residual(x).unwrap(), 0.0);
        }
        let flat = GasSolution::from_coefficients(problem(0.0), vec![0.0; 30]).unwrap();
        assert_eq!(flat.residual_norm_sq().unwrap(), 0.0);
    }

    #[test]
    fn origin_condition_holds_for_any_coefficients() {
        let xi: Vec<f64> = (0..30).map(|i| (i as f64 * 0.37).sin()).collect();
        let sol = GasSolution::from_coefficients(problem(0.3), xi).unwrap();
        assert_eq!(sol.u_n(0.0), 1.0 - 0.3);
        assert_eq!(sol.reconstruct_y(0.0).unwrap(), 1.0);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let xi: Vec<f64> = (0..30).map(|i| 0.1 * (i as f64 * 0.71).cos()).collect();
        let sol = GasSolution::from_coefficients(problem(0.5), xi).unwrap();
        let h = 1e-5;
        for x in [0.05, 0.33, 1.27, 2.9, 4.41] {
            let fd1 = (sol.u_n(x + h) - sol.u_n(x - h)) / (2.0 * h);
            assert!((fd1 - sol.u_n_prime(x)).abs() < 1e-6, "x={x}");
            let fd2 = (sol.u_n_prime(x + h) - sol.u_n_prime(x - h)) / (2.0 * h);
            assert!((fd2 - sol.u_n_second(x)).abs() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn residual_rejects_nonpositive_u() {
        let mut xi = vec![0.0; 30];
        xi[0] = -10.0;
        let sol = GasSolution::from_coefficients(problem(0.5), xi).unwrap();
        assert!(matches!(sol.residual(1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn alpha_zero_has_no_reconstruction() {
        let sol = GasSolution::from_coefficients(problem(0.0), vec![0.0; 30]).unwrap();
        assert_eq!(sol.reconstruct_y(1.0), Err(Error::UndefinedReconstruction));
        assert_eq!(sol.initial_slope(), Err(Error::UndefinedReconstruction));
        let report = sol.report().unwrap();
        assert!(!report.y_defined);
        assert!(report.y_samples.is_empty());
        assert_eq!(report.y_prime_0, None);
    }
}
