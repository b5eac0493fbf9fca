use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

use super::{GasProblem, GasSolution, POSITIVITY_FLOOR};

const MAX_HALVINGS: usize = 30;
const CONTINUATION_STEP: f64 = 0.25;

/// The square nonlinear system `{Res(x_j) = 0, j < N} ∪ {u_n(L∞) = 1}` with the
/// kernel tables it needs precomputed.
///
/// Rows `0..N-1` are the interior collocation points, row `N-1` is the far-field
/// boundary condition. Columns are the kernel centers.
#[derive(Debug, Clone)]
pub struct CollocationSystem {
    alpha: f64,
    x: Vec<f64>,
    /// `∫_0^{x_j} φ_i`
    integral: DenseMatrix,
    /// `φ_i(x_j)`
    value: DenseMatrix,
    /// `φ_i'(x_j)`
    slope: DenseMatrix,
}

/// Residual vector together with `u_n` at every row point.
#[derive(Debug, Clone)]
pub struct SystemState {
    pub residual: Vec<f64>,
    pub u: Vec<f64>,
    pub u_prime: Vec<f64>,
}

impl SystemState {
    pub fn max_norm(&self) -> f64 {
        self.residual.iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    pub fn min_u(&self) -> f64 {
        self.u.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl CollocationSystem {
    pub fn new(problem: &GasProblem) -> Self {
        let centers = problem.centers();
        let rows = problem.collocation_points();
        let k = &problem.kernel;
        let c = centers.points();
        let x = rows.points().to_vec();
        let n = c.len();
        let integral = DenseMatrix::from_fn(n, |j, i| k.antiderivative(c[i], x[j]));
        let value = DenseMatrix::from_fn(n, |j, i| k.value(x[j], c[i]));
        let slope = DenseMatrix::from_fn(n, |j, i| k.dx(x[j], c[i]));
        Self {
            alpha: problem.alpha,
            x,
            integral,
            value,
            slope,
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn set_alpha(&mut self, alpha: f64) {
        self.alpha = alpha;
    }

    /// Evaluates the system. Interior rows with `u_n ≤ 0` produce NaN.
    pub fn evaluate(&self, xi: &[f64]) -> SystemState {
        let n = self.len();
        let shift = 1.0 - self.alpha;
        let u: Vec<f64> = self.integral.mul_vec(xi).iter().map(|v| v + shift).collect();
        let u_prime = self.value.mul_vec(xi);
        let u_second = self.slope.mul_vec(xi);
        let mut residual = Vec::with_capacity(n);
        for j in 0..n - 1 {
            let conv = 2.0 * self.x[j] / u[j].sqrt() * u_prime[j];
            residual.push(u_second[j] + conv);
        }
        residual.push(u[n - 1] - 1.0);
        SystemState {
            residual,
            u,
            u_prime,
        }
    }

    /// Analytic Jacobian `∂F_j / ∂ξ_i` at the given state.
    pub fn jacobian(&self, state: &SystemState) -> DenseMatrix {
        let n = self.len();
        let mut jac = DenseMatrix::zeros(n);
        for j in 0..n - 1 {
            let x = self.x[j];
            let u = state.u[j];
            let a = 2.0 * x / u.sqrt();
            let b = x * state.u_prime[j] / (u * u.sqrt());
            let (slope, value, integral) = (
                self.slope.row(j),
                self.value.row(j),
                self.integral.row(j),
            );
            for (i, out) in jac.row_mut(j).iter_mut().enumerate() {
                *out = slope[i] + a * value[i] - b * integral[i];
            }
        }
        jac.row_mut(n - 1)
            .copy_from_slice(self.integral.row(n - 1));
        jac
    }

    /// Damped Newton from `xi`; returns the iteration count.
    fn newton(&self, xi: &mut [f64], tol: f64, max_iter: usize) -> Result<usize> {
        let mut state = self.evaluate(xi);
        if state.min_u() <= POSITIVITY_FLOOR {
            return Err(self.domain_error(&state));
        }
        for iter in 0..max_iter {
            let norm = state.max_norm();
            if norm <= tol {
                return Ok(iter);
            }
            let jac = self.jacobian(&state);
            let rhs: Vec<f64> = state.residual.iter().map(|r| -r).collect();
            let step = jac.lu_solve(&rhs)?;

            let mut lambda = 1.0;
            let mut accepted = None;
            let mut positivity_failed = false;
            for _ in 0..=MAX_HALVINGS {
                let trial: Vec<f64> = xi.iter().zip(&step).map(|(a, d)| a + lambda * d).collect();
                let trial_state = self.evaluate(&trial);
                if trial_state.min_u() > POSITIVITY_FLOOR {
                    if trial_state.max_norm() <= norm {
                        accepted = Some((trial, trial_state));
                        break;
                    }
                } else {
                    positivity_failed = true;
                }
                lambda *= 0.5;
            }
            match accepted {
                Some((trial, trial_state)) => {
                    xi.copy_from_slice(&trial);
                    state = trial_state;
                }
                None if positivity_failed => {
                    let probe: Vec<f64> = xi.iter().zip(&step).map(|(a, d)| a + d).collect();
                    return Err(self.domain_error(&self.evaluate(&probe)));
                }
                None => {
                    return Err(Error::NoConvergence {
                        iterations: iter + 1,
                        residual: norm,
                    })
                }
            }
        }
        let norm = state.max_norm();
        if norm <= tol {
            Ok(max_iter)
        } else {
            Err(Error::NoConvergence {
                iterations: max_iter,
                residual: norm,
            })
        }
    }

    fn domain_error(&self, state: &SystemState) -> Error {
        let (j, &value) = state
            .u
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty system");
        Error::Domain { x: self.x[j], value }
    }
}

/// Solves the collocation system by damped Newton from a flat start `Ξ = 0`.
///
/// If the direct solve fails, `α` is raised in steps of 0.25 from a small
/// value, warm-starting each stage from the previous coefficients.
pub fn solve(problem: &GasProblem) -> Result<GasSolution> {
    problem.validate()?;
    let mut system = CollocationSystem::new(problem);
    let mut xi = vec![0.0; system.len()];
    let tol = problem.newton_tol;
    let max_iter = problem.newton_max_iter;

    let direct = system.newton(&mut xi, tol, max_iter);
    let iterations = match direct {
        Ok(it) => it,
        Err(first) if problem.alpha > CONTINUATION_STEP => {
            xi.iter_mut().for_each(|v| *v = 0.0);
            let mut total = 0;
            let mut stage = CONTINUATION_STEP;
            loop {
                let a = stage.min(problem.alpha);
                system.set_alpha(a);
                match system.newton(&mut xi, tol, max_iter) {
                    Ok(it) => total += it,
                    Err(_) => return Err(first),
                }
                if a >= problem.alpha {
                    break total;
                }
                stage += CONTINUATION_STEP;
            }
        }
        Err(e) => return Err(e),
    };
    Ok(GasSolution::new(problem.clone(), xi, iterations))
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
    fn flat_start_is_exact_for_zero_alpha() {
        let sol = solve(&problem(0.0)).unwrap();
        assert_eq!(sol.iterations(), 0);
        assert!(sol.coefficients().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn jacobian_matches_forward_differences() {
        let p = problem(0.5);
        let system = CollocationSystem::new(&p);
        // a mid-iteration state: one damped step from the flat start
        let mut xi = vec![0.0; system.len()];
        let s0 = system.evaluate(&xi);
        let step = system
            .jacobian(&s0)
            .lu_solve(&s0.residual.iter().map(|r| -r).collect::<Vec<_>>())
            .unwrap();
        let mut lambda = 1.0;
        while system
            .evaluate(&xi.iter().zip(&step).map(|(a, d)| a + lambda * d).collect::<Vec<_>>())
            .min_u()
            <= 0.1
        {
            lambda *= 0.5;
        }
        for (a, d) in xi.iter_mut().zip(&step) {
            *a += lambda * d;
        }
        let state = system.evaluate(&xi);
        let jac = system.jacobian(&state);
        let h = 1e-7;
        for i in 0..system.len() {
            let mut bumped = xi.clone();
            let hi = h * xi[i].abs().max(1.0);
            bumped[i] += hi;
            let sb = system.evaluate(&bumped);
            for j in 0..system.len() {
                let fd = (sb.residual[j] - state.residual[j]) / hi;
                let an = jac[(j, i)];
                let scale = an.abs().max(1.0);
                assert!((fd - an).abs() <= 1e-4 * scale, "J[{j},{i}] fd={fd} an={an}");
            }
        }
    }

    #[test]
    fn rejects_invalid_problem() {
        assert!(matches!(solve(&problem(2.0)), Err(Error::Config(_))));
    }
}
