//! Parameter sweeps and reruns of the standard configurations.
//!
//! Every grid point is an independent solve, so all of these fan out through
//! [`Execution`]. Failures are recorded per point and never abort a run.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gas::{solve, GasProblem, PROFILE_SAMPLE_X};
use crate::kernels::{KernelFamily, ScaledKernel};
use crate::par::Execution;
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepAxis {
    /// Support radius `r_ω`.
    Rw,
    /// Grading exponent `ϱ`.
    Rho,
    /// Node count `N`.
    N,
}

impl SweepAxis {
    pub fn apply(self, problem: &GasProblem, value: f64) -> Result<GasProblem> {
        let p = problem.clone();
        let p = match self {
            Self::Rw => p.with_kernel(problem.kernel.with_r_omega(value)?),
            Self::Rho => p.with_rho(value),
            Self::N => {
                if value.fract() != 0.0 || value < 0.0 {
                    return Err(crate::Error::Config(format!(
                        "node count must be a whole number, got {value}"
                    )));
                }
                p.with_n(value as usize)
            }
        };
        p.validate()?;
        Ok(p)
    }
}

/// Quantities that need a converged solve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvedPoint {
    pub res_norm_sq: f64,
    pub y_prime_0: Option<f64>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub condition_number: Option<f64>,
    pub zero_percent: Option<f64>,
    /// Error message when the configuration is invalid or the solve failed.
    pub solve: std::result::Result<SolvedPoint, String>,
}

impl SweepRow {
    pub fn converged(&self) -> bool {
        self.solve.is_ok()
    }
}

fn solve_point(problem: &GasProblem) -> Result<SolvedPoint> {
    let sol = solve(problem)?;
    let y_prime_0 = if problem.alpha > 0.0 {
        Some(sol.initial_slope()?)
    } else {
        None
    };
    Ok(SolvedPoint {
        res_norm_sq: sol.residual_norm_sq()?,
        y_prime_0,
        iterations: sol.iterations(),
    })
}

fn sweep_point(problem: &GasProblem, axis: SweepAxis, value: f64) -> SweepRow {
    match axis.apply(problem, value) {
        Ok(p) => {
            let a = p.diagnostic_matrix();
            SweepRow {
                value,
                condition_number: Some(a.condition_number_2()),
                zero_percent: Some(a.zero_percentage()),
                solve: solve_point(&p).map_err(|e| e.to_string()),
            }
        }
        Err(e) => SweepRow {
            value,
            condition_number: None,
            zero_percent: None,
            solve: Err(e.to_string()),
        },
    }
}

/// One solve per grid value along `axis`; rows follow grid order.
pub fn sweep(
    problem: &GasProblem,
    axis: SweepAxis,
    grid: &[f64],
    exec: Execution,
) -> Vec<SweepRow> {
    exec.map(grid, |&v| sweep_point(problem, axis, v))
}

pub fn sweep_support_radius(problem: &GasProblem, r_list: &[f64]) -> Vec<SweepRow> {
    sweep(problem, SweepAxis::Rw, r_list, Execution::default())
}

/// The four standard kernels at their tuned radii.
pub fn standard_kernels() -> Vec<ScaledKernel> {
    reference::STANDARD_KERNELS
        .iter()
        .map(|(name, rw)| {
            let fam: KernelFamily = name.parse().expect("standard kernel names parse");
            ScaledKernel::new(fam, *rw).expect("standard radii are positive")
        })
        .collect()
}

/// Profiles and residual norms for each standard kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileTable {
    pub x: Vec<f64>,
    pub columns: Vec<ProfileColumn>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileColumn {
    pub kernel: ScaledKernel,
    pub result: std::result::Result<ProfileValues, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileValues {
    pub y: Vec<f64>,
    pub y_prime_0: f64,
    pub res_norm_sq: f64,
}

fn profile_values(problem: &GasProblem) -> Result<ProfileValues> {
    let sol = solve(problem)?;
    let y = PROFILE_SAMPLE_X
        .iter()
        .map(|&x| sol.reconstruct_y(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProfileValues {
        y,
        y_prime_0: sol.initial_slope()?,
        res_norm_sq: sol.residual_norm_sq()?,
    })
}

/// Standard configuration (`α = 0.5`, `N = 30`) for each standard kernel.
pub fn profile_table(base: &GasProblem, exec: Execution) -> ProfileTable {
    let kernels = standard_kernels();
    let columns = exec.map(&kernels, |k| ProfileColumn {
        kernel: *k,
        result: profile_values(&base.clone().with_kernel(*k)).map_err(|e| e.to_string()),
    });
    ProfileTable {
        x: PROFILE_SAMPLE_X.to_vec(),
        columns,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeCell {
    pub alpha: f64,
    pub kernel: ScaledKernel,
    pub n: usize,
    pub y_prime_0: std::result::Result<f64, String>,
    pub reference: f64,
}

/// `y'(0)` over every `(α, kernel, N)` of the published slope table.
pub fn slope_table(base: &GasProblem, exec: Execution) -> Vec<SlopeCell> {
    let kernels = standard_kernels();
    let mut cells = Vec::new();
    for (ai, &alpha) in reference::SLOPE_ALPHAS.iter().enumerate() {
        for (ki, k) in kernels.iter().enumerate() {
            for (ni, &n) in reference::SLOPE_NS.iter().enumerate() {
                cells.push((alpha, *k, n, reference::INITIAL_SLOPE_BY_ALPHA[ai][ki][ni]));
            }
        }
    }
    exec.map(&cells, |&(alpha, kernel, n, reference)| {
        let p = base.clone().with_alpha(alpha).with_kernel(kernel).with_n(n);
        let y_prime_0 = solve(&p)
            .and_then(|s| s.initial_slope())
            .map_err(|e| e.to_string());
        SlopeCell {
            alpha,
            kernel,
            n,
            y_prime_0,
            reference,
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticRow {
    pub r_omega: f64,
    pub zero_percent: f64,
    /// One entry per standard kernel.
    pub condition_numbers: Vec<f64>,
}

/// Sparsity and conditioning of the diagnostic matrix at each radius.
pub fn diagnostic_table(base: &GasProblem, radii: &[f64], exec: Execution) -> Result<Vec<DiagnosticRow>> {
    let kernels = standard_kernels();
    let rows = exec.map(radii, |&rw| -> Result<DiagnosticRow> {
        let mut zero_percent = 0.0;
        let mut condition_numbers = Vec::with_capacity(kernels.len());
        for (i, k) in kernels.iter().enumerate() {
            let a = base.clone().with_kernel(k.with_r_omega(rw)?).diagnostic_matrix();
            if i == 0 {
                zero_percent = a.zero_percentage();
            }
            condition_numbers.push(a.condition_number_2());
        }
        Ok(DiagnosticRow {
            r_omega: rw,
            zero_percent,
            condition_numbers,
        })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> GasProblem {
        GasProblem::new(standard_kernels()[0])
    }

    #[test]
    fn singleton_sweep() {
        let rows = sweep_support_radius(&base(), &[2.5]);
        assert_eq!(rows.len(), 1);
        assert!(rows[0].converged());
    }

    #[test]
    fn invalid_grid_point_is_recorded_not_fatal() {
        let rows = sweep(&base(), SweepAxis::Rw, &[-1.0, 2.5], Execution::Sequential);
        assert!(rows[0].solve.is_err());
        assert!(rows[0].condition_number.is_none());
        assert!(rows[1].converged());
        let rows = sweep(&base(), SweepAxis::N, &[2.5], Execution::Sequential);
        assert!(rows[0].solve.is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let grid = [2.0, 2.5, 3.0];
        let a = sweep(&base(), SweepAxis::Rw, &grid, Execution::Sequential);
        let b = sweep(&base(), SweepAxis::Rw, &grid, Execution::Parallel);
        assert_eq!(a, b);
    }
}
