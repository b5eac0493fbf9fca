use serde::{Deserialize, Serialize};

use crate::kernels::KernelFamily;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub x: f64,
    pub y: f64,
}

/// Summary of one solve, the payload of `csrbf solve`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub kernel: KernelFamily,
    pub r_omega: f64,
    pub alpha: f64,
    pub n: usize,
    pub rho: f64,
    pub l_inf: f64,
    /// False when `α = 0`, where `y` cannot be recovered from `u`.
    pub y_defined: bool,
    pub y_samples: Vec<Sample>,
    pub y_prime_0: Option<f64>,
    pub res_norm_sq: f64,
    pub condition_number: f64,
    pub zero_percent: f64,
    pub iterations: usize,
}
