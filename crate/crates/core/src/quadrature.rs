//! Legendre polynomials and Gauss-Legendre quadrature.
//!
//! Rules are built once and are immutable afterwards, so a single rule can be
//! shared across threads. Interval mapping happens in [`GaussLegendreRule::integrate`];
//! the stored weights are the reference weights on `[-1, 1]`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const NEWTON_TOL: f64 = 1e-14;
const NEWTON_MAX_STEPS: usize = 100;

/// Evaluates `P_degree(s)` and its derivative with the three-term recurrence.
pub fn legendre_eval(degree: usize, s: f64) -> (f64, f64) {
    if degree == 0 {
        return (1.0, 0.0);
    }
    // (p_{k-1}, p_k) and their derivatives
    let (mut p_prev, mut p) = (1.0, s);
    let (mut dp_prev, mut dp) = (0.0, 1.0);
    for k in 1..degree {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * s * p - kf * p_prev) / (kf + 1.0);
        let dp_next = dp_prev + (2.0 * kf + 1.0) * p;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    (p, dp)
}

/// An `(m+1)`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendreRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendreRule {
    /// Builds the rule with `m + 1` nodes, the roots of `P_{m+1}`.
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Config("Gauss-Legendre rule needs m >= 1".into()));
        }
        Self::with_points(m + 1)
    }

    /// Builds the rule with exactly `count` nodes.
    pub fn with_points(count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::Config(format!(
                "Gauss-Legendre rule needs at least 2 points, got {count}"
            )));
        }
        let n = count;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            // Chebyshev node as the starting guess, largest root first.
            let mut s = ((2 * i + 1) as f64 * PI / (2 * n) as f64).cos();
            let mut converged = false;
            for _ in 0..NEWTON_MAX_STEPS {
                let (p, dp) = legendre_eval(n, s);
                let delta = p / dp;
                s -= delta;
                if delta.abs() < NEWTON_TOL {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::Quadrature { order: n, index: i });
            }
            let (_, dp) = legendre_eval(n, s);
            let w = 2.0 / ((1.0 - s * s) * dp * dp);
            // Mirror so the rule is exactly symmetric.
            nodes[n - 1 - i] = s;
            nodes[i] = -s;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates `f` over `[a, b]` through the affine map `t = (b-a)/2 * s + (a+b)/2`.
    pub fn integrate<F>(&self, a: f64, b: f64, mut f: F) -> f64
    where
        F: FnMut(f64) -> f64,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&s, &w)| w * f(half * s + mid))
            .sum();
        half * sum
    }
}

/// Points per smooth piece used by kernel antiderivatives.
pub const PIECEWISE_POINTS: usize = 16;

/// Shared 16-point rule for kernel antiderivatives.
pub fn piecewise_rule() -> &'static GaussLegendreRule {
    static RULE: OnceLock<GaussLegendreRule> = OnceLock::new();
    RULE.get_or_init(|| {
        GaussLegendreRule::with_points(PIECEWISE_POINTS).expect("16-point rule converges")
    })
}
