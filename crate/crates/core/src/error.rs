use thiserror::Error;

/// Errors produced by kernel configuration, linear algebra and the collocation solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("matrix is singular to working precision at pivot {pivot} (|pivot| = {magnitude:e})")]
    Singular { pivot: usize, magnitude: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("Newton iteration did not converge in {iterations} iterations (residual max-norm {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("u_n({x}) = {value:e} is not positive; try a larger support radius or alpha continuation")]
    Domain { x: f64, value: f64 },

    #[error("Gauss-Legendre node {index} of {order}-point rule did not converge")]
    Quadrature { order: usize, index: usize },

    #[error("y(x) is undefined when alpha = 0")]
    UndefinedReconstruction,
}

pub type Result<T> = std::result::Result<T, Error>;
