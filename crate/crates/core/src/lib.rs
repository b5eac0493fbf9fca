//! Compactly supported radial basis function (CSRBF) collocation for nonlinear
//! two-point boundary value problems on truncated semi-infinite domains.
//!
//! The built-in model is the unsteady isothermal gas equation
//! `y'' + 2x / sqrt(1 - α y) · y' = 0`, `y(0) = 1`, `y(∞) = 0`. See [`gas`].
//!
//! ```
//! use csrbf::{gas, KernelFamily, ScaledKernel};
//!
//! let kernel = ScaledKernel::new(KernelFamily::wendland(3, 5)?, 2.5)?;
//! let solution = gas::solve(&gas::GasProblem::new(kernel))?;
//! let slope = solution.initial_slope()?;
//! assert!((slope + 1.1918).abs() < 1e-3);
//! # Ok::<(), csrbf::Error>(())
//! ```

pub mod error;
pub mod experiments;
pub mod gas;
pub mod interpolation;
pub mod kernels;
pub mod matrix;
pub mod par;
pub mod quadrature;
pub mod reference;

pub use error::{Error, Result};
pub use interpolation::{CenterSet, Interpolant};
pub use kernels::{KernelFamily, ScaledKernel};
pub use matrix::DenseMatrix;
pub use par::Execution;
pub use quadrature::GaussLegendreRule;
