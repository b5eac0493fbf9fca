//! Scattered-data interpolation with a pure CSRBF expansion
//! `y_n(x) = Σ ξ_i φ(|x - x_i| / r_ω)` (no polynomial augmentation).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::ScaledKernel;
use crate::matrix::DenseMatrix;

/// Strictly increasing node locations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct CenterSet(Vec<f64>);

impl CenterSet {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::Config("centers must be finite".into()));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config(
                "centers must be strictly increasing and distinct".into(),
            ));
        }
        Ok(Self(points))
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for CenterSet {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CenterSet> for Vec<f64> {
    fn from(c: CenterSet) -> Self {
        c.0
    }
}

/// `A[j][i] = φ(|x_j - x_i| / r_ω)`.
pub fn build_matrix(centers: &CenterSet, kernel: &ScaledKernel) -> DenseMatrix {
    let x = centers.points();
    let mut a = DenseMatrix::zeros(x.len());
    for j in 0..x.len() {
        a[(j, j)] = kernel.value(x[j], x[j]);
        for i in 0..j {
            let v = kernel.value(x[j], x[i]);
            a[(j, i)] = v;
            a[(i, j)] = v;
        }
    }
    a
}

/// A fitted expansion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interpolant {
    centers: CenterSet,
    kernel: ScaledKernel,
    xi: Vec<f64>,
}

impl Interpolant {
    pub fn from_parts(centers: CenterSet, kernel: ScaledKernel, xi: Vec<f64>) -> Result<Self> {
        if xi.len() != centers.len() {
            return Err(Error::Dimension {
                expected: centers.len(),
                got: xi.len(),
            });
        }
        Ok(Self {
            centers,
            kernel,
            xi,
        })
    }

    /// Solves `A Ξ = Y` for the coefficients.
    pub fn fit(centers: CenterSet, values: &[f64], kernel: ScaledKernel) -> Result<Self> {
        if values.len() != centers.len() {
            return Err(Error::Dimension {
                expected: centers.len(),
                got: values.len(),
            });
        }
        let a = build_matrix(&centers, &kernel);
        let xi = a.lu_solve(values)?;
        Ok(Self {
            centers,
            kernel,
            xi,
        })
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.centers
            .points()
            .iter()
            .zip(&self.xi)
            .map(|(&c, &xi)| xi * self.kernel.value(x, c))
            .sum()
    }

    pub fn centers(&self) -> &CenterSet {
        &self.centers
    }

    pub fn kernel(&self) -> &ScaledKernel {
        &self.kernel
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.xi
    }
}

pub fn fit(centers: CenterSet, values: &[f64], kernel: ScaledKernel) -> Result<Interpolant> {
    Interpolant::fit(centers, values, kernel)
}

pub fn evaluate(interp: &Interpolant, x: f64) -> f64 {
    interp.evaluate(x)
}
