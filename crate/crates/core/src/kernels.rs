//! Compactly supported radial kernels.
//!
//! Every kernel is supported on `r ∈ [0, 1)` and is exactly zero for `r >= 1`.
//! Polynomial families are stored as `(1 - r)^e · p(r)` with the coefficients of
//! `p` taken verbatim from the standard tables (Wendland with `s = 3`, Wu with
//! `l = 3`, the oscillatory family and Buhmann's four functions). The tables only
//! fix each function up to a positive constant; the printed coefficients are the
//! normalization used here, so interpolated values depend on it but condition
//! numbers and solved profiles do not.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::piecewise_rule;

/// Which closed-form CSRBF to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum KernelFamily {
    /// Wendland `φ_{s,k}`; only `s = 3`, `k ∈ 0..=5`.
    Wendland { s: u8, k: u8 },
    /// Wu `φ_{k,l}`; only `l = 3`, `k ∈ 0..=3`.
    Wu { k: u8, l: u8 },
    /// Oscillatory `φ_k`, `k ∈ 1..=3`.
    Oscillatory { k: u8 },
    /// Buhmann `φ_n`, `n ∈ 1..=4`.
    Buhmann { n: u8 },
}

/// `(exponent, ascending coefficients)` for `(1 - r)^e · p(r)`.
type TruncatedPower = (i32, &'static [f64]);

const WENDLAND: [TruncatedPower; 6] = [
    (2, &[1.0]),
    (4, &[1.0, 4.0]),
    (6, &[3.0, 18.0, 35.0]),
    (8, &[1.0, 8.0, 25.0, 32.0]),
    (10, &[5.0, 50.0, 210.0, 450.0, 429.0]),
    (12, &[9.0, 108.0, 566.0, 1644.0, 2697.0, 2048.0]),
];

const WU: [TruncatedPower; 4] = [
    (7, &[5.0, 35.0, 101.0, 147.0, 101.0, 35.0, 5.0]),
    (6, &[6.0, 36.0, 82.0, 72.0, 30.0, 5.0]),
    (5, &[8.0, 40.0, 48.0, 35.0, 5.0]),
    (4, &[16.0, 29.0, 20.0, 5.0]),
];

const OSCILLATORY: [TruncatedPower; 3] = [
    (4, &[1.0, 4.0, -15.0]),
    (6, &[3.0, 18.0, 3.0, -192.0]),
    (8, &[15.0, 120.0, 210.0, -840.0, -3465.0]),
];

impl KernelFamily {
    pub fn wendland(s: u8, k: u8) -> Result<Self> {
        Self::Wendland { s, k }.validated()
    }

    pub fn wu(k: u8, l: u8) -> Result<Self> {
        Self::Wu { k, l }.validated()
    }

    pub fn oscillatory(k: u8) -> Result<Self> {
        Self::Oscillatory { k }.validated()
    }

    pub fn buhmann(n: u8) -> Result<Self> {
        Self::Buhmann { n }.validated()
    }

    /// Checks the parameters against the tabulated range.
    pub fn validated(self) -> Result<Self> {
        let ok = match self {
            Self::Wendland { s, k } => s == 3 && k <= 5,
            Self::Wu { k, l } => l == 3 && k <= 3,
            Self::Oscillatory { k } => (1..=3).contains(&k),
            Self::Buhmann { n } => (1..=4).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Config(format!("unsupported kernel parameters: {self:?}")))
        }
    }

    /// Every family the tables define, in table order.
    pub fn all() -> Vec<Self> {
        let mut out: Vec<Self> = (0..=5).map(|k| Self::Wendland { s: 3, k }).collect();
        out.extend((0..=3).map(|k| Self::Wu { k, l: 3 }));
        out.extend((1..=3).map(|k| Self::Oscillatory { k }));
        out.extend((1..=4).map(|n| Self::Buhmann { n }));
        out
    }

    /// Listed smoothness class `C^k` of the closed form.
    pub fn smoothness(self) -> u8 {
        match self {
            Self::Wendland { k, .. } => 2 * k,
            Self::Wu { k, .. } => 6 - 2 * k,
            Self::Oscillatory { k } => 2 * k,
            Self::Buhmann { n } => match n {
                1 | 2 => 2,
                3 => 3,
                _ => 4,
            },
        }
    }

    /// Whether the family is strictly positive definite in one dimension.
    pub fn is_positive_definite(self) -> bool {
        !matches!(self, Self::Buhmann { .. })
    }

    /// Polynomial families are analytic on each side of the center; Buhmann
    /// forms carry `ln r` or fractional powers there.
    pub fn is_smooth_at_origin(self) -> bool {
        !matches!(self, Self::Buhmann { .. })
    }

    fn truncated_power(self) -> Option<TruncatedPower> {
        match self {
            Self::Wendland { k, .. } => Some(WENDLAND[k as usize]),
            Self::Wu { k, .. } => Some(WU[k as usize]),
            Self::Oscillatory { k } => Some(OSCILLATORY[k as usize - 1]),
            Self::Buhmann { .. } => None,
        }
    }
}

impl fmt::Display for KernelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Wendland { s, k } => write!(f, "wendland:{s},{k}"),
            Self::Wu { k, l } => write!(f, "wu:{k},{l}"),
            Self::Oscillatory { k } => write!(f, "osc:{k}"),
            Self::Buhmann { n } => write!(f, "buhmann:{n}"),
        }
    }
}

impl FromStr for KernelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse kernel '{s}'"));
        let (name, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let params: Vec<u8> = params
            .split(',')
            .map(|p| p.trim().parse::<u8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let family = match (name.to_ascii_lowercase().as_str(), params.as_slice()) {
            ("wendland", &[s, k]) => Self::Wendland { s, k },
            ("wu", &[k, l]) => Self::Wu { k, l },
            ("osc" | "oscillatory", &[k]) => Self::Oscillatory { k },
            ("buhmann", &[n]) => Self::Buhmann { n },
            _ => return Err(bad()),
        };
        family.validated()
    }
}

impl TryFrom<String> for KernelFamily {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<KernelFamily> for String {
    fn from(k: KernelFamily) -> Self {
        k.to_string()
    }
}

fn horner(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c)
}

fn horner_derivative(coeffs: &[f64], r: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(0.0, |acc, (i, &c)| acc * r + i as f64 * c)
}

/// `r^4 ln r`, extended by its limit 0 at the origin.
fn r4_log(r: f64) -> f64 {
    if r == 0.0 {
        0.0
    } else {
        r.powi(4) * r.ln()
    }
}

/// `r^3 ln r`, extended by its limit 0 at the origin.
fn r3_log(r: f64) -> f64 {
    if r == 0.0 {
        0.0
    } else {
        r.powi(3) * r.ln()
    }
}

fn buhmann_value(n: u8, r: f64) -> f64 {
    let r2 = r * r;
    let r4 = r2 * r2;
    match n {
        1 => 12.0 * r4_log(r) - 21.0 * r4 + 32.0 * r2 * r - 12.0 * r2 + 1.0,
        2 => 2.0 * r4_log(r) - 3.5 * r4 + 16.0 / 3.0 * r2 * r - 2.0 * r2 + 1.0 / 6.0,
        3 => {
            r4 * r4 - 84.0 / 5.0 * r4 * r2 + 1024.0 / 5.0 * r.powf(4.5) - 378.0 * r4
                + 1024.0 / 5.0 * r.powf(3.5)
                - 84.0 / 5.0 * r2
                + 1.0
        }
        _ => {
            99.0 / 35.0 * r4 * r4 - 132.0 * r4 * r2 + 9216.0 / 35.0 * r.powf(5.5)
                - 11264.0 / 35.0 * r.powf(4.5)
                + 198.0 * r4
                - 396.0 / 35.0 * r2
                + 1.0
        }
    }
}

fn buhmann_derivative(n: u8, r: f64) -> f64 {
    let r2 = r * r;
    let r3 = r2 * r;
    match n {
        1 => 48.0 * r3_log(r) - 72.0 * r3 + 96.0 * r2 - 24.0 * r,
        2 => 8.0 * r3_log(r) - 12.0 * r3 + 16.0 * r2 - 4.0 * r,
        3 => {
            8.0 * r3 * r2 * r2 - 504.0 / 5.0 * r3 * r2 + 4608.0 / 5.0 * r.powf(3.5)
                - 1512.0 * r3
                + 3584.0 / 5.0 * r.powf(2.5)
                - 168.0 / 5.0 * r
        }
        _ => {
            792.0 / 35.0 * r3 * r2 * r2 - 792.0 * r3 * r2 + 50688.0 / 35.0 * r.powf(4.5)
                - 50688.0 / 35.0 * r.powf(3.5)
                + 792.0 * r3
                - 792.0 / 35.0 * r
        }
    }
}

/// Value of the unscaled kernel at radius `r`; exactly zero for `r >= 1`.
pub fn eval_phi(family: KernelFamily, r: f64) -> f64 {
    let r = r.abs();
    if r >= 1.0 {
        return 0.0;
    }
    match family.truncated_power() {
        Some((e, coeffs)) => (1.0 - r).powi(e) * horner(coeffs, r),
        None => match family {
            KernelFamily::Buhmann { n } => buhmann_value(n, r),
            _ => unreachable!(),
        },
    }
}

/// Radial derivative `dφ/dr`; zero for `r >= 1` and `φ'(0)` taken as its limit.
///
/// Every tabulated form has a vanishing left derivative at the support edge, so
/// the one-sided value at `r = 1` is also zero.
pub fn eval_phi_prime(family: KernelFamily, r: f64) -> f64 {
    let r = r.abs();
    if r >= 1.0 {
        return 0.0;
    }
    match family.truncated_power() {
        Some((e, coeffs)) => {
            let base = 1.0 - r;
            let ef = e as f64;
            -ef * base.powi(e - 1) * horner(coeffs, r)
                + base.powi(e) * horner_derivative(coeffs, r)
        }
        None => match family {
            KernelFamily::Buhmann { n } => buhmann_derivative(n, r),
            _ => unreachable!(),
        },
    }
}

/// A kernel family together with its support radius `r_ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledKernel {
    family: KernelFamily,
    r_omega: f64,
}

impl ScaledKernel {
    pub fn new(family: KernelFamily, r_omega: f64) -> Result<Self> {
        if !(r_omega.is_finite() && r_omega > 0.0) {
            return Err(Error::Config(format!(
                "support radius must be positive, got {r_omega}"
            )));
        }
        Ok(Self {
            family: family.validated()?,
            r_omega,
        })
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    pub fn r_omega(&self) -> f64 {
        self.r_omega
    }

    pub fn with_r_omega(&self, r_omega: f64) -> Result<Self> {
        Self::new(self.family, r_omega)
    }

    /// `φ(|x - center| / r_ω)`.
    #[inline]
    pub fn value(&self, x: f64, center: f64) -> f64 {
        eval_phi(self.family, (x - center).abs() / self.r_omega)
    }

    /// `d/dx φ(|x - center| / r_ω)`, zero at `x = center`.
    #[inline]
    pub fn dx(&self, x: f64, center: f64) -> f64 {
        let d = x - center;
        if d == 0.0 {
            return 0.0;
        }
        eval_phi_prime(self.family, d.abs() / self.r_omega) * d.signum() / self.r_omega
    }

    /// `∫_0^{x_upper} φ(|t - center| / r_ω) dt`.
    ///
    /// The interval is split at the kink `t = center` and at the support edges
    /// `center ± r_ω`; each smooth piece inside the support gets the fixed
    /// 16-point Gauss-Legendre rule.
    pub fn antiderivative(&self, center: f64, x_upper: f64) -> f64 {
        if x_upper <= 0.0 {
            return 0.0;
        }
        let lo = center - self.r_omega;
        let hi = center + self.r_omega;
        let mut breaks = [0.0, lo, center, hi, x_upper];
        for b in &mut breaks[1..4] {
            *b = b.clamp(0.0, x_upper);
        }
        let rule = piecewise_rule();
        let graded = !self.family.is_smooth_at_origin();
        breaks
            .windows(2)
            .filter(|w| w[1] > w[0] && w[1] > lo && w[0] < hi)
            .map(|w| {
                let f = |t| self.value(t, center);
                if graded {
                    graded_integral(w[0], w[1], center, f)
                } else {
                    rule.integrate(w[0], w[1], f)
                }
            })
            .sum()
    }
}

/// Dyadic levels used when grading a piece toward a weak singularity.
const GRADING_LEVELS: usize = 24;

/// Integrates over `[a, b]` with cells shrinking geometrically toward whichever
/// endpoint is closer to `center`, where the Buhmann forms have `r^4 ln r` and
/// half-integer power terms.
fn graded_integral<F: Fn(f64) -> f64>(a: f64, b: f64, center: f64, f: F) -> f64 {
    let rule = piecewise_rule();
    let (near, far) = if (a - center).abs() <= (b - center).abs() {
        (a, b)
    } else {
        (b, a)
    };
    let mut total = 0.0;
    let mut outer = far;
    for level in 1..=GRADING_LEVELS {
        let inner = near + (far - near) * 0.5f64.powi(level as i32);
        total += rule.integrate(inner.min(outer), inner.max(outer), &f);
        outer = inner;
    }
    total + rule.integrate(near.min(outer), near.max(outer), &f)
}

/// Free-function form of [`ScaledKernel::value`].
pub fn kernel_value(kernel: &ScaledKernel, x: f64, center: f64) -> f64 {
    kernel.value(x, center)
}

/// Free-function form of [`ScaledKernel::dx`].
pub fn kernel_dx(kernel: &ScaledKernel, x: f64, center: f64) -> f64 {
    kernel.dx(x, center)
}

/// Free-function form of [`ScaledKernel::antiderivative`].
pub fn kernel_antiderivative(kernel: &ScaledKernel, center: f64, x_upper: f64) -> f64 {
    kernel.antiderivative(center, x_upper)
}
