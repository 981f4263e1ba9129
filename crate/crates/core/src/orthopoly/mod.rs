//! Laguerre and Gegenbauer polynomials at large parameter and small degree.
//!
//! Values are produced by the three-term recurrences in scaled `f64` with a
//! running log scale, so `C_m^{(α)}` with `α ~ 10^6` does not overflow.

pub mod gauss;
mod tridiag;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::logspace::{log_factorial, log_gamma, SignedLogReal};

pub use gauss::{gauss_rule, GaussRule, Weight};

/// Degree bound for the polynomials handled here.
pub const MAX_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Laguerre,
    Gegenbauer,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolynomialSpec {
    pub family: Family,
    pub degree: usize,
    pub alpha: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Norm {
    #[default]
    Standard,
    Orthonormal,
}

impl PolynomialSpec {
    pub fn laguerre(degree: usize, alpha: f64) -> Result<Self> {
        let spec = Self {
            family: Family::Laguerre,
            degree,
            alpha,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn gegenbauer(degree: usize, alpha: f64) -> Result<Self> {
        let spec = Self {
            family: Family::Gegenbauer,
            degree,
            alpha,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree > MAX_DEGREE {
            return Err(Error::domain(format!(
                "degree {} exceeds the supported maximum {MAX_DEGREE}",
                self.degree
            )));
        }
        let floor = match self.family {
            Family::Laguerre => -1.0,
            Family::Gegenbauer => -0.5,
        };
        if !(self.alpha > floor) || !self.alpha.is_finite() {
            return Err(Error::domain(format!(
                "{:?} parameter must exceed {floor}, got {}",
                self.family, self.alpha
            )));
        }
        Ok(())
    }
}

/// Runs `p_{k+1} = step(k, p_k, p_{k-1})` from `p_0`, `p_1`, rescaling to keep
/// the pair inside the `f64` range.
#[inline]
fn scaled_recurrence(
    m: usize,
    p0: f64,
    p1: f64,
    step: impl Fn(usize, f64, f64) -> f64,
) -> SignedLogReal {
    if m == 0 {
        return SignedLogReal::from_f64(p0);
    }
    let (mut prev, mut cur, mut scale) = (p0, p1, 0.0);
    for k in 1..m {
        let next = step(k, cur, prev);
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if big > 1e150 || (big < 1e-150 && big > 0.0) {
            let ln_big = libm::log(big);
            prev /= big;
            cur /= big;
            scale += ln_big;
        }
    }
    SignedLogReal::from_f64(cur).scale_exp(scale)
}

pub(crate) fn laguerre_raw(m: usize, alpha: f64, x: f64) -> SignedLogReal {
    scaled_recurrence(m, 1.0, 1.0 + alpha - x, |k, cur, prev| {
        let k = k as f64;
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0)
    })
}

pub(crate) fn gegenbauer_raw(m: usize, alpha: f64, x: f64) -> SignedLogReal {
    scaled_recurrence(m, 1.0, 2.0 * alpha * x, |k, cur, prev| {
        let k = k as f64;
        (2.0 * (k + alpha) * x * cur - (k + 2.0 * alpha - 1.0) * prev) / (k + 1.0)
    })
}

/// `ln` of the factor turning `L_m^{(α)}` orthonormal for `x^α e^{-x}`:
/// `½ ln(m!/Γ(m+α+1))`.
pub fn laguerre_orthonormal_log_factor(m: usize, alpha: f64) -> f64 {
    0.5 * (log_factorial(m as u64) - libm::lgamma_r(m as f64 + alpha + 1.0).0)
}

/// `ln A`, where `A = 1/h_m` and `h_m = ∫ C_m^{(α)}(x)² (1−x²)^{α−½} dx`.
pub fn gegenbauer_log_inverse_norm(m: usize, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::domain(format!(
            "orthonormal Gegenbauer needs α > 0, got {alpha}"
        )));
    }
    let mf = m as f64;
    Ok(log_factorial(m as u64) + libm::log(mf + alpha) + 2.0 * log_gamma(alpha)?
        - libm::log(core::f64::consts::PI)
        - (1.0 - 2.0 * alpha) * core::f64::consts::LN_2
        - log_gamma(mf + 2.0 * alpha)?)
}

fn expect_family(spec: &PolynomialSpec, family: Family) -> Result<()> {
    spec.validate()?;
    if spec.family != family {
        return Err(Error::domain(format!(
            "expected a {family:?} spec, got {:?}",
            spec.family
        )));
    }
    Ok(())
}

pub fn eval_laguerre(spec: &PolynomialSpec, x: f64, norm: Norm) -> Result<SignedLogReal> {
    expect_family(spec, Family::Laguerre)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("Laguerre argument must be >= 0, got {x}")));
    }
    let v = laguerre_raw(spec.degree, spec.alpha, x);
    Ok(match norm {
        Norm::Standard => v,
        Norm::Orthonormal => v.scale_exp(laguerre_orthonormal_log_factor(spec.degree, spec.alpha)),
    })
}

pub fn eval_gegenbauer(spec: &PolynomialSpec, x: f64, norm: Norm) -> Result<SignedLogReal> {
    expect_family(spec, Family::Gegenbauer)?;
    if !(x.abs() <= 1.0) {
        return Err(Error::domain(format!("Gegenbauer argument must lie in [-1, 1], got {x}")));
    }
    let v = gegenbauer_raw(spec.degree, spec.alpha, x);
    Ok(match norm {
        Norm::Standard => v,
        Norm::Orthonormal => {
            v.scale_exp(0.5 * gegenbauer_log_inverse_norm(spec.degree, spec.alpha)?)
        }
    })
}

/// All roots, ascending.
pub fn roots(spec: &PolynomialSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    if spec.degree == 0 {
        return Ok(Vec::new());
    }
    let weight = match spec.family {
        Family::Laguerre => Weight::Laguerre {
            alpha: spec.alpha,
            scale: 1.0,
        },
        Family::Gegenbauer => Weight::Jacobi {
            a: spec.alpha - 0.5,
            b: spec.alpha - 0.5,
        },
    };
    Ok(gauss::canonical_rule(weight, spec.degree)?.nodes.clone())
}
