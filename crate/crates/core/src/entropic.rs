//! Exact entropic functionals by quadrature.
//!
//! Every quantity splits into a radial and an angular part. The radial
//! parts reduce to one-dimensional integrals of `|polynomial|^{2q}` against
//! a Laguerre or Jacobi weight; the angular part is a product over the
//! hyperspherical factors, where flat runs of the chain have closed forms
//! and only steps `μ_j > μ_{j+1}` need quadrature.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::hydrogenic::{
    self, angular_groups, gegenbauer_alpha, laguerre_alpha, log_harmonic_factor,
    log_harmonic_flat, AngularGroup, QuantumState,
};
use crate::logspace::{digamma, log_factorial, log_pochhammer, SignedLogReal};
use crate::orthopoly::{self, laguerre_raw, gegenbauer_raw, PolynomialSpec};
use crate::quadrature::{integrate, Integral, Knot, Line, QuadratureSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Position,
    Momentum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Exact,
    Asymptotic,
}

/// An entropy in nats with its radial/angular split.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyResult {
    pub value: f64,
    pub space: Space,
    pub method: Method,
    pub radial: f64,
    pub angular: f64,
    /// Order of the entropy; `1` for Shannon.
    pub q: f64,
    /// Absolute error estimate in nats.
    pub error_estimate: f64,
    /// Expansion order used by asymptotic results.
    pub order: Option<u8>,
}

/// A log-domain quantity with its estimated relative error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: SignedLogReal,
    pub rel_error: f64,
}

impl Estimate {
    fn from_integral(i: Integral) -> Self {
        Self {
            value: i.value,
            rel_error: i.rel_error,
        }
    }
}

/// `|q − 1|` below which Rényi entropies are refused.
pub const Q_NEAR_ONE: f64 = 1e-4;

fn check_order(q: f64) -> Result<()> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::domain(format!("entropy order must be positive, got {q}")));
    }
    Ok(())
}

fn check_renyi_order(q: f64) -> Result<()> {
    check_order(q)?;
    if (q - 1.0).abs() < Q_NEAR_ONE {
        return Err(Error::domain(format!(
            "order q = {q} is within {Q_NEAR_ONE:e} of 1; use the Shannon entropy instead"
        )));
    }
    Ok(())
}

fn check_numbers(n: u32, l: u32, dim: u32) -> Result<()> {
    if dim < 2 || n < 1 || l >= n {
        return Err(Error::validation(format!(
            "need D ≥ 2, n ≥ 1 and l < n; got D = {dim}, n = {n}, l = {l}"
        )));
    }
    Ok(())
}

fn knots_at_roots(
    poly: &PolynomialSpec,
    exponent: f64,
    qs: &QuadratureSpec,
    map: impl Fn(f64) -> f64,
) -> Result<Vec<Knot>> {
    if !qs.split_at_roots || poly.degree == 0 {
        return Ok(Vec::new());
    }
    Ok(orthopoly::roots(poly)?
        .into_iter()
        .map(|r| Knot::new(map(r), exponent))
        .collect())
}

fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `N_{n,l}(D,q) = ∫_0^∞ ([L̂_{n−l−1}^{(α)}]² ω_α(x))^q x^{(2−D)q+D−1} dx`,
/// `α = D+2l−2`.
pub fn laguerre_renyi_norm(n: u32, l: u32, dim: u32, q: f64, spec: &QuadratureSpec) -> Result<SignedLogReal> {
    Ok(laguerre_renyi_norm_estimate(n, l, dim, q, spec)?.value)
}

pub fn laguerre_renyi_norm_estimate(
    n: u32,
    l: u32,
    dim: u32,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    check_numbers(n, l, dim)?;
    check_order(q)?;
    let qs = spec.for_dimension(dim);
    let (d, lf) = (dim as f64, l as f64);
    let power = d + 2.0 * lf * q - 1.0;
    if !(power > -1.0) {
        return Err(Error::domain("radial Rényi integral diverges at the origin"));
    }
    let m = (n - l - 1) as usize;
    let alpha = d + 2.0 * lf - 2.0;
    let poly = PolynomialSpec::laguerre(m, alpha)?;
    let mut knots = alloc::vec![Knot::new(0.0, power)];
    knots.extend(knots_at_roots(&poly, 2.0 * q, &qs, |r| r)?);
    let line = Line::half_open(knots, libm::sqrt(power + 1.0) / q).with_min_panels(8);
    let integral = integrate(
        |x| {
            laguerre_raw(m, alpha, x)
                .pow_abs(2.0 * q)
                .scale_exp(power * ln(x) - q * x)
        },
        &line,
        &qs,
    )?;
    let ln_norm = q * (log_factorial(m as u64) - libm::lgamma_r(m as f64 + alpha + 1.0).0);
    Ok(Estimate {
        value: integral.value.scale_exp(ln_norm),
        rel_error: integral.rel_error,
    })
}

/// `ln A(n,l;D)`, the constant making `C_{n−l−1}^{(l+(D−1)/2)}` orthonormal.
pub fn log_momentum_gegenbauer_constant(n: u32, l: u32, dim: u32) -> Result<f64> {
    check_numbers(n, l, dim)?;
    orthopoly::gegenbauer_log_inverse_norm((n - l - 1) as usize, l as f64 + (dim as f64 - 1.0) / 2.0)
}

/// Exponents `(at y = +1, at y = −1)` of the momentum integrand `I_{n,l}(q,D)`.
pub fn momentum_exponents(l: u32, dim: u32, q: f64) -> (f64, f64) {
    let (d, lf) = (dim as f64, l as f64);
    (lf * q - 1.0 + d / 2.0, (lf + 1.0) * q - 1.0 + (q - 0.5) * d)
}

/// `I_{n,l}(q,D) = ∫_{−1}^{1} (1−y)^{lq−1+D/2} (1+y)^{(l+1)q−1+(q−½)D} |C|^{2q} dy`.
pub fn momentum_gegenbauer_integral(
    n: u32,
    l: u32,
    dim: u32,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    check_numbers(n, l, dim)?;
    check_order(q)?;
    let qs = spec.for_dimension(dim);
    let (e_plus, e_minus) = momentum_exponents(l, dim, q);
    if !(e_minus > -1.0) {
        return Err(Error::domain(format!(
            "momentum entropic moment of order {q} diverges at D = {dim}, l = {l}"
        )));
    }
    let m = (n - l - 1) as usize;
    let alpha = l as f64 + (dim as f64 - 1.0) / 2.0;
    let poly = PolynomialSpec::gegenbauer(m, alpha)?;
    let mut knots = alloc::vec![Knot::new(-1.0, e_minus)];
    knots.extend(knots_at_roots(&poly, 2.0 * q, &qs, |r| r)?);
    knots.push(Knot::new(1.0, e_plus));
    let line = Line::closed(knots).with_min_panels(8);
    let integral = integrate(
        |y| {
            gegenbauer_raw(m, alpha, y)
                .pow_abs(2.0 * q)
                .scale_exp(e_plus * libm::log1p(-y) + e_minus * libm::log1p(y))
        },
        &line,
        &qs,
    )?;
    Ok(Estimate::from_integral(integral))
}

/// `∫ ρ_{n,l}^q r^{D−1} dr` through the Laguerre norm.
pub fn position_radial_moment(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    let p = state.derive();
    let d = state.dim() as f64;
    let norm = laguerre_renyi_norm_estimate(state.n(), state.l(), state.dim(), q, spec)?;
    let ln_pref = d * (1.0 - q) * ln(p.lambda) - q * ln(2.0 * p.eta);
    Ok(Estimate {
        value: norm.value.scale_exp(ln_pref),
        rel_error: norm.rel_error,
    })
}

/// `∫ M_{n,l}^{2q} p^{D−1} dp` through the Gegenbauer integral.
pub fn momentum_radial_moment(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    let p = state.derive();
    let d = state.dim() as f64;
    let ln_a = log_momentum_gegenbauer_constant(state.n(), state.l(), state.dim())?;
    let i = momentum_gegenbauer_integral(state.n(), state.l(), state.dim(), q, spec)?;
    let ln_pref = d * (q - 1.0) * ln(p.eta / state.charge()) + q * ln_a;
    Ok(Estimate {
        value: i.value.scale_exp(ln_pref),
        rel_error: i.rel_error,
    })
}

/// Radial position Rényi entropy `(1/(1−q)) ln ∫ ρ^q r^{D−1} dr`.
pub fn position_radial_renyi_exact(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    check_renyi_order(q)?;
    let w = position_radial_moment(state, q, spec)?;
    let k = 1.0 / (1.0 - q);
    Ok((k * w.value.logmag(), k.abs() * w.rel_error))
}

/// Radial momentum Rényi entropy
/// `−D ln(η/Z) + (1/(1−q)) [q ln A + ln I]`, with its error estimate.
pub fn momentum_radial_renyi_exact(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    check_renyi_order(q)?;
    let w = momentum_radial_moment(state, q, spec)?;
    let k = 1.0 / (1.0 - q);
    Ok((k * w.value.logmag(), k.abs() * w.rel_error))
}

fn step_factor_integral(alpha_j: f64, upper: u64, lower: u64, q: f64, qs: &QuadratureSpec) -> Result<Estimate> {
    let k = (upper - lower) as usize;
    let par = alpha_j + lower as f64;
    let e = q * lower as f64 + alpha_j - 0.5;
    let poly = PolynomialSpec::gegenbauer(k, par)?;
    let mut knots = alloc::vec![Knot::new(-1.0, e)];
    knots.extend(knots_at_roots(&poly, 2.0 * q, qs, |r| r)?);
    knots.push(Knot::new(1.0, e));
    let line = Line::closed(knots).with_min_panels(8);
    let integral = integrate(
        |t| {
            gegenbauer_raw(k, par, t)
                .pow_abs(2.0 * q)
                .scale_exp(e * (libm::log1p(-t) + libm::log1p(t)))
        },
        &line,
        qs,
    )?;
    Ok(Estimate::from_integral(integral))
}

/// `Λ_{l,{μ}} = ∫ |Y_{l,{μ}}|^{2q} dΩ`.
pub fn angular_factor_exact(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<SignedLogReal> {
    Ok(angular_factor_estimate(state, q, spec)?.value)
}

pub fn angular_factor_estimate(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_order(q)?;
    let qs = spec.for_dimension(state.dim());
    let dp = state.derive();
    let mut ln = ln(2.0 * PI) + q * hydrogenic::harmonic_norm_sq(state)?.logmag();
    let mut rel = 0.0;
    for g in angular_groups(state) {
        match g {
            AngularGroup::Flat { value, j_start, j_end } => {
                let c = (j_end - j_start + 1) as f64;
                ln += 0.5 * c * libm::log(PI)
                    - log_pochhammer(q * value as f64 + dp.alpha(j_end) + 0.5, 0.5 * c)?;
            }
            AngularGroup::Step { j, upper, lower } => {
                let est = step_factor_integral(dp.alpha(j), upper, lower, q, &qs)?;
                ln += est.value.logmag();
                rel += est.rel_error;
            }
        }
    }
    Ok(Estimate {
        value: SignedLogReal::from_log(ln),
        rel_error: rel,
    })
}

/// Angular Rényi entropy `(1/(1−q)) ln Λ` with its error estimate.
pub fn angular_renyi_exact(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    check_renyi_order(q)?;
    let lam = angular_factor_estimate(state, q, spec)?;
    let k = 1.0 / (1.0 - q);
    Ok((k * lam.value.logmag(), k.abs() * lam.rel_error))
}

/// Rényi entropy of order `q` in position or momentum space.
pub fn renyi_entropy(state: &QuantumState, q: f64, space: Space, spec: &QuadratureSpec) -> Result<EntropyResult> {
    check_renyi_order(q)?;
    spec.validate()?;
    let (radial, rad_err) = match space {
        Space::Position => position_radial_renyi_exact(state, q, spec)?,
        Space::Momentum => momentum_radial_renyi_exact(state, q, spec)?,
    };
    let (angular, ang_err) = angular_renyi_exact(state, q, spec)?;
    Ok(EntropyResult {
        value: radial + angular,
        space,
        method: Method::Exact,
        radial,
        angular,
        q,
        error_estimate: rad_err + ang_err,
        order: None,
    })
}

/// Entropic moment `W_q = ∫ density^q` assembled from the radial and angular parts.
pub fn entropic_moment(state: &QuantumState, q: f64, space: Space, spec: &QuadratureSpec) -> Result<Estimate> {
    let rad = match space {
        Space::Position => position_radial_moment(state, q, spec)?,
        Space::Momentum => momentum_radial_moment(state, q, spec)?,
    };
    let ang = angular_factor_estimate(state, q, spec)?;
    Ok(Estimate {
        value: rad.value * ang.value,
        rel_error: rad.rel_error + ang.rel_error,
    })
}

/// `∫ ρ(r)^q r^{D−1} dr` integrated directly in `r`.
pub fn position_radial_moment_direct(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_order(q)?;
    let qs = spec.for_dimension(state.dim());
    let p = state.derive();
    let d = state.dim() as f64;
    let power = d - 1.0 + 2.0 * state.l() as f64 * q;
    let poly = PolynomialSpec::laguerre(state.radial_degree(), laguerre_alpha(state))?;
    let mut knots = alloc::vec![Knot::new(0.0, power)];
    knots.extend(knots_at_roots(&poly, 2.0 * q, &qs, |x| x * p.lambda)?);
    let line = Line::half_open(knots, p.lambda * libm::sqrt(power + 1.0) / q).with_min_panels(8);
    let integral = integrate(
        |r| match hydrogenic::position_radial_density(state, r) {
            Ok(v) => v.pow_abs(q).scale_exp((d - 1.0) * ln(r)),
            Err(_) => SignedLogReal::ZERO,
        },
        &line,
        &qs,
    )?;
    Ok(Estimate::from_integral(integral))
}

/// `∫ M(p)^{2q} p^{D−1} dp` integrated directly in `s = ln p`.
pub fn momentum_radial_moment_direct(state: &QuantumState, q: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_order(q)?;
    let qs = spec.for_dimension(state.dim());
    let p = state.derive();
    let d = state.dim() as f64;
    let scale = state.charge() / p.eta;
    let poly = PolynomialSpec::gegenbauer(state.radial_degree(), gegenbauer_alpha(state))?;
    // y = (1−u²)/(1+u²)  ⇔  u = √((1−y)/(1+y)), and p = (Z/η) u
    let mut knots = knots_at_roots(&poly, 2.0 * q, &qs, |y| {
        ln(scale) + 0.5 * (libm::log1p(-y) - libm::log1p(y))
    })?;
    knots.sort_by(|a, b| a.x.total_cmp(&b.x));
    if knots.is_empty() {
        knots.push(Knot::regular(ln(scale)));
    }
    let line = Line::open(knots, 1.0 / libm::sqrt(d + 1.0)).with_min_panels(8);
    let integral = integrate(
        |s| {
            let pv = libm::exp(s);
            match hydrogenic::momentum_radial_density(state, pv) {
                Ok(v) => v.pow_abs(q).scale_exp(d * s),
                Err(_) => SignedLogReal::ZERO,
            }
        },
        &line,
        &qs,
    )?;
    Ok(Estimate::from_integral(integral))
}

/// `W_q` by direct quadrature of the radial density times the exact angular factor.
pub fn entropic_moment_direct(state: &QuantumState, q: f64, space: Space, spec: &QuadratureSpec) -> Result<Estimate> {
    let rad = match space {
        Space::Position => position_radial_moment_direct(state, q, spec)?,
        Space::Momentum => momentum_radial_moment_direct(state, q, spec)?,
    };
    let ang = angular_factor_estimate(state, q, spec)?;
    Ok(Estimate {
        value: rad.value * ang.value,
        rel_error: rad.rel_error + ang.rel_error,
    })
}

fn position_radial_shannon(state: &QuantumState, qs: &QuadratureSpec) -> Result<(f64, f64)> {
    let p = state.derive();
    let d = state.dim() as f64;
    let lf = state.l() as f64;
    let m = state.radial_degree();
    let alpha = laguerre_alpha(state);
    let ln_c = orthopoly::laguerre_orthonormal_log_factor(m, alpha);
    let power = 2.0 * lf + d - 1.0;
    let poly = PolynomialSpec::laguerre(m, alpha)?;
    let mut knots = alloc::vec![Knot::new(0.0, power)];
    knots.extend(knots_at_roots(&poly, 2.0, qs, |r| r)?);
    let line = Line::half_open(knots, libm::sqrt(power + 1.0)).with_min_panels(8);
    let ln_2eta = ln(2.0 * p.eta);
    // p(x) = x^{2l+D−1} e^{−x} L̂² / (2η); −ln ρ = D ln λ + ln 2η − (2l ln x − x + 2 ln|L̂|)
    let integral = integrate(
        |x| {
            let lhat = laguerre_raw(m, alpha, x).scale_exp(ln_c);
            if lhat.is_zero() {
                return SignedLogReal::ZERO;
            }
            let lx = ln(x);
            let dens = lhat.pow_abs(2.0).scale_exp(power * lx - x - ln_2eta);
            let g = 2.0 * lf * lx - x + 2.0 * lhat.logmag();
            dens * SignedLogReal::from_f64(g)
        },
        &line,
        qs,
    )?;
    let value = d * ln(p.lambda) + ln_2eta - integral.value.to_f64();
    Ok((value, integral.rel_error * integral.value.to_f64().abs()))
}

fn momentum_radial_shannon(state: &QuantumState, qs: &QuadratureSpec) -> Result<(f64, f64)> {
    let p = state.derive();
    let d = state.dim() as f64;
    let lf = state.l() as f64;
    let (n, l, dim) = (state.n(), state.l(), state.dim());
    let m = state.radial_degree();
    let alpha = gegenbauer_alpha(state);
    let ln_a = log_momentum_gegenbauer_constant(n, l, dim)?;
    let ln_scale = d * ln(p.eta / state.charge());
    let (e_plus, e_minus) = (lf - 1.0 + d / 2.0, lf + d / 2.0);
    let poly = PolynomialSpec::gegenbauer(m, alpha)?;
    let mut knots = alloc::vec![Knot::new(-1.0, e_minus)];
    knots.extend(knots_at_roots(&poly, 2.0, qs, |r| r)?);
    knots.push(Knot::new(1.0, e_plus));
    let line = Line::closed(knots).with_min_panels(8);
    // P(y) = A (1−y)^{l−1+D/2} (1+y)^{l+D/2} C²
    // ln M² = D ln(η/Z) + ln A + l ln(1−y) + (D+l+1) ln(1+y) + 2 ln|C|
    let integral = integrate(
        |y| {
            let c = gegenbauer_raw(m, alpha, y);
            if c.is_zero() {
                return SignedLogReal::ZERO;
            }
            let (lm, lp) = (libm::log1p(-y), libm::log1p(y));
            let dens = c.pow_abs(2.0).scale_exp(ln_a + e_plus * lm + e_minus * lp);
            let g = ln_scale + ln_a + lf * lm + (d + lf + 1.0) * lp + 2.0 * c.logmag();
            dens * SignedLogReal::from_f64(g)
        },
        &line,
        qs,
    )?;
    let v = integral.value.to_f64();
    Ok((-v, integral.rel_error * v.abs()))
}

fn step_factor_shannon(alpha_j: f64, upper: u64, lower: u64, qs: &QuadratureSpec) -> Result<(f64, f64)> {
    let k = (upper - lower) as usize;
    let par = alpha_j + lower as f64;
    let mu1 = lower as f64;
    let e = mu1 + alpha_j - 0.5;
    let ln_a = log_harmonic_factor(alpha_j, upper, lower)?;
    let poly = PolynomialSpec::gegenbauer(k, par)?;
    let mut knots = alloc::vec![Knot::new(-1.0, e)];
    knots.extend(knots_at_roots(&poly, 2.0, qs, |r| r)?);
    knots.push(Knot::new(1.0, e));
    let line = Line::closed(knots).with_min_panels(8);
    let integral = integrate(
        |t| {
            let c = gegenbauer_raw(k, par, t);
            if c.is_zero() {
                return SignedLogReal::ZERO;
            }
            let l1t2 = libm::log1p(-t) + libm::log1p(t);
            let dens = c.pow_abs(2.0).scale_exp(ln_a + e * l1t2);
            dens * SignedLogReal::from_f64(2.0 * c.logmag() + mu1 * l1t2)
        },
        &line,
        qs,
    )?;
    let v = integral.value.to_f64();
    Ok((-ln_a - v, integral.rel_error * v.abs()))
}

/// Angular Shannon entropy `−∫ |Y|² ln |Y|² dΩ`.
pub fn angular_shannon_exact(state: &QuantumState, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let qs = spec.for_dimension(state.dim());
    let dp = state.derive();
    let mut s = ln(2.0 * PI);
    let mut err = 0.0;
    for g in angular_groups(state) {
        match g {
            AngularGroup::Flat { value, j_start, j_end } => {
                let c = j_end - j_start + 1;
                let v = value as f64;
                s -= log_harmonic_flat(value, dp.alpha(j_end), c)?;
                if value > 0 {
                    let z_start = dp.alpha(j_start) + v;
                    let z_end = dp.alpha(j_end) + v;
                    s += v * (digamma(z_start + 1.0)? - digamma(z_end + 0.5)?);
                }
            }
            AngularGroup::Step { j, upper, lower } => {
                let (v, e) = step_factor_shannon(dp.alpha(j), upper, lower, &qs)?;
                s += v;
                err += e;
            }
        }
    }
    Ok((s, err))
}

/// Shannon entropy `−∫ ρ ln ρ` in position or momentum space.
pub fn shannon_exact(state: &QuantumState, space: Space, spec: &QuadratureSpec) -> Result<EntropyResult> {
    spec.validate()?;
    let qs = spec.for_dimension(state.dim());
    let (radial, rad_err) = match space {
        Space::Position => position_radial_shannon(state, &qs)?,
        Space::Momentum => momentum_radial_shannon(state, &qs)?,
    };
    let (angular, ang_err) = angular_shannon_exact(state, spec)?;
    Ok(EntropyResult {
        value: radial + angular,
        space,
        method: Method::Exact,
        radial,
        angular,
        q: 1.0,
        error_estimate: rad_err + ang_err,
        order: None,
    })
}

/// Tsallis entropy `T_q = (e^{(1−q)R_q} − 1)/(1−q)` and disequilibrium `e^{−R_2}`.
pub fn tsallis_and_disequilibrium(
    state: &QuantumState,
    q: f64,
    space: Space,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let r = renyi_entropy(state, q, space, spec)?;
    let tsallis = libm::expm1((1.0 - q) * r.value) / (1.0 - q);
    let r2 = if q == 2.0 {
        r.value
    } else {
        renyi_entropy(state, 2.0, space, spec)?.value
    };
    Ok((tsallis, libm::exp(-r2)))
}

/// Closed-form ground-state position radial entropy
/// `D ln λ + D ln q/(q−1) + ln Γ(D)`.
pub fn ground_position_radial_closed_form(dim: u32, charge: f64, q: f64) -> f64 {
    let d = dim as f64;
    let lambda = (1.0 + (d - 3.0) / 2.0) / (2.0 * charge);
    d * ln(lambda) + d * ln(q) / (q - 1.0) + libm::lgamma_r(d).0
}

/// `ln` of the sphere area `2π^{D/2}/Γ(D/2)`.
pub fn log_sphere_area(dim: u32) -> f64 {
    let d = dim as f64;
    LN_2 + 0.5 * d * ln(PI) - libm::lgamma_r(0.5 * d).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hydrogenic::MuChain;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn laguerre_norm_closed_form() {
        let v = laguerre_renyi_norm(1, 0, 6, 2.0, &spec()).unwrap();
        let expect = libm::lgamma(6.0) - 6.0 * LN_2 - 2.0 * libm::lgamma(5.0);
        assert!((v.logmag() - expect).abs() < 1e-12);
        assert!((v.logmag() - (-5.72750)).abs() < 1e-5);
    }

    #[test]
    fn ground_state_position_example() {
        let s = QuantumState::ground(10, 1.0).unwrap();
        let r = renyi_entropy(&s, 2.0, Space::Position, &spec()).unwrap();
        let closed = ground_position_radial_closed_form(10, 1.0, 2.0);
        assert!((r.radial - closed).abs() < 1e-9 * closed);
        assert!((r.radial - 27.842601).abs() < 1e-6, "{}", r.radial);
        let expect_ang = ln(2.0 * libm::pow(PI, 5.0) / 24.0);
        assert!((r.angular - expect_ang).abs() < 1e-12);
        assert_eq!(r.value, r.radial + r.angular);
    }

    #[test]
    fn angular_factor_examples() {
        let s = QuantumState::ground(3, 1.0).unwrap();
        let lam = angular_factor_exact(&s, 2.0, &spec()).unwrap();
        assert!((lam.to_f64() - 1.0 / (4.0 * PI)).abs() < 1e-15);
        let s = QuantumState::new(7, 1.0, 4, 3, MuChain::from_runs([(3, 2), (1, 3), (-1, 1)])).unwrap();
        let lam = angular_factor_exact(&s, 1.0, &spec()).unwrap();
        assert!(lam.logmag().abs() < 1e-12);
    }

    #[test]
    fn shannon_ground_state_d3() {
        let s = QuantumState::ground(3, 1.0).unwrap();
        let r = shannon_exact(&s, Space::Position, &spec()).unwrap();
        assert!((r.value - (3.0 + ln(PI))).abs() < 1e-10);
    }

    #[test]
    fn near_one_is_rejected() {
        let s = QuantumState::ground(3, 1.0).unwrap();
        assert!(renyi_entropy(&s, 1.0 + 1e-5, Space::Position, &spec()).is_err());
        assert!(renyi_entropy(&s, 0.0, Space::Position, &spec()).is_err());
    }
}
