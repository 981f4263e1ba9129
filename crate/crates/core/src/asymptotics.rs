//! Large-parameter expansions.
//!
//! `J₁` and `J₂` are the Laguerre and Gegenbauer Rényi-like functionals whose
//! asymptotics drive every entropy series. The entropy series are stored term
//! by term. In [`Form::Leading`] they are the pure `D log D`, `D`, `log D`,
//! constant expansion; [`Form::Exact`] keeps those coefficients and adds a
//! `closed_form` correction so that the value equals the finite-`D` formula
//! built from exact `η`, exact Gamma ratios and the theorem expansion of the
//! remaining integral.

use alloc::format;
use core::f64::consts::{LN_2, PI};
use core::ops::Add;

use crate::entropic::{EntropyResult, Method, Space, Q_NEAR_ONE};
use crate::error::{Error, Result};
use crate::hydrogenic::{angular_groups, AngularGroup, QuantumState};
use crate::logspace::{log_factorial, log_gamma, log_pochhammer, SignedLogReal};
use crate::orthopoly;

fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// Parameters of `J₁ = ∫_0^∞ x^{α+σ−1} e^{−λx} |L_m^{(α)}(x)|^κ dx`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct J1Params {
    pub sigma: f64,
    pub lambda: f64,
    pub kappa: f64,
    pub m: u32,
    pub alpha: f64,
    /// 0 keeps `D₀` only, 1 adds `D₁/α`.
    pub order: u8,
}

impl J1Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) || self.lambda == 1.0 {
            return Err(Error::domain(format!("J1 needs 0 < λ ≠ 1, got λ = {}", self.lambda)));
        }
        if !(self.kappa > 0.0) || !(self.alpha > 0.0) {
            return Err(Error::domain("J1 needs κ > 0 and α > 0"));
        }
        if self.order > 1 {
            return Err(Error::domain(format!("J1 expansion order {} not available", self.order)));
        }
        Ok(())
    }
}

/// The `D₁` coefficient of the `J₁` expansion.
///
/// Laplace's method at `t = 1/λ`, with the `1/α` part of the Laguerre
/// polynomial itself. Agrees with [`j1_d1_published`] only for `m = 0`.
pub fn j1_d1(p: &J1Params) -> f64 {
    let (s, l, k) = (p.sigma, p.lambda, p.kappa);
    let m = p.m as f64;
    let km = k * m;
    let poly = 6.0 * km * km + 6.0 * km * m * l * l + 6.0 * km * l * l - 12.0 * km * m * l
        - 12.0 * km * s * l
        + 12.0 * km * s
        - 6.0 * km
        + 6.0 * s * s * l * l
        - 6.0 * s * l * l
        + l * l
        - 12.0 * s * s * l
        + 12.0 * s * l
        - 2.0 * l
        + 6.0 * s * s
        - 6.0 * s
        + 1.0;
    poly / (12.0 * (l - 1.0) * (l - 1.0))
}

/// `D₁` as printed in the literature. It exceeds [`j1_d1`] by
/// `κm(m+1−2λ)/(2(λ−1)²)`, so with it the order-1 error stays `O(1/α)`.
pub fn j1_d1_published(p: &J1Params) -> f64 {
    let (s, l, k) = (p.sigma, p.lambda, p.kappa);
    let m = p.m as f64;
    let km = k * m;
    let poly = 1.0 - 12.0 * km * s * l + 6.0 * s * s * l * l - 12.0 * s * s * l - 6.0 * s * l * l
        + 12.0 * s * l
        + 6.0 * km * km
        + 12.0 * km * s
        - 12.0 * km * m * l
        - 12.0 * km * l
        + 6.0 * km * l * l
        + 6.0 * km * m * l * l
        + l * l
        + 6.0 * s * s
        - 2.0 * l
        - 6.0 * s
        + 6.0 * km * m;
    poly / (12.0 * (l - 1.0) * (l - 1.0))
}

/// `α^{α+σ} e^{−α} λ^{−α−σ−κm} |λ−1|^{κm} √(2π/α) α^{κm}/(m!)^κ (D₀ + D₁/α)`.
pub fn j1_asymptotic(p: &J1Params) -> Result<SignedLogReal> {
    p.validate()?;
    let (a, s, l, k) = (p.alpha, p.sigma, p.lambda, p.kappa);
    let km = k * p.m as f64;
    // |λ−1|^{κm} with 0⁰ = 1
    let gap = if p.m == 0 { 0.0 } else { km * ln((l - 1.0).abs()) };
    let ln_lead = (a + s) * ln(a) - a - (a + s + km) * ln(l) + gap + 0.5 * ln(2.0 * PI / a)
        + km * ln(a)
        - k * log_factorial(p.m as u64);
    let series = if p.order >= 1 { 1.0 + j1_d1(p) / a } else { 1.0 };
    if !(series > 0.0) {
        return Err(Error::domain("J1 expansion is not positive at this α"));
    }
    Ok(SignedLogReal::from_log(ln_lead + ln(series)))
}

/// Parameters of `J₂ = ∫_{−1}^{1} (1−x)^{cα+a} (1+x)^{dα+b} |C_m^{(α)}(x)|^κ dx`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct J2Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub kappa: f64,
    pub m: u32,
    pub alpha: f64,
}

impl J2Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) || !(self.d > 0.0) || !(self.kappa > 0.0) || !(self.alpha > 0.0) {
            return Err(Error::domain("J2 needs c, d, κ, α > 0"));
        }
        Ok(())
    }

    /// `(a, b, c, d) → (b, a, d, c)`, the reflection `x → −x`.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            c: self.d,
            d: self.c,
            ..*self
        }
    }
}

/// Whether `j2_asymptotic` goes through the swap rule for these parameters.
pub fn j2_uses_swap(p: &J2Params) -> bool {
    p.c > p.d
}

/// Theorem expansion of `J₂` to leading order.
///
/// For `c = d` this is `√(π/(αc)) (2α)^m/m!`, which ignores `a`, `b`, `κ`;
/// it is only accurate for `m = 0` and `a = b = 0`.
pub fn j2_asymptotic(p: &J2Params) -> Result<SignedLogReal> {
    p.validate()?;
    if p.c == p.d {
        let m = p.m as f64;
        return Ok(SignedLogReal::from_log(
            0.5 * ln(PI / (p.alpha * p.c)) + m * ln(2.0 * p.alpha) - log_factorial(p.m as u64),
        ));
    }
    let p = if j2_uses_swap(p) { p.swapped() } else { *p };
    let (a, b, c, d, k) = (p.a, p.b, p.c, p.d, p.kappa);
    let m = p.m as f64;
    let s = c + d;
    let phi = -c * ln(2.0 * c / s) - d * ln(2.0 * d / s);
    let ln_a1 = LN_2 + 0.5 * (ln(c * d) - 3.0 * ln(s));
    let ln_d0 = ln_a1 + a * ln(2.0 * c / s) + b * ln(2.0 * d / s) + k * m * ln((d - c) / s);
    let ln_poch = log_pochhammer(p.alpha, m)?;
    Ok(SignedLogReal::from_log(
        -p.alpha * phi + 0.5 * ln(2.0 * PI / p.alpha) + k * m * LN_2 + k * ln_poch
            - k * log_factorial(p.m as u64)
            + ln_d0,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Form {
    /// Exact `η` and Gamma ratios, theorem expansion for the integral.
    #[default]
    Exact,
    /// Fully expanded in `D`.
    Leading,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SeriesOptions {
    pub form: Form,
    /// Order of the `J₁` expansion (momentum series only have order 0).
    pub order: u8,
}

/// `d_log_d·D log D + linear·D + log_d·log D + constant + closed_form`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticSeries {
    pub dimension: u32,
    pub d_log_d: f64,
    pub linear: f64,
    pub log_d: f64,
    pub constant: f64,
    /// Finite-`D` refinement; zero in the leading form.
    pub closed_form: f64,
    pub remainder: &'static str,
    pub conjecture: bool,
    /// Built through the `c > d` swap of the `J₂` theorem.
    pub swap_derived: bool,
}

impl AsymptoticSeries {
    fn leading(dim: u32, d_log_d: f64, linear: f64, log_d: f64, constant: f64) -> Self {
        Self {
            dimension: dim,
            d_log_d,
            linear,
            log_d,
            constant,
            closed_form: 0.0,
            remainder: "O(1/D)",
            conjecture: false,
            swap_derived: false,
        }
    }

    /// Sum of the stored terms without the closed-form refinement.
    pub fn leading_value(&self) -> f64 {
        let d = self.dimension as f64;
        let ld = ln(d);
        self.d_log_d * d * ld + self.linear * d + self.log_d * ld + self.constant
    }

    pub fn value(&self) -> f64 {
        self.leading_value() + self.closed_form
    }

    fn refine_to(mut self, exact: f64) -> Self {
        self.closed_form = exact - self.leading_value();
        self
    }
}

impl Add for AsymptoticSeries {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.dimension, o.dimension);
        Self {
            dimension: self.dimension,
            d_log_d: self.d_log_d + o.d_log_d,
            linear: self.linear + o.linear,
            log_d: self.log_d + o.log_d,
            constant: self.constant + o.constant,
            closed_form: self.closed_form + o.closed_form,
            remainder: self.remainder,
            conjecture: self.conjecture || o.conjecture,
            swap_derived: self.swap_derived || o.swap_derived,
        }
    }
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::domain(format!("entropy order must be positive, got {q}")));
    }
    if (q - 1.0).abs() < Q_NEAR_ONE {
        return Err(Error::domain(format!("order q = {q} is too close to 1")));
    }
    Ok(())
}

/// Smallest order accepted by the momentum series.
pub const MOMENTUM_Q_MIN: f64 = 0.55;

fn check_momentum_q(q: f64) -> Result<()> {
    check_q(q)?;
    if !(q > MOMENTUM_Q_MIN) {
        return Err(Error::domain(format!(
            "momentum series need q > {MOMENTUM_Q_MIN}, got {q}"
        )));
    }
    Ok(())
}

fn check_numbers(n: u32, l: u32, dim: u32, charge: f64) -> Result<()> {
    if dim < 2 || n < 1 || l >= n || !(charge > 0.0) {
        return Err(Error::validation(format!(
            "need D ≥ 2, n ≥ 1, l < n and Z > 0; got D = {dim}, n = {n}, l = {l}, Z = {charge}"
        )));
    }
    Ok(())
}

/// `ln Ẽ` and `ln M̃` of the chain at dimension `dim`; both vanish for constant chains.
pub fn log_chain_factors(state: &QuantumState, q: f64) -> Result<(f64, f64)> {
    let dp = state.derive();
    let m_abs = state.m().unsigned_abs() as f64;
    let mut ln_e = 0.0;
    let mut ln_m = q * (state.l() as f64 - m_abs) * 2.0 * LN_2;
    for g in angular_groups(state) {
        if let AngularGroup::Step { j, upper, lower } = g {
            let k = (upper - lower) as f64;
            let base = dp.alpha(j) + lower as f64;
            ln_e += 2.0 * k * ln(base) - log_pochhammer(2.0 * base, k)? - log_pochhammer(base, k)?;
            ln_m += log_gamma(q * k + 0.5)? - q * log_gamma(k + 1.0)? - 0.5 * ln(PI);
        }
    }
    Ok((ln_e, ln_m))
}

/// `(1/(1−q)) ln(Ẽ^q M̃ Γ(1+q|μ_{D−1}|)/Γ(1+|μ_{D−1}|)^q)`, the chain-dependent constant.
fn angular_chain_constant(state: &QuantumState, q: f64) -> Result<f64> {
    let (ln_e, ln_m) = log_chain_factors(state, q)?;
    let m = state.m().unsigned_abs() as f64;
    let gamma_ratio = log_gamma(1.0 + q * m)? - q * log_gamma(1.0 + m)?;
    Ok((q * ln_e + ln_m + gamma_ratio) / (1.0 - q))
}

/// Dominant angular Rényi entropy
/// `−ln Γ(D/2) + (D/2) ln π + (1/(1−q)) ln(Ẽ^q M̃ Γ(1+q|μ|)/Γ(1+|μ|)^q 2^{1−q})`.
pub fn angular_renyi_asymptotic(state: &QuantumState, q: f64) -> Result<f64> {
    check_q(q)?;
    let d = state.dim() as f64;
    Ok(-log_gamma(0.5 * d)? + 0.5 * d * ln(PI) + angular_chain_constant(state, q)? + LN_2)
}

/// Angular series. The exact form keeps `Γ(D/2+l)^q/Γ(D/2+ql)` unexpanded.
pub fn angular_renyi_series(state: &QuantumState, q: f64, form: Form) -> Result<AsymptoticSeries> {
    check_q(q)?;
    let dim = state.dim();
    let d = dim as f64;
    let chain = angular_chain_constant(state, q)?;
    let s = AsymptoticSeries::leading(
        dim,
        -0.5,
        0.5 * ln(2.0 * PI * core::f64::consts::E),
        0.5,
        chain - 0.5 * ln(PI),
    );
    Ok(match form {
        Form::Leading => s,
        Form::Exact => {
            let h = 0.5 * d;
            let l = state.l() as f64;
            let ratio = (q * log_pochhammer(h, l)? - log_pochhammer(h, q * l)?) / (1.0 - q);
            let exact = -log_gamma(h)? + ratio + h * ln(PI) + chain + LN_2;
            s.refine_to(exact)
        }
    })
}

/// `ln F(n,l,q)` of the position radial series.
pub fn log_position_f(n: u32, l: u32, q: f64) -> f64 {
    let k = (n - l - 1) as f64;
    let gap = if n - l - 1 == 0 { 0.0 } else { 2.0 * k * q * ln((q - 1.0).abs()) };
    0.5 * (1.0 - q) * ln(2.0 * PI) + gap - q * libm::lgamma_r((n - l) as f64).0
        + (2.0 * n as f64 - 3.0) * (1.0 - q)
        - 2.0 * q * (n as f64 - 1.0) * ln(q)
}

/// Radial position Rényi series
/// `2D ln D + D ln(q^{1/(q−1)}/(4Ze)) + ((q(n−l−½)−½)/(1−q)) ln D + ln F/(1−q)`.
pub fn radial_position_renyi_asymptotic(
    n: u32,
    l: u32,
    dim: u32,
    charge: f64,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    check_numbers(n, l, dim, charge)?;
    check_q(q)?;
    let (nf, lf, d) = (n as f64, l as f64, dim as f64);
    let k = 1.0 / (1.0 - q);
    let s = AsymptoticSeries::leading(
        dim,
        2.0,
        ln(q) / (q - 1.0) - ln(4.0 * charge) - 1.0,
        (q * (nf - lf - 0.5) - 0.5) * k,
        k * log_position_f(n, l, q),
    );
    Ok(match opts.form {
        Form::Leading => s,
        Form::Exact => {
            let eta = nf + (d - 3.0) / 2.0;
            let lambda = eta / (2.0 * charge);
            let m = n - l - 1;
            let alpha = d + 2.0 * lf - 2.0;
            let j1 = j1_asymptotic(&J1Params {
                sigma: 2.0 * lf * (q - 1.0) + 2.0,
                lambda: q,
                kappa: 2.0 * q,
                m,
                alpha,
                order: opts.order,
            })?;
            let ln_norm = q * (log_factorial(m as u64) - log_gamma(m as f64 + alpha + 1.0)?);
            let ln_w = d * (1.0 - q) * ln(lambda) - q * ln(2.0 * eta) + ln_norm + j1.logmag();
            s.refine_to(k * ln_w)
        }
    })
}

/// `ln Q̄₀(q,n,l)` of the momentum radial series.
pub fn log_momentum_q0(n: u32, l: u32, q: f64) -> f64 {
    let (nf, lf) = (n as f64, l as f64);
    let k = (n - l - 1) as f64;
    let gap = if n - l - 1 == 0 { 0.0 } else { 2.0 * q * k * ln((q - 1.0).abs()) };
    0.5 * (1.0 - q) * ln(2.0 * PI) - q * libm::lgamma_r(nf - lf).0
        + (q * (lf + 1.0) - 0.5) * ln(2.0 * q - 1.0)
        + gap
        - (q * (2.0 * nf - 1.0) - 0.5) * ln(q)
}

/// Radial momentum Rényi series
/// `−D ln(D/(2Z)) + (D/(1−q)) ln √((2q−1)^{2q−1}/q^{2q}) + ((q(n−l−½)−½)/(1−q)) ln D + ln Q̄₀/(1−q) − (2n−3)`.
///
/// The last constant is the `O(1)` remainder of `−D ln(η/Z)` when `η = n + (D−3)/2`
/// is replaced by `D/2`.
pub fn radial_momentum_renyi_asymptotic(
    n: u32,
    l: u32,
    dim: u32,
    charge: f64,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    check_numbers(n, l, dim, charge)?;
    check_momentum_q(q)?;
    let (nf, lf, d) = (n as f64, l as f64, dim as f64);
    let k = 1.0 / (1.0 - q);
    let mut s = AsymptoticSeries::leading(
        dim,
        -1.0,
        ln(2.0 * charge) + k * 0.5 * ((2.0 * q - 1.0) * ln(2.0 * q - 1.0) - 2.0 * q * ln(q)),
        (q * (nf - lf - 0.5) - 0.5) * k,
        k * log_momentum_q0(n, l, q) - (2.0 * nf - 3.0),
    );
    let params = J2Params {
        a: lf * (q - 1.0) - 0.5,
        b: lf * (1.0 - q) + 2.0 * q - 1.5,
        c: 1.0,
        d: 2.0 * q - 1.0,
        kappa: 2.0 * q,
        m: n - l - 1,
        alpha: lf + (d - 1.0) / 2.0,
    };
    s.swap_derived = j2_uses_swap(&params);
    Ok(match opts.form {
        Form::Leading => s,
        Form::Exact => {
            let eta = nf + (d - 3.0) / 2.0;
            let ln_a = orthopoly::gegenbauer_log_inverse_norm((n - l - 1) as usize, params.alpha)?;
            let ln_i = j2_asymptotic(&params)?.logmag();
            s.refine_to(-d * ln(eta / charge) + k * (q * ln_a + ln_i))
        }
    })
}

/// Total position series, radial plus angular.
pub fn total_position_renyi_asymptotic(
    state: &QuantumState,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    let r = radial_position_renyi_asymptotic(state.n(), state.l(), state.dim(), state.charge(), q, opts)?;
    Ok(r + angular_renyi_series(state, q, opts.form)?)
}

/// Total momentum series, radial plus angular.
pub fn total_momentum_renyi_asymptotic(
    state: &QuantumState,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    let r = radial_momentum_renyi_asymptotic(state.n(), state.l(), state.dim(), state.charge(), q, opts)?;
    Ok(r + angular_renyi_series(state, q, opts.form)?)
}

/// `(ns)` position series.
pub fn ns_position_renyi_asymptotic(n: u32, dim: u32, charge: f64, q: f64, opts: SeriesOptions) -> Result<AsymptoticSeries> {
    total_position_renyi_asymptotic(&QuantumState::ns(dim, charge, n)?, q, opts)
}

/// Circular-state position series. The angular part uses the Pochhammer form
/// `(1/(1−q)) ln((2π^{D/2})^{1−q} ((n)_{D/2−1})^q / (1+q(n−1))_{D/2−1})`,
/// which is what the exact form of the generic angular series reduces to.
pub fn circular_position_renyi_asymptotic(
    n: u32,
    dim: u32,
    charge: f64,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    let state = QuantumState::circular(dim, charge, n)?;
    let r = radial_position_renyi_asymptotic(n, n - 1, dim, charge, q, opts)?;
    Ok(r + circular_angular_series(&state, q, opts.form)?)
}

fn circular_angular_series(state: &QuantumState, q: f64, form: Form) -> Result<AsymptoticSeries> {
    let s = angular_renyi_series(state, q, Form::Leading)?;
    Ok(match form {
        Form::Leading => s,
        Form::Exact => {
            let d = state.dim() as f64;
            let nf = state.n() as f64;
            let h = 0.5 * d - 1.0;
            let ln_area = LN_2 + 0.5 * d * ln(PI);
            let v = ln_area
                + (q * log_pochhammer(nf, h)? - log_pochhammer(1.0 + q * (nf - 1.0), h)?) / (1.0 - q);
            s.refine_to(v)
        }
    })
}

/// `(ns)` momentum series.
pub fn ns_momentum_renyi_asymptotic(n: u32, dim: u32, charge: f64, q: f64, opts: SeriesOptions) -> Result<AsymptoticSeries> {
    total_momentum_renyi_asymptotic(&QuantumState::ns(dim, charge, n)?, q, opts)
}

/// Circular-state momentum series.
pub fn circular_momentum_renyi_asymptotic(
    n: u32,
    dim: u32,
    charge: f64,
    q: f64,
    opts: SeriesOptions,
) -> Result<AsymptoticSeries> {
    let state = QuantumState::circular(dim, charge, n)?;
    let r = radial_momentum_renyi_asymptotic(n, n - 1, dim, charge, q, opts)?;
    Ok(r + circular_angular_series(&state, q, opts.form)?)
}

/// Part of an entropy a series refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Part {
    #[default]
    Total,
    Radial,
    Angular,
}

/// Conjectured large-`D` Shannon entropies. Only the `D ln D` and `D` terms
/// are conjectured; the angular part is `−ln Γ(D/2) + (D/2) ln π`, carried
/// in `closed_form`.
pub fn shannon_conjecture(state: &QuantumState, space: Space, part: Part) -> AsymptoticSeries {
    let dim = state.dim();
    let d = dim as f64;
    let z = state.charge();
    let mut s = match (space, part) {
        (Space::Position, Part::Total) => AsymptoticSeries::leading(
            dim,
            1.5,
            0.5 * ln(core::f64::consts::E * PI) - 0.5 * ln(8.0) - ln(z),
            0.0,
            0.0,
        ),
        (Space::Momentum, Part::Total) => {
            AsymptoticSeries::leading(dim, -1.5, ln(z) + 0.5 * ln(8.0 * core::f64::consts::E * PI), 0.0, 0.0)
        }
        (Space::Position, Part::Radial) => AsymptoticSeries::leading(dim, 2.0, -ln(4.0 * z), 0.0, 0.0),
        (Space::Momentum, Part::Radial) => AsymptoticSeries::leading(dim, -1.0, ln(2.0 * z), 0.0, 0.0),
        (_, Part::Angular) => {
            let mut a = AsymptoticSeries::leading(dim, 0.0, 0.5 * ln(PI), 0.0, 0.0);
            a.closed_form = -libm::lgamma_r(0.5 * d).0;
            a
        }
    };
    s.conjecture = true;
    s.remainder = "unproven";
    s
}

/// Hölder conjugate `p = q/(2q−1)`, so that `1/p + 1/q = 2`.
pub fn conjugate_order(q: f64) -> Result<f64> {
    if !(q > 0.5) || !q.is_finite() {
        return Err(Error::domain(format!("conjugate order needs q > 1/2, got {q}")));
    }
    Ok(q / (2.0 * q - 1.0))
}

/// Per-dimension constant of the position-momentum uncertainty sum at
/// conjugate orders, `ln[2π (2p)^{1/(2p−2)} (2q)^{1/(2q−2)}]`.
///
/// At `q = 1` this is the continuous limit `ln(πe)`, the Shannon bound `1 + ln π`.
pub fn uncertainty_sum_limit(q: f64) -> Result<f64> {
    let p = conjugate_order(q)?;
    if q == 1.0 {
        return Ok(1.0 + ln(PI));
    }
    Ok(ln(2.0 * PI) + ln(2.0 * p) / (2.0 * p - 2.0) + ln(2.0 * q) / (2.0 * q - 2.0))
}

/// The per-dimension constant `ln(2πe)` that the Shannon conjectures are
/// claimed to sum to.
pub const CLAIMED_SHANNON_SUM: f64 = 2.837_877_066_409_345_5;

/// Asymptotic Rényi entropy as an [`EntropyResult`].
pub fn renyi_asymptotic(state: &QuantumState, q: f64, space: Space, opts: SeriesOptions) -> Result<EntropyResult> {
    let (radial, angular) = match space {
        Space::Position => (
            radial_position_renyi_asymptotic(state.n(), state.l(), state.dim(), state.charge(), q, opts)?,
            angular_renyi_series(state, q, opts.form)?,
        ),
        Space::Momentum => (
            radial_momentum_renyi_asymptotic(state.n(), state.l(), state.dim(), state.charge(), q, opts)?,
            angular_renyi_series(state, q, opts.form)?,
        ),
    };
    let (r, a) = (radial.value(), angular.value());
    Ok(EntropyResult {
        value: r + a,
        space,
        method: Method::Asymptotic,
        radial: r,
        angular: a,
        q,
        error_estimate: f64::NAN,
        order: Some(match space {
            Space::Position => opts.order,
            Space::Momentum => 0,
        }),
    })
}
