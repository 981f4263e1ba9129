//! D-dimensional hydrogenic states: quantum numbers, derived parameters and
//! the radial densities in position and momentum space.
//!
//! Densities here are radial only; the hyperspherical-harmonic factor is
//! handled through its normalization and the one-dimensional angular
//! integrals in [`crate::entropic`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::logspace::{log_factorial, log_gamma, log_pochhammer, SignedLogReal};
use crate::orthopoly::{self, Norm, PolynomialSpec};

/// The angular chain `μ_1 ≥ μ_2 ≥ … ≥ |μ_{D−1}|`, run-length compressed as
/// `(value, count)` pairs. Only the final entry may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuChain {
    runs: Vec<(i64, u32)>,
}

impl MuChain {
    /// Merges neighbouring runs of equal value and drops empty ones.
    pub fn from_runs<I: IntoIterator<Item = (i64, u32)>>(runs: I) -> Self {
        let mut out: Vec<(i64, u32)> = Vec::new();
        for (v, c) in runs {
            if c == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lv, lc)) if *lv == v => *lc += c,
                _ => out.push((v, c)),
            }
        }
        Self { runs: out }
    }

    pub fn constant(value: i64, len: u32) -> Self {
        Self::from_runs([(value, len)])
    }

    pub fn runs(&self) -> &[(i64, u32)] {
        &self.runs
    }

    pub fn len(&self) -> u64 {
        self.runs.iter().map(|r| r.1 as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.runs.first().map(|r| r.0)
    }

    pub fn last(&self) -> Option<i64> {
        self.runs.last().map(|r| r.0)
    }

    /// Expanded entries `μ_1, …, μ_{D−1}`.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, c)| core::iter::repeat_n(v, c as usize))
    }

    /// Same chain with the final entry replaced by its absolute value.
    pub fn magnitudes(&self) -> Vec<(u64, u32)> {
        let mut runs: Vec<(i64, u32)> = self.runs.clone();
        if let Some(last) = runs.last_mut() {
            if last.0 < 0 {
                // a negative run can only be a single trailing entry
                last.0 = -last.0;
            }
        }
        MuChain::from_runs(runs)
            .runs
            .into_iter()
            .map(|(v, c)| (v as u64, c))
            .collect()
    }
}

impl core::fmt::Display for MuChain {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, (v, c)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}x{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    dim: u32,
    charge: f64,
    n: u32,
    l: u32,
    mu: MuChain,
}

/// Parameters fixed by a state: `η`, `L`, `λ`, the energy, and `α_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivedParams {
    pub dim: u32,
    /// `η = n + (D−3)/2`
    pub eta: f64,
    /// Grand orbital number `L = l + (D−3)/2`.
    pub grand_l: f64,
    /// Length unit `λ = η/(2Z)`.
    pub lambda: f64,
    /// `E = −Z²/(2η²)`
    pub energy: f64,
}

impl DerivedParams {
    /// `α_j = (D−j−1)/2` for `j = 1..D−2`.
    pub fn alpha(&self, j: u32) -> f64 {
        debug_assert!(j >= 1 && j + 2 <= self.dim);
        (self.dim as f64 - j as f64 - 1.0) / 2.0
    }
}

fn check_chain(dim: u32, l: u32, mu: &MuChain) -> core::result::Result<(), String> {
    let len = mu.len();
    if len != dim as u64 - 1 {
        return Err(format!("chain has {len} entries but D−1 = {}", dim - 1));
    }
    let runs = mu.runs();
    let first = runs[0].0;
    if dim == 2 {
        if first.unsigned_abs() != l as u64 {
            return Err(format!("for D = 2 the single entry must satisfy |μ_1| = l = {l}, got {first}"));
        }
        return Ok(());
    }
    if first != l as i64 {
        return Err(format!("μ_1 = {first} but must equal l = {l}"));
    }
    let mut pos = 1u64;
    for (i, w) in runs.windows(2).enumerate() {
        let (hi, hc) = w[0];
        let (lo, lc) = w[1];
        pos += hc as u64;
        let last_run = i + 2 == runs.len();
        if lo < 0 {
            if !(last_run && lc == 1) {
                return Err(format!(
                    "μ_{pos} = {lo} is negative; only μ_{} may be negative",
                    dim - 1
                ));
            }
            if lo.unsigned_abs() > hi as u64 {
                return Err(format!(
                    "|μ_{}| = {} exceeds μ_{} = {hi}",
                    dim - 1,
                    -lo,
                    dim - 2
                ));
            }
        } else if lo > hi {
            return Err(format!("μ_{pos} = {lo} exceeds μ_{} = {hi}; the chain must be non-increasing", pos - 1));
        }
    }
    if runs.len() == 1 && first < 0 {
        return Err(format!("μ_1 = {first} is negative"));
    }
    Ok(())
}

impl QuantumState {
    pub fn new(dim: u32, charge: f64, n: u32, l: u32, mu: MuChain) -> Result<Self> {
        if dim < 2 {
            return Err(Error::validation(format!("D = {dim} violates D ≥ 2")));
        }
        if !(charge > 0.0) || !charge.is_finite() {
            return Err(Error::validation(format!("Z = {charge} violates Z > 0")));
        }
        if n < 1 {
            return Err(Error::validation("n = 0 violates n ≥ 1"));
        }
        if l >= n {
            return Err(Error::validation(format!("l = {l} violates l ≤ n−1 = {}", n - 1)));
        }
        if (n - l - 1) as usize > orthopoly::MAX_DEGREE {
            return Err(Error::validation(format!(
                "n−l−1 = {} exceeds the supported polynomial degree {}",
                n - l - 1,
                orthopoly::MAX_DEGREE
            )));
        }
        check_chain(dim, l, &mu).map_err(Error::Validation)?;
        Ok(Self {
            dim,
            charge,
            n,
            l,
            mu,
        })
    }

    /// `(n, l = 0)` with the all-zero chain.
    pub fn ns(dim: u32, charge: f64, n: u32) -> Result<Self> {
        Self::new(dim, charge, n, 0, MuChain::constant(0, dim.saturating_sub(1)))
    }

    /// `l = n−1` with every `μ_j = n−1`.
    pub fn circular(dim: u32, charge: f64, n: u32) -> Result<Self> {
        let l = n.saturating_sub(1);
        Self::new(dim, charge, n, l, MuChain::constant(l as i64, dim.saturating_sub(1)))
    }

    pub fn ground(dim: u32, charge: f64) -> Result<Self> {
        Self::ns(dim, charge, 1)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn mu(&self) -> &MuChain {
        &self.mu
    }

    /// Magnetic number `m = μ_{D−1}`.
    pub fn m(&self) -> i64 {
        self.mu.last().unwrap_or(0)
    }

    /// Degree `n−l−1` of the radial polynomials.
    pub fn radial_degree(&self) -> usize {
        (self.n - self.l - 1) as usize
    }

    /// Same quantum numbers with a different nuclear charge.
    pub fn with_charge(&self, charge: f64) -> Result<Self> {
        Self::new(self.dim, charge, self.n, self.l, self.mu.clone())
    }

    /// `true` when every `μ_j` equals `l`.
    pub fn has_constant_chain(&self) -> bool {
        self.mu.runs().len() == 1
    }

    pub fn derive(&self) -> DerivedParams {
        let d = self.dim as f64;
        let eta = self.n as f64 + (d - 3.0) / 2.0;
        DerivedParams {
            dim: self.dim,
            eta,
            grand_l: self.l as f64 + (d - 3.0) / 2.0,
            lambda: eta / (2.0 * self.charge),
            energy: -self.charge * self.charge / (2.0 * eta * eta),
        }
    }
}

impl core::fmt::Display for QuantumState {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "D={} Z={} n={} l={} mu={}",
            self.dim, self.charge, self.n, self.l, self.mu
        )
    }
}

/// Laguerre parameter `2L+1 = D+2l−2` of the radial position polynomial.
pub(crate) fn laguerre_alpha(state: &QuantumState) -> f64 {
    state.dim as f64 + 2.0 * state.l as f64 - 2.0
}

/// Gegenbauer parameter `L+1 = l+(D−1)/2` of the momentum polynomial.
pub(crate) fn gegenbauer_alpha(state: &QuantumState) -> f64 {
    state.l as f64 + (state.dim as f64 - 1.0) / 2.0
}

/// `ρ_{n,l}(r)` without the angular factor.
pub fn position_radial_density(state: &QuantumState, r: f64) -> Result<SignedLogReal> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {r}")));
    }
    let p = state.derive();
    let x = r / p.lambda;
    let spec = PolynomialSpec::laguerre(state.radial_degree(), laguerre_alpha(state))?;
    let poly = orthopoly::eval_laguerre(&spec, x, Norm::Orthonormal)?;
    let d = state.dim as f64;
    let ln_pref = -d * libm::log(p.lambda) - libm::log(2.0 * p.eta) + 2.0 * state.l as f64 * libm::log(x) - x;
    Ok(poly.pow_abs(2.0).scale_exp(ln_pref))
}

/// `ln K²_{n,l}`.
pub fn log_momentum_norm_sq(state: &QuantumState) -> f64 {
    let p = state.derive();
    let d = state.dim as f64;
    let (n, l) = (state.n as f64, state.l as f64);
    -d * libm::log(state.charge) + (4.0 * p.grand_l + 6.0) * LN_2 + log_factorial(state.radial_degree() as u64)
        - libm::log(2.0 * PI)
        - libm::lgamma_r(n + l + d - 2.0).0
        + 2.0 * libm::lgamma_r(p.grand_l + 1.0).0
        + (d + 1.0) * libm::log(p.eta)
}

/// `M²_{n,l}(p)` without the angular factor.
pub fn momentum_radial_density(state: &QuantumState, p: f64) -> Result<SignedLogReal> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::domain(format!("momentum must be positive, got {p}")));
    }
    let dp = state.derive();
    let u = dp.eta * p / state.charge;
    let (ln_1pu2, y) = if u > 1.0 {
        let r = 1.0 / (u * u);
        (2.0 * libm::log(u) + libm::log1p(r), (r - 1.0) / (r + 1.0))
    } else {
        let u2 = u * u;
        (libm::log1p(u2), (1.0 - u2) / (1.0 + u2))
    };
    let spec = PolynomialSpec::gegenbauer(state.radial_degree(), gegenbauer_alpha(state))?;
    let poly = orthopoly::eval_gegenbauer(&spec, y, Norm::Standard)?;
    let ln_pref = log_momentum_norm_sq(state) + 2.0 * state.l as f64 * libm::log(u)
        - (2.0 * dp.grand_l + 4.0) * ln_1pu2;
    Ok(poly.pow_abs(2.0).scale_exp(ln_pref))
}

/// One factor class of the hyperspherical product over `j = 1..D−2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum AngularGroup {
    /// `μ_j = μ_{j+1} = value` for `j_start ≤ j ≤ j_end`.
    Flat { value: u64, j_start: u32, j_end: u32 },
    /// `μ_j = upper > μ_{j+1} = lower`.
    Step { j: u32, upper: u64, lower: u64 },
}

/// Splits the chain (with `|μ_{D−1}|`) into flat runs and steps.
pub(crate) fn angular_groups(state: &QuantumState) -> Vec<AngularGroup> {
    let runs = state.mu.magnitudes();
    let mut out = Vec::new();
    let mut start = 1u32;
    for (i, &(v, c)) in runs.iter().enumerate() {
        let end = start + c - 1;
        if c >= 2 {
            out.push(AngularGroup::Flat {
                value: v,
                j_start: start,
                j_end: end - 1,
            });
        }
        if i + 1 < runs.len() {
            out.push(AngularGroup::Step {
                j: end,
                upper: v,
                lower: runs[i + 1].0,
            });
        }
        start = end + 1;
    }
    out
}

/// `ln A_j` for one factor of the hyperspherical normalization.
pub(crate) fn log_harmonic_factor(alpha_j: f64, upper: u64, lower: u64) -> Result<f64> {
    let (mu, mu1) = (upper as f64, lower as f64);
    let k = upper - lower;
    Ok(libm::log(alpha_j + mu) + log_factorial(k) + 2.0 * log_gamma(alpha_j + mu1)?
        - libm::log(PI)
        - (1.0 - 2.0 * alpha_j - 2.0 * mu1) * LN_2
        - log_gamma(2.0 * alpha_j + mu + mu1)?)
}

/// `Σ_{j ∈ run} ln A_j` for a flat run, in closed form.
pub(crate) fn log_harmonic_flat(value: u64, alpha_end: f64, count: u32) -> Result<f64> {
    let c = count as f64;
    Ok(-0.5 * c * libm::log(PI) + log_pochhammer(value as f64 + alpha_end + 0.5, 0.5 * c)?)
}

/// `N²_{l,{μ}}` of the hyperspherical harmonic.
pub fn harmonic_norm_sq(state: &QuantumState) -> Result<SignedLogReal> {
    let dp = state.derive();
    let mut ln = -libm::log(2.0 * PI);
    for g in angular_groups(state) {
        ln += match g {
            AngularGroup::Flat { value, j_start, j_end } => {
                log_harmonic_flat(value, dp.alpha(j_end), j_end - j_start + 1)?
            }
            AngularGroup::Step { j, upper, lower } => log_harmonic_factor(dp.alpha(j), upper, lower)?,
        };
    }
    Ok(SignedLogReal::from_log(ln))
}
