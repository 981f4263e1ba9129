//! Position plus momentum entropies at conjugate orders, per dimension.

use hydrent_core::asymptotics::{
    conjugate_order, shannon_conjecture, total_momentum_renyi_asymptotic, total_position_renyi_asymptotic,
    uncertainty_sum_limit, Part, SeriesOptions, MOMENTUM_Q_MIN,
};
use hydrent_core::entropic::{renyi_entropy, shannon_exact, Space};
use hydrent_core::hydrogenic::QuantumState;
use hydrent_core::quadrature::QuadratureSpec;

use crate::error::{CliError, Result};
use crate::state_spec::StateTemplate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Exact,
    Asymptotic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SaturationRow {
    pub dim: u32,
    pub engine: Engine,
    pub position: f64,
    pub momentum: f64,
    /// `(R_q + R_p)/D`
    pub per_dim: f64,
    /// `per_dim − limit`
    pub deviation: f64,
    /// `10 ln D / D`
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SaturationReport {
    pub q: f64,
    pub p: f64,
    pub limit: f64,
    pub rows: Vec<SaturationRow>,
}

impl SaturationReport {
    fn deviations(&self, engine: Engine) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| r.engine == engine)
            .map(|r| r.deviation.abs())
            .collect()
    }

    /// Whether `|deviation|` strictly decreases with `D` for `engine`.
    pub fn monotone(&self, engine: Engine) -> bool {
        self.deviations(engine).windows(2).all(|w| w[1] < w[0])
    }

    /// Whether every asymptotic row lies within its `10 ln D / D` bound.
    pub fn within_bound(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.engine == Engine::Asymptotic)
            .all(|r| r.deviation.abs() <= r.bound)
    }
}

#[derive(Clone, Debug)]
pub struct SaturationConfig {
    pub template: StateTemplate,
    pub dims: Vec<u32>,
    pub engines: Vec<Engine>,
    /// The exact engine only runs up to this dimension.
    pub exact_max_dim: u32,
    pub quadrature: QuadratureSpec,
    pub series: SeriesOptions,
}

fn pair(state: &QuantumState, q: f64, p: f64, engine: Engine, cfg: &SaturationConfig) -> Result<(f64, f64)> {
    let shannon = q == 1.0;
    Ok(match (engine, shannon) {
        (Engine::Exact, true) => (
            shannon_exact(state, Space::Position, &cfg.quadrature)?.value,
            shannon_exact(state, Space::Momentum, &cfg.quadrature)?.value,
        ),
        (Engine::Exact, false) => (
            renyi_entropy(state, q, Space::Position, &cfg.quadrature)?.value,
            renyi_entropy(state, p, Space::Momentum, &cfg.quadrature)?.value,
        ),
        (Engine::Asymptotic, true) => (
            shannon_conjecture(state, Space::Position, Part::Total).value(),
            shannon_conjecture(state, Space::Momentum, Part::Total).value(),
        ),
        (Engine::Asymptotic, false) => (
            total_position_renyi_asymptotic(state, q, cfg.series)?.value(),
            total_momentum_renyi_asymptotic(state, p, cfg.series)?.value(),
        ),
    })
}

pub fn check_saturation(q: f64, cfg: &SaturationConfig) -> Result<SaturationReport> {
    if !(q > MOMENTUM_Q_MIN) {
        return Err(CliError::validation(format!("saturation needs q > {MOMENTUM_Q_MIN}, got {q}")));
    }
    let p = conjugate_order(q)?;
    if !(p > MOMENTUM_Q_MIN) {
        return Err(CliError::validation(format!(
            "conjugate order p = {p} is not above {MOMENTUM_Q_MIN}; use q < {}",
            MOMENTUM_Q_MIN / (2.0 * MOMENTUM_Q_MIN - 1.0)
        )));
    }
    if cfg.dims.is_empty() {
        return Err(CliError::validation("empty D list"));
    }
    let limit = uncertainty_sum_limit(q)?;
    let mut dims = cfg.dims.clone();
    dims.sort_unstable();
    dims.dedup();
    let mut rows = Vec::new();
    for &engine in &cfg.engines {
        for &dim in &dims {
            if engine == Engine::Exact && dim > cfg.exact_max_dim {
                continue;
            }
            let state = cfg.template.at(dim)?;
            let (position, momentum) = pair(&state, q, p, engine, cfg)?;
            let d = dim as f64;
            let per_dim = (position + momentum) / d;
            rows.push(SaturationRow {
                dim,
                engine,
                position,
                momentum,
                per_dim,
                deviation: per_dim - limit,
                bound: 10.0 * d.ln() / d,
            });
        }
    }
    Ok(SaturationReport { q, p, limit, rows })
}
