//! Exact-versus-asymptotic sweeps over `D` and `q`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use hydrent_core::asymptotics::{renyi_asymptotic, shannon_conjecture, Part, SeriesOptions};
use hydrent_core::entropic::{renyi_entropy, shannon_exact, EntropyResult, Space};
use hydrent_core::hydrogenic::QuantumState;
use hydrent_core::quadrature::QuadratureSpec;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::state_spec::StateTemplate;

macro_rules! text_enum {
    ($name:ident { $($var:ident => $txt:literal),+ $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name { $($var),+ }

        impl $name {
            pub fn as_str(self) -> &'static str {
                match self { $($name::$var => $txt),+ }
            }
        }

        impl FromStr for $name {
            type Err = CliError;
            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($txt => Ok($name::$var),)+
                    other => Err(CliError::validation(format!(
                        concat!("unknown ", stringify!($name), " `{}`; expected one of: ") , other
                    ) + &[$($txt),+].join(", "))),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

text_enum!(SpaceSel { Position => "position", Momentum => "momentum" });
text_enum!(MethodSel { Exact => "exact", Asymptotic => "asymptotic", Both => "both" });
text_enum!(PartSel { Total => "total", Radial => "radial", Angular => "angular" });

impl From<SpaceSel> for Space {
    fn from(s: SpaceSel) -> Self {
        match s {
            SpaceSel::Position => Space::Position,
            SpaceSel::Momentum => Space::Momentum,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub template: StateTemplate,
    pub dims: Vec<u32>,
    pub qs: Vec<f64>,
    pub space: SpaceSel,
    pub method: MethodSel,
    pub part: PartSel,
    pub quadrature: QuadratureSpec,
    pub series: SeriesOptions,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Record wall time per row. Off gives byte-identical output across runs.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(template: StateTemplate, dims: Vec<u32>, qs: Vec<f64>) -> Self {
        Self {
            template,
            dims,
            qs,
            space: SpaceSel::Position,
            method: MethodSel::Both,
            part: PartSel::Total,
            quadrature: QuadratureSpec::default(),
            series: SeriesOptions::default(),
            jobs: 0,
            timing: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(CliError::validation("empty D list"));
        }
        if self.qs.is_empty() {
            return Err(CliError::validation("empty q list"));
        }
        if let Some(d) = self.dims.iter().find(|&&d| d < 2) {
            return Err(CliError::validation(format!("D values must be at least 2, got {d}")));
        }
        if let Some(q) = self.qs.iter().find(|&&q| !(q > 0.0) || !q.is_finite()) {
            return Err(CliError::validation(format!("q values must be positive, got {q}")));
        }
        self.quadrature.validate()?;
        for &d in &self.dims {
            self.template.at(d)?;
        }
        Ok(())
    }
}

/// One `(D, q)` evaluation.
///
/// `value`, `radial`, `angular` come from the exact engine unless the method
/// is `asymptotic`; `gap` is asymptotic minus exact for the selected part.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub dim: u32,
    pub q: f64,
    pub space: SpaceSel,
    pub method: MethodSel,
    pub value: f64,
    pub radial: f64,
    pub angular: f64,
    pub gap: f64,
    pub err_est: f64,
    pub wall_ms: f64,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub convergence: bool,
    pub message: String,
}

impl Row {
    pub fn asymptotic(&self) -> f64 {
        match self.method {
            MethodSel::Asymptotic => self.value,
            _ => self.value + self.gap,
        }
    }

    /// `gap·D`, which levels off for a first-order correction.
    pub fn scaled_gap(&self) -> f64 {
        self.gap * self.dim as f64
    }
}

fn pick(r: &EntropyResult, part: PartSel) -> f64 {
    match part {
        PartSel::Total => r.value,
        PartSel::Radial => r.radial,
        PartSel::Angular => r.angular,
    }
}

fn exact(state: &QuantumState, q: f64, space: Space, spec: &QuadratureSpec) -> hydrent_core::Result<EntropyResult> {
    if q == 1.0 {
        shannon_exact(state, space, spec)
    } else {
        renyi_entropy(state, q, space, spec)
    }
}

fn asymptotic(state: &QuantumState, q: f64, space: Space, opts: SeriesOptions) -> hydrent_core::Result<EntropyResult> {
    if q != 1.0 {
        return renyi_asymptotic(state, q, space, opts);
    }
    let radial = shannon_conjecture(state, space, Part::Radial).value();
    let angular = shannon_conjecture(state, space, Part::Angular).value();
    Ok(EntropyResult {
        value: radial + angular,
        space,
        method: hydrent_core::entropic::Method::Asymptotic,
        radial,
        angular,
        q,
        error_estimate: f64::NAN,
        order: Some(0),
    })
}

fn failure(e: &hydrent_core::Error) -> Failure {
    Failure {
        convergence: matches!(e, hydrent_core::Error::Convergence { .. }),
        message: e.to_string(),
    }
}

/// Evaluates one row; failures are recorded in the row.
pub fn evaluate(cfg: &SweepConfig, dim: u32, q: f64) -> Row {
    let start = Instant::now();
    let space: Space = cfg.space.into();
    let mut row = Row {
        dim,
        q,
        space: cfg.space,
        method: cfg.method,
        value: f64::NAN,
        radial: f64::NAN,
        angular: f64::NAN,
        gap: f64::NAN,
        err_est: f64::NAN,
        wall_ms: 0.0,
        failure: None,
    };
    let state = match cfg.template.at(dim) {
        Ok(s) => s,
        Err(e) => {
            row.failure = Some(Failure {
                convergence: false,
                message: e.to_string(),
            });
            return row;
        }
    };
    let ex = match cfg.method {
        MethodSel::Asymptotic => None,
        _ => Some(exact(&state, q, space, &cfg.quadrature)),
    };
    let asy = match cfg.method {
        MethodSel::Exact => None,
        _ => Some(asymptotic(&state, q, space, cfg.series)),
    };
    let primary = match cfg.method {
        MethodSel::Asymptotic => asy.as_ref(),
        _ => ex.as_ref(),
    };
    match primary {
        Some(Ok(r)) => {
            row.value = pick(r, cfg.part);
            row.radial = r.radial;
            row.angular = r.angular;
            row.err_est = r.error_estimate;
        }
        Some(Err(e)) => row.failure = Some(failure(e)),
        None => {}
    }
    if let (Some(Ok(e)), Some(a)) = (&ex, &asy) {
        match a {
            Ok(a) => row.gap = pick(a, cfg.part) - pick(e, cfg.part),
            Err(err) => row.failure = Some(failure(err)),
        }
    }
    if cfg.timing {
        row.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    }
    row
}

/// All rows, sorted by `D` then `q`. Values do not depend on `jobs`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<Row>> {
    cfg.validate()?;
    let mut tasks: Vec<(u32, f64)> = cfg
        .dims
        .iter()
        .flat_map(|&d| cfg.qs.iter().map(move |&q| (d, q)))
        .collect();
    tasks.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    tasks.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::validation(format!("cannot start {} worker threads: {e}", cfg.jobs)))?;
    Ok(pool.install(|| tasks.par_iter().map(|&(d, q)| evaluate(cfg, d, q)).collect()))
}

/// `100,200,400` or a geometric range `start:stop:factor`.
pub fn parse_dims(s: &str) -> Result<Vec<u32>> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| CliError::validation(format!("bad dimension `{t}`")))
    };
    match parts.as_slice() {
        [start, stop, factor] => {
            let (start, stop) = (num(start)?, num(stop)?);
            let factor: f64 = factor
                .trim()
                .parse()
                .map_err(|_| CliError::validation(format!("bad range factor `{factor}`")))?;
            if !(factor > 1.0) || start < 2 || stop < start {
                return Err(CliError::validation(format!("bad geometric range `{s}`")));
            }
            let mut out = Vec::new();
            let mut d = start as f64;
            while d.round() <= stop as f64 {
                let v = d.round() as u32;
                if out.last() != Some(&v) {
                    out.push(v);
                }
                d *= factor;
            }
            Ok(out)
        }
        [list] => list.split(',').filter(|t| !t.trim().is_empty()).map(num).collect(),
        _ => Err(CliError::validation(format!("bad dimension list `{s}`"))),
    }
}

pub fn parse_qs(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::validation(format!("bad q value `{t}`")))
        })
        .collect()
}
