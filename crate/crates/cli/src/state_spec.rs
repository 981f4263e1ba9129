//! Text form of a state: `D=<int> Z=<float> n=<int> l=<int> mu=<runs>`.
//!
//! `runs` is a comma list of `value x count` items such as `2x5,1x12,0x2`.
//! One count may be `*`, which absorbs whatever length is left once `D` is
//! known; this is how sweeps keep a chain template while `D` varies.
//! `mu=ns` and `mu=circular` are the two constant chains. Without `mu` the
//! chain is `l` repeated `D−1` times.

use std::fmt;
use std::str::FromStr;

use hydrent_core::hydrogenic::{MuChain, QuantumState};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum MuSpec {
    Ns,
    Circular,
    /// `(value, count)` runs; `None` is the free `*` run.
    Runs(Vec<(i64, Option<u32>)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateTemplate {
    pub dim: Option<u32>,
    pub charge: f64,
    pub n: u32,
    pub l: u32,
    pub mu: Option<MuSpec>,
}

impl Default for StateTemplate {
    fn default() -> Self {
        Self {
            dim: None,
            charge: 1.0,
            n: 1,
            l: 0,
            mu: None,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| CliError::validation(format!("cannot parse {key}={v}")))
}

impl FromStr for MuSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ns" => return Ok(MuSpec::Ns),
            "circular" => return Ok(MuSpec::Circular),
            _ => {}
        }
        let mut runs = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (v, c) = match item.split_once('x') {
                Some((v, c)) => (v, Some(c.trim())),
                None => (item, None),
            };
            let value: i64 = parse_num("mu", v)?;
            let count = match c {
                Some("*") => None,
                Some(c) => Some(parse_num::<u32>("mu", c)?),
                None => Some(1),
            };
            if count == Some(0) {
                return Err(CliError::validation(format!("empty run `{item}` in mu")));
            }
            runs.push((value, count));
        }
        if runs.iter().filter(|r| r.1.is_none()).count() > 1 {
            return Err(CliError::validation("at most one `*` run is allowed in mu"));
        }
        Ok(MuSpec::Runs(runs))
    }
}

impl fmt::Display for MuSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuSpec::Ns => f.write_str("ns"),
            MuSpec::Circular => f.write_str("circular"),
            MuSpec::Runs(runs) => {
                for (i, (v, c)) in runs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    match c {
                        Some(c) => write!(f, "{v}x{c}")?,
                        None => write!(f, "{v}x*")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for StateTemplate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let mut t = StateTemplate::default();
        for tok in s.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| CliError::validation(format!("expected key=value, got `{tok}`")))?;
            t.set(k, v)?;
        }
        Ok(t)
    }
}

impl StateTemplate {
    /// Sets one field from its text key (`D`, `Z`, `n`, `l`, `mu`).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "D" => self.dim = Some(parse_num(key, value)?),
            "Z" => self.charge = parse_num(key, value)?,
            "n" => self.n = parse_num(key, value)?,
            "l" => self.l = parse_num(key, value)?,
            "mu" => self.mu = Some(value.parse()?),
            _ => return Err(CliError::validation(format!("unknown state key `{key}`"))),
        }
        Ok(())
    }

    /// The state at dimension `dim`.
    pub fn at(&self, dim: u32) -> Result<QuantumState> {
        if dim < 2 {
            return Err(CliError::validation(format!("D must be at least 2, got {dim}")));
        }
        let len = dim - 1;
        let chain = match &self.mu {
            None => MuChain::constant(self.l as i64, len),
            Some(MuSpec::Ns) => MuChain::constant(0, len),
            Some(MuSpec::Circular) => MuChain::constant(self.n as i64 - 1, len),
            Some(MuSpec::Runs(runs)) => {
                let fixed: u64 = runs.iter().filter_map(|r| r.1).map(u64::from).sum();
                let free = runs.iter().any(|r| r.1.is_none());
                let rest = len as i64 - fixed as i64;
                if rest < 0 || (!free && rest != 0) || (free && rest == 0) {
                    return Err(CliError::validation(format!(
                        "mu={} has {fixed} fixed entries but D−1 = {len}",
                        self.mu.as_ref().unwrap()
                    )));
                }
                MuChain::from_runs(runs.iter().map(|&(v, c)| (v, c.unwrap_or(rest as u32))))
            }
        };
        Ok(QuantumState::new(dim, self.charge, self.n, self.l, chain)?)
    }

    /// The state at the template's own `D`.
    pub fn state(&self) -> Result<QuantumState> {
        let dim = self.dim.ok_or_else(|| CliError::validation("no dimension given (D=...)"))?;
        self.at(dim)
    }
}

impl fmt::Display for StateTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = self.dim {
            write!(f, "D={d} ")?;
        }
        write!(f, "Z={} n={} l={}", self.charge, self.n, self.l)?;
        if let Some(mu) = &self.mu {
            write!(f, " mu={mu}")?;
        }
        Ok(())
    }
}
