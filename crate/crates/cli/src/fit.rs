//! Least-squares fits of sweep gaps.

use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::error::{CliError, Result};
use crate::sweep::Row;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// `gap ≈ c·D^{−e}` with free `e`.
    Power,
    /// The power fit, additionally judged against `e = 1`.
    InverseD,
}

impl FromStr for Model {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(Model::Power),
            "inverse-d" => Ok(Model::InverseD),
            _ => Err(CliError::validation(format!("unknown model `{s}`; expected power or inverse-d"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitReport {
    pub q: f64,
    pub points: usize,
    pub exponent: f64,
    /// Signed `c`.
    pub amplitude: f64,
    /// RMS residual of `ln|gap|`.
    pub residual: f64,
    /// For [`Model::InverseD`], whether `e ∈ [0.8, 1.2]`.
    pub first_order: Option<bool>,
}

/// Solves `min ‖A x − y‖₂` by SVD. `rows` are the rows of `A`.
pub fn least_squares(rows: &[Vec<f64>], y: &[f64]) -> Result<Vec<f64>> {
    let (n, k) = (rows.len(), rows.first().map_or(0, Vec::len));
    if n < k || k == 0 || y.len() != n {
        return Err(CliError::validation(format!("{n} points cannot determine {k} coefficients")));
    }
    let a = DMatrix::from_fn(n, k, |i, j| rows[i][j]);
    // column scaling keeps the SVD well conditioned when columns differ by decades
    let scale: Vec<f64> = (0..k).map(|j| a.column(j).amax().max(f64::MIN_POSITIVE)).collect();
    let a = DMatrix::from_fn(n, k, |i, j| rows[i][j] / scale[j]);
    let x = a
        .svd(true, true)
        .solve(&DVector::from_column_slice(y), 1e-14)
        .map_err(|e| CliError::validation(e.to_string()))?;
    Ok(x.iter().zip(&scale).map(|(v, s)| v / s).collect())
}

pub fn fit_convergence(rows: &[Row], model: Model) -> Result<FitReport> {
    let pts: Vec<&Row> = rows.iter().filter(|r| r.gap.is_finite() && r.gap != 0.0).collect();
    if pts.len() < 3 {
        return Err(CliError::validation(format!("need at least 3 rows with finite gaps, got {}", pts.len())));
    }
    let q = pts[0].q;
    if pts.iter().any(|r| r.q != q) {
        return Err(CliError::validation("rows mix several q values; fit them separately"));
    }
    let sign = pts[0].gap.signum();
    if pts.iter().any(|r| r.gap.signum() != sign) {
        return Err(CliError::validation("gap changes sign; a power law does not fit"));
    }
    let design: Vec<Vec<f64>> = pts.iter().map(|r| vec![1.0, (r.dim as f64).ln()]).collect();
    let y: Vec<f64> = pts.iter().map(|r| r.gap.abs().ln()).collect();
    let c = least_squares(&design, &y)?;
    let ss: f64 = design
        .iter()
        .zip(&y)
        .map(|(d, y)| (c[0] + c[1] * d[1] - y).powi(2))
        .sum();
    let exponent = -c[1];
    Ok(FitReport {
        q,
        points: pts.len(),
        exponent,
        amplitude: sign * c[0].exp(),
        residual: (ss / pts.len() as f64).sqrt(),
        first_order: match model {
            Model::Power => None,
            Model::InverseD => Some((0.8..=1.2).contains(&exponent)),
        },
    })
}

/// One fit per distinct `q`, in ascending `q`.
pub fn fit_by_q(rows: &[Row], model: Model) -> Vec<(f64, Result<FitReport>)> {
    let mut qs: Vec<f64> = rows.iter().map(|r| r.q).collect();
    qs.sort_by(f64::total_cmp);
    qs.dedup();
    qs.into_iter()
        .map(|q| {
            let sub: Vec<Row> = rows.iter().filter(|r| r.q == q).cloned().collect();
            (q, fit_convergence(&sub, model))
        })
        .collect()
}
