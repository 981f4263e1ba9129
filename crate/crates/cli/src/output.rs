//! CSV, JSON and plain-text tables.
//!
//! Floats are written with 17 significant digits, so reading a table back
//! reproduces every numeric column bit for bit. The CSV header is fixed;
//! row failures travel in the JSON `error` field and as NaN in CSV.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::sweep::{Failure, MethodSel, Row, SpaceSel};

pub const CSV_HEADER: [&str; 10] = ["D", "q", "space", "method", "value", "radial", "angular", "gap", "err_est", "wall_ms"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::validation(format!("unknown format `{s}`; expected text, csv or json"))),
        }
    }
}

impl Format {
    /// Guess from a file extension, defaulting to CSV.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("txt") => Format::Text,
            _ => Format::Csv,
        }
    }
}

/// `{:.16e}`: 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_f64(field: &str, col: &str) -> Result<f64> {
    field
        .parse()
        .map_err(|_| CliError::validation(format!("column {col}: cannot parse `{field}`")))
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.dim.to_string(),
            fmt_f64(r.q),
            r.space.to_string(),
            r.method.to_string(),
            fmt_f64(r.value),
            fmt_f64(r.radial),
            fmt_f64(r.angular),
            fmt_f64(r.gap),
            fmt_f64(r.err_est),
            fmt_f64(r.wall_ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<Row>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_owned).collect();
    if header != CSV_HEADER {
        return Err(CliError::validation(format!("unexpected CSV header {header:?}")));
    }
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let f = |i: usize| parse_f64(&rec[i], CSV_HEADER[i]);
        rows.push(Row {
            dim: rec[0]
                .parse()
                .map_err(|_| CliError::validation(format!("column D: cannot parse `{}`", &rec[0])))?,
            q: f(1)?,
            space: rec[2].parse()?,
            method: rec[3].parse()?,
            value: f(4)?,
            radial: f(5)?,
            angular: f(6)?,
            gap: f(7)?,
            err_est: f(8)?,
            wall_ms: f(9)?,
            failure: None,
        });
    }
    Ok(rows)
}

/// Floats as 17-digit strings would not be JSON numbers, so NaN maps to
/// `null` and everything else goes through serde_json's round-trip printer.
#[derive(Serialize, Deserialize)]
struct JsonRow {
    #[serde(rename = "D")]
    dim: u32,
    q: f64,
    space: String,
    method: String,
    value: Option<f64>,
    radial: Option<f64>,
    angular: Option<f64>,
    gap: Option<f64>,
    err_est: Option<f64>,
    wall_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    convergence_failure: bool,
}

fn some(x: f64) -> Option<f64> {
    (!x.is_nan()).then_some(x)
}

fn nan(x: Option<f64>) -> f64 {
    x.unwrap_or(f64::NAN)
}

pub fn write_json<W: Write>(rows: &[Row], out: W) -> Result<()> {
    let js: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            dim: r.dim,
            q: r.q,
            space: r.space.to_string(),
            method: r.method.to_string(),
            value: some(r.value),
            radial: some(r.radial),
            angular: some(r.angular),
            gap: some(r.gap),
            err_est: some(r.err_est),
            wall_ms: some(r.wall_ms),
            error: r.failure.as_ref().map(|f| f.message.clone()),
            convergence_failure: r.failure.as_ref().is_some_and(|f| f.convergence),
        })
        .collect();
    serde_json::to_writer_pretty(out, &js)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<Row>> {
    let js: Vec<JsonRow> = serde_json::from_reader(input)?;
    js.into_iter()
        .map(|j| {
            Ok(Row {
                dim: j.dim,
                q: j.q,
                space: j.space.parse::<SpaceSel>()?,
                method: j.method.parse::<MethodSel>()?,
                value: nan(j.value),
                radial: nan(j.radial),
                angular: nan(j.angular),
                gap: nan(j.gap),
                err_est: nan(j.err_est),
                wall_ms: nan(j.wall_ms),
                failure: j.error.map(|message| Failure {
                    convergence: j.convergence_failure,
                    message,
                }),
            })
        })
        .collect()
}

/// Aligned table with the asymptotic value and `gap·D` spelled out.
pub struct TextTable<'a>(pub &'a [Row]);

impl fmt::Display for TextTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>7} {:>6} {:>9} {:>22} {:>22} {:>12} {:>10} {:>9} {:>9}",
            "D", "q", "space", "exact", "asymptotic", "gap", "gap*D", "err_est", "ms"
        )?;
        for r in self.0 {
            let (ex, asy) = match r.method {
                MethodSel::Exact => (r.value, f64::NAN),
                MethodSel::Asymptotic => (f64::NAN, r.value),
                MethodSel::Both => (r.value, r.asymptotic()),
            };
            writeln!(
                f,
                "{:>7} {:>6} {:>9} {:>22.12} {:>22.12} {:>12.4e} {:>10.4} {:>9.1e} {:>9.2}",
                r.dim,
                r.q,
                r.space,
                ex,
                asy,
                r.gap,
                r.scaled_gap(),
                r.err_est,
                r.wall_ms
            )?;
            if let Some(fail) = &r.failure {
                writeln!(f, "        ! {}", fail.message)?;
            }
        }
        Ok(())
    }
}

pub fn write_rows<W: Write>(rows: &[Row], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(rows, out),
        Format::Json => {
            write_json(rows, &mut out)?;
            writeln!(out)?;
            Ok(())
        }
        Format::Text => {
            write!(out, "{}", TextTable(rows))?;
            Ok(())
        }
    }
}

pub fn read_rows<R: Read>(input: R, format: Format) -> Result<Vec<Row>> {
    match format {
        Format::Csv => read_csv(input),
        Format::Json => read_json(input),
        Format::Text => Err(CliError::validation("text tables cannot be read back; use csv or json")),
    }
}
