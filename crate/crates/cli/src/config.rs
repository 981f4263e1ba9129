//! Flat `key = value` config files.
//!
//! Every key is a long flag of the chosen verb. The entries are spliced in
//! front of the command-line flags, and later flags override earlier ones,
//! so the command line wins.

use std::path::Path;

use crate::error::{CliError, Result};

/// Flags that take no value; `key = true` switches them on.
pub const SWITCHES: [&str; 2] = ["strict", "no-timing"];

pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::validation(format!("config line {}: expected key = value", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || k == "config" {
            return Err(CliError::validation(format!("config line {}: bad key `{k}`", i + 1)));
        }
        out.push((k.to_owned(), v.trim_matches('"').to_owned()));
    }
    Ok(out)
}

/// Turns config entries into `--key value` tokens.
pub fn to_args(entries: &[(String, String)]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (k, v) in entries {
        if SWITCHES.contains(&k.as_str()) {
            match v.as_str() {
                "true" | "yes" | "1" => out.push(format!("--{k}")),
                "false" | "no" | "0" => {}
                _ => return Err(CliError::validation(format!("config key {k} expects true or false, got `{v}`"))),
            }
        } else {
            out.push(format!("--{k}"));
            out.push(v.clone());
        }
    }
    Ok(out)
}

/// Expands `--config FILE` in `argv`: the file's flags go right after the verb.
pub fn expand_argv(argv: Vec<String>) -> Result<Vec<String>> {
    let Some(pos) = argv.iter().position(|a| a == "--config" || a.starts_with("--config=")) else {
        return Ok(argv);
    };
    let (path, width) = match argv[pos].strip_prefix("--config=") {
        Some(p) => (p.to_owned(), 1),
        None => (
            argv.get(pos + 1)
                .cloned()
                .ok_or_else(|| CliError::validation("--config needs a file path"))?,
            2,
        ),
    };
    let mut rest: Vec<String> = argv[..pos].to_vec();
    rest.extend_from_slice(&argv[pos + width..]);
    let extra = to_args(&parse(&std::fs::read_to_string(Path::new(&path))?)?)?;
    // the verb is the first token after the program name that is not a flag
    let verb = rest.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 2);
    let at = verb.unwrap_or(rest.len()).min(rest.len());
    rest.splice(at..at, extra);
    Ok(rest)
}
