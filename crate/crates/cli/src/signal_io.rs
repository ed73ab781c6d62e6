//! Signal files: CSV with one `re,im` sample per line (blank lines and `#`
//! comments ignored), or a JSON array of `[re, im]` pairs.

use std::fmt::Write;

use circlefft::ComplexValue;
use clap::ValueEnum;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: u64,
    pub message: String,
}

impl ParseError {
    fn new(line: u64, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Vec<ComplexValue>, ParseError> {
    let values = match format {
        Format::Csv => parse_csv(text)?,
        Format::Json => parse_json(text)?,
    };
    if values.is_empty() {
        return Err(ParseError::new(1, "no samples found"));
    }
    Ok(values)
}

fn parse_csv(text: &str) -> Result<Vec<ComplexValue>, ParseError> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(ParseError::new(
                line,
                format!("expected 're,im', found {} fields", fields.len()),
            ));
        }
        let re = parse_number(fields[0], line)?;
        let im = parse_number(fields[1], line)?;
        values.push(ComplexValue::new(re, im));
    }
    Ok(values)
}

fn parse_number(field: &str, line: u64) -> Result<f64, ParseError> {
    let value: f64 = field
        .parse()
        .map_err(|_| ParseError::new(line, format!("'{field}' is not a number")))?;
    if !value.is_finite() {
        return Err(ParseError::new(line, format!("'{field}' is not finite")));
    }
    Ok(value)
}

fn parse_json(text: &str) -> Result<Vec<ComplexValue>, ParseError> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line() as u64, e.to_string()))?;
    Ok(pairs
        .into_iter()
        .map(|[re, im]| ComplexValue::new(re, im))
        .collect())
}

/// Shortest round-trip decimal, with `-0` written as `0`.
fn number(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        v.to_string()
    }
}

pub fn format(values: &[ComplexValue], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            for v in values {
                let _ = writeln!(out, "{},{}", number(v.re), number(v.im));
            }
        }
        Format::Json => {
            out.push('[');
            for (i, v) in values.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "[{},{}]", number(v.re), number(v.im));
            }
            out.push_str("]\n");
        }
    }
    out
}
