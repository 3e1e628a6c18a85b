//! Comma-separated curve files for the β₁/β₂ sweep.
//!
//! UTF-8, LF line endings, header `alpha_deg,beta1_deg,beta2_deg,gap_deg`,
//! one row per sample with values to 9 significant digits. Samples where
//! β₂ is undefined leave `beta2_deg` and `gap_deg` empty.

use std::io::{Read, Write};

use golden_secant::solver::{sign_change_indices, SweepSeries};

use crate::CliError;

pub const HEADER: [&str; 4] = ["alpha_deg", "beta1_deg", "beta2_deg", "gap_deg"];
pub const SIGNIFICANT_DIGITS: usize = 9;

/// Fixed-point rendering of `x` rounded to `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 {
            "0".to_string()
        } else {
            x.to_string()
        };
    }
    // let the exponent come from the already-rounded mantissa so 9.9999…
    // carries into the next decade
    let sci = format!("{:.*e}", digits.saturating_sub(1), x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn field(x: Option<f64>) -> String {
    x.map(|v| format_significant(v, SIGNIFICANT_DIGITS))
        .unwrap_or_default()
}

pub fn write_curve<W: Write>(series: &SweepSeries, out: W) -> Result<(), CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(HEADER)?;
    for s in &series.samples {
        writer.write_record([
            field(Some(s.alpha.to_degrees())),
            field(Some(s.beta1.to_degrees())),
            field(s.beta2.map(f64::to_degrees)),
            field(s.gap().map(f64::to_degrees)),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// One parsed row of a curve file, in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub alpha_deg: f64,
    pub beta1_deg: f64,
    pub beta2_deg: Option<f64>,
    pub gap_deg: Option<f64>,
}

pub fn read_curve<R: Read>(input: R) -> Result<Vec<CurveRow>, CliError> {
    let mut reader = csv::ReaderBuilder::new().from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.iter().ne(HEADER) {
        return Err(CliError::Domain(format!(
            "unexpected curve header: {headers:?}"
        )));
    }
    let parse = |s: &str| -> Result<Option<f64>, CliError> {
        if s.is_empty() {
            return Ok(None);
        }
        s.parse()
            .map(Some)
            .map_err(|_| CliError::Domain(format!("malformed number in curve file: {s:?}")))
    };
    reader
        .records()
        .map(|rec| {
            let rec = rec?;
            let required = |i: usize| {
                parse(&rec[i])?.ok_or_else(|| CliError::Domain(format!("missing {}", HEADER[i])))
            };
            Ok(CurveRow {
                alpha_deg: required(0)?,
                beta1_deg: required(1)?,
                beta2_deg: parse(&rec[2])?,
                gap_deg: parse(&rec[3])?,
            })
        })
        .collect()
}

/// α interval (degrees) of the single gap sign change, if there is exactly one.
pub fn rows_bracket(rows: &[CurveRow]) -> Option<(f64, f64)> {
    match sign_change_indices(rows.iter().map(|r| r.gap_deg)).as_slice() {
        [(i, j)] => Some((rows[*i].alpha_deg, rows[*j].alpha_deg)),
        _ => None,
    }
}

pub fn rows_sign_changes(rows: &[CurveRow]) -> usize {
    sign_change_indices(rows.iter().map(|r| r.gap_deg)).len()
}
