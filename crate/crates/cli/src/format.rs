//! Fixed float formatting and record writers.

use std::io::Write;

use serde::Serialize;

use crate::error::CliError;

const SIGNIFICANT: i32 = 10;

/// Formats like C's `%.10g`: ten significant digits, trailing zeros trimmed,
/// exponent notation outside `1e-4 ≤ |x| < 1e10`.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    // round first so the exponent reflects the printed mantissa
    let sci = format!("{:.*e}", (SIGNIFICANT - 1) as usize, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..SIGNIFICANT).contains(&exponent) {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exponent.abs())
    } else {
        let decimals = (SIGNIFICANT - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Rows that can be written as fixed-format CSV.
pub trait CsvRow {
    fn header(&self) -> Vec<&'static str>;
    fn fields(&self) -> Vec<f64>;
}

pub fn write_records<T: CsvRow + Serialize, W: Write>(
    records: &[T],
    format: OutputFormat,
    out: W,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                writer.write_record(first.header())?;
            }
            for record in records {
                writer.write_record(record.fields().into_iter().map(format_float))?;
            }
            writer.flush()?;
        }
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
