//! Front end for the `raman` command: single evaluations, θ- and ψ-sweeps,
//! θ optimization, and CSV/JSON output.

pub mod args;
pub mod error;
pub mod format;
pub mod optimize;
pub mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use args::{Cli, Command};
pub use error::CliError;
pub use format::{format_float, OutputFormat};
pub use optimize::{maximize, optimize_theta, OptimumReport};
pub use sweep::{evaluate, run_sweep, AreaMode, Axis, SweepRecord, SweepSpec, ORACLE_TOLERANCE};

use args::OutputArgs;
use format::{write_records, CsvRow};

fn emit<T: CsvRow + serde::Serialize>(records: &[T], output: &OutputArgs) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_records(records, output.format, &mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            write_records(records, output.format, stdout.lock())?;
        }
    }
    Ok(())
}

fn check_oracle(records: &[SweepRecord]) -> Result<(), CliError> {
    match sweep::worst_oracle_diff(records) {
        Some(diff) if diff.is_nan() || diff > ORACLE_TOLERANCE => {
            Err(CliError::OracleDisagreement {
                diff,
                tolerance: ORACLE_TOLERANCE,
            })
        }
        _ => Ok(()),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => {
            let scheme = args.scheme.resolve()?;
            let record = evaluate(
                &scheme,
                args.theta,
                args.areas.mode().theta_c(args.theta),
                args.psi,
                args.oracle,
            )?;
            emit(&[record], &args.output)?;
            check_oracle(&[record])
        }
        Command::Sweep(args) => {
            let scheme = args.scheme.resolve()?;
            let theta = match (args.axis, args.theta) {
                (Axis::Psi, None) => {
                    return Err(CliError::Argument("ψ-sweeps need --theta".into()))
                }
                (Axis::Theta, None) if !args.areas.lock_areas && args.areas.theta_c.is_none() => {
                    return Err(CliError::Argument(
                        "θ-sweeps need --lock-areas or --theta-c".into(),
                    ))
                }
                (_, theta) => theta.unwrap_or(0.0),
            };
            let spec = SweepSpec {
                scheme,
                axis: args.axis,
                min: args.min,
                max: args.max,
                step: args.step,
                theta,
                areas: args.areas.mode(),
                psi_deg: args.psi,
                oracle: args.oracle,
            };
            let records = run_sweep(&spec)?;
            emit(&records, &args.output)?;
            check_oracle(&records)
        }
        Command::Optimize(args) => {
            let scheme = args.scheme.resolve()?;
            let report = optimize_theta(
                &scheme,
                args.psi,
                args.areas.mode(),
                (args.min, args.max),
                args.step,
                args.tol,
            )?;
            emit(&[report], &args.output)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_disagreement_is_an_error() {
        let mut record = evaluate(&raman_core::LevelScheme::rb85(), 3.0, 3.0, 90.0, true).unwrap();
        assert!(check_oracle(&[record]).is_ok());
        record.abs_diff = Some(2e-8);
        let err = check_oracle(&[record]).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        record.abs_diff = Some(f64::NAN);
        assert!(check_oracle(&[record]).is_err());
        assert!(check_oracle(&[]).is_ok());
    }
}
