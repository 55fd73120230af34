//! Single evaluations and ordered parameter sweeps.

use rayon::prelude::*;
use serde::Serialize;

use raman_core::oracle::DEFAULT_PHOTON_CUTOFF;
use raman_core::{emission_probability, evolve_and_measure, LevelScheme, RamanInput};

use crate::error::CliError;
use crate::format::CsvRow;

/// Largest tolerated `|w_kernel - w_oracle|` in self-checking mode.
pub const ORACLE_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub theta: f64,
    pub theta_c: f64,
    pub psi_deg: f64,
    pub w: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_diff: Option<f64>,
}

impl CsvRow for SweepRecord {
    fn header(&self) -> Vec<&'static str> {
        let mut header = vec!["theta", "theta_c", "psi_deg", "w"];
        if self.w_oracle.is_some() {
            header.extend(["w_oracle", "abs_diff"]);
        }
        header
    }

    fn fields(&self) -> Vec<f64> {
        let mut fields = vec![self.theta, self.theta_c, self.psi_deg, self.w];
        fields.extend(self.w_oracle);
        fields.extend(self.abs_diff);
        fields
    }
}

/// Emission probability at one point; with `oracle` also the Fock-space value.
pub fn evaluate(
    scheme: &LevelScheme,
    theta: f64,
    theta_c: f64,
    psi_deg: f64,
    oracle: bool,
) -> Result<SweepRecord, CliError> {
    let input = RamanInput::linear(*scheme, theta_c, theta, psi_deg.to_radians());
    let w = emission_probability(&input)?.w;
    let (w_oracle, abs_diff) = if oracle {
        let value = evolve_and_measure(&input, DEFAULT_PHOTON_CUTOFF)?;
        (Some(value), Some((value - w).abs()))
    } else {
        (None, None)
    };
    Ok(SweepRecord {
        theta,
        theta_c,
        psi_deg,
        w,
        w_oracle,
        abs_diff,
    })
}

/// Largest oracle discrepancy, if any record was cross-checked.
pub fn worst_oracle_diff(records: &[SweepRecord]) -> Option<f64> {
    records.iter().filter_map(|r| r.abs_diff).reduce(f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Axis {
    Theta,
    Psi,
}

/// `min, min + step, ...` up to and including `max` (within roundoff).
pub fn axis_points(min: f64, max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if ![min, max, step].iter().all(|v| v.is_finite()) {
        return Err(CliError::Argument(
            "sweep bounds and step must be finite".into(),
        ));
    }
    if min >= max {
        return Err(CliError::Argument(format!(
            "sweep needs min < max, got [{min}, {max}]"
        )));
    }
    if step <= 0.0 {
        return Err(CliError::Argument(format!(
            "sweep step must be positive, got {step}"
        )));
    }
    let count = ((max - min) / step * (1.0 + 1e-12) + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| min + i as f64 * step).collect())
}

/// How `θ_c` follows the swept or fixed `θ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AreaMode {
    Locked,
    Fixed(f64),
}

impl AreaMode {
    pub fn theta_c(self, theta: f64) -> f64 {
        match self {
            AreaMode::Locked => theta,
            AreaMode::Fixed(theta_c) => theta_c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSpec {
    pub scheme: LevelScheme,
    pub axis: Axis,
    pub min: f64,
    pub max: f64,
    pub step: f64,
    /// Fixed cavity angle for ψ-sweeps; ignored for θ-sweeps.
    pub theta: f64,
    pub areas: AreaMode,
    /// Fixed polarization angle for θ-sweeps; ignored for ψ-sweeps.
    pub psi_deg: f64,
    pub oracle: bool,
}

/// Evaluates all points in parallel and returns them in axis order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>, CliError> {
    let points = axis_points(spec.min, spec.max, spec.step)?;
    points
        .par_iter()
        .map(|&x| match spec.axis {
            Axis::Theta => evaluate(
                &spec.scheme,
                x,
                spec.areas.theta_c(x),
                spec.psi_deg,
                spec.oracle,
            ),
            Axis::Psi => evaluate(
                &spec.scheme,
                spec.theta,
                spec.areas.theta_c(spec.theta),
                x,
                spec.oracle,
            ),
        })
        .collect()
}
