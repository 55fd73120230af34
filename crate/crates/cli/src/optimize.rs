//! Grid scan followed by golden-section refinement.

use rayon::prelude::*;
use serde::Serialize;

use raman_core::LevelScheme;

use crate::error::CliError;
use crate::format::CsvRow;
use crate::sweep::{evaluate, AreaMode};

pub const DEFAULT_GRID_STEP: f64 = 0.05;
pub const DEFAULT_TOLERANCE: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptimumReport {
    pub theta_star: f64,
    pub w_star: f64,
    pub grid_step: f64,
    pub refinement_tolerance: f64,
}

impl CsvRow for OptimumReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["theta_star", "w_star", "grid_step", "refinement_tolerance"]
    }

    fn fields(&self) -> Vec<f64> {
        vec![
            self.theta_star,
            self.w_star,
            self.grid_step,
            self.refinement_tolerance,
        ]
    }
}

/// Maximizes `f` on `[lo, hi]`: global scan with spacing `step`, then golden
/// section inside the two grid cells around the best point until the bracket
/// is narrower than `tol`.
pub fn maximize<F>(f: F, lo: f64, hi: f64, step: f64, tol: f64) -> Result<(f64, f64), CliError>
where
    F: Fn(f64) -> Result<f64, CliError> + Sync,
{
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(CliError::Argument(format!(
            "invalid search range [{lo}, {hi}]"
        )));
    }
    if !(step > 0.0 && tol > 0.0) {
        return Err(CliError::Argument(
            "grid step and tolerance must be positive".into(),
        ));
    }
    if lo == hi {
        return Ok((lo, f(lo)?));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut grid: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    if hi - grid[n] > 1e-9 * step {
        grid.push(hi);
    }
    let values = grid
        .par_iter()
        .map(|&x| f(x))
        .collect::<Result<Vec<f64>, _>>()?;
    let best = values
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v > values[best] { i } else { best });

    let (mut a, mut b) = (
        grid[best.saturating_sub(1)],
        grid[(best + 1).min(grid.len() - 1)],
    );
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while b - a > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x)?;
    if fx >= values[best] {
        Ok((x, fx))
    } else {
        Ok((grid[best], values[best]))
    }
}

/// Best `θ` in `[lo, hi]` at fixed `ψ`, with `θ_c` locked to `θ` or held fixed.
pub fn optimize_theta(
    scheme: &LevelScheme,
    psi_deg: f64,
    areas: AreaMode,
    range: (f64, f64),
    grid_step: f64,
    tolerance: f64,
) -> Result<OptimumReport, CliError> {
    scheme.validate()?;
    let w = |theta: f64| Ok(evaluate(scheme, theta, areas.theta_c(theta), psi_deg, false)?.w);
    let (theta_star, w_star) = maximize(w, range.0, range.1, grid_step, tolerance)?;
    Ok(OptimumReport {
        theta_star,
        w_star,
        grid_step,
        refinement_tolerance: tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_global_maximum_of_oscillating_function() {
        // local maxima at every multiple of 2π; the envelope peaks at x = 20
        let f = |x: f64| Ok(x.cos() * (-(x - 20.0).powi(2) / 50.0).exp());
        let (x, fx) = maximize(f, 0.0, 40.0, 0.05, 1e-6).unwrap();
        let expected = 6.0 * std::f64::consts::PI;
        assert!((x - expected).abs() < 0.05, "{x}");
        assert!(fx > 0.9);
    }

    #[test]
    fn degenerate_range_is_a_single_point() {
        let (x, fx) = maximize(|x| Ok(x * x), 5.0, 5.0, 0.05, 1e-4).unwrap();
        assert_eq!((x, fx), (5.0, 25.0));
        assert!(maximize(Ok, 2.0, 1.0, 0.05, 1e-4).is_err());
        assert!(maximize(Ok, 0.0, 1.0, 0.0, 1e-4).is_err());
    }

    #[test]
    fn boundary_maximum() {
        let (x, _) = maximize(Ok, 0.0, 1.03, 0.05, 1e-6).unwrap();
        assert!((x - 1.03).abs() < 1e-5);
    }
}
