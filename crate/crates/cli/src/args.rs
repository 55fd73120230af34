//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use raman_core::{HalfInt, LevelScheme};

use crate::error::CliError;
use crate::format::OutputFormat;
use crate::optimize::{DEFAULT_GRID_STEP, DEFAULT_TOLERANCE};
use crate::sweep::{AreaMode, Axis};

#[derive(Debug, Parser)]
#[command(
    name = "raman",
    version,
    about = "Single-photon Raman emission in a cavity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emission probability at one point.
    #[command(allow_negative_numbers = true)]
    Compute(ComputeArgs),
    /// Emission probability along θ or ψ.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Best θ on a range at fixed ψ.
    #[command(allow_negative_numbers = true)]
    Optimize(OptimizeArgs),
}

fn parse_preset(s: &str) -> Result<LevelScheme, String> {
    LevelScheme::preset(s).map_err(|e| format!("{e} (known: {})", LevelScheme::PRESETS.join(", ")))
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

const EXPLICIT: [&str; 5] = ["f_a", "f_prime_a", "nuclear_spin", "j_a", "j_b"];

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    /// Preset level scheme.
    #[arg(long, value_parser = parse_preset, conflicts_with_all = EXPLICIT)]
    pub scheme: Option<LevelScheme>,
    /// Laser-coupled ground component.
    #[arg(long = "Fa", value_parser = parse_half)]
    pub f_a: Option<HalfInt>,
    /// Cavity-coupled ground component.
    #[arg(long = "Fpa", value_parser = parse_half)]
    pub f_prime_a: Option<HalfInt>,
    /// Nuclear spin.
    #[arg(long = "I", value_parser = parse_half)]
    pub nuclear_spin: Option<HalfInt>,
    /// Ground electronic momentum.
    #[arg(long = "Ja", value_parser = parse_half)]
    pub j_a: Option<HalfInt>,
    /// Excited electronic momentum.
    #[arg(long = "Jb", value_parser = parse_half)]
    pub j_b: Option<HalfInt>,
}

impl SchemeArgs {
    /// The selected scheme, validated.
    pub fn resolve(&self) -> Result<LevelScheme, CliError> {
        let scheme = match (
            self.scheme,
            self.f_a,
            self.f_prime_a,
            self.nuclear_spin,
            self.j_a,
            self.j_b,
        ) {
            (Some(preset), ..) => preset,
            (None, Some(f_a), Some(f_prime_a), Some(i), Some(j_a), Some(j_b)) => {
                LevelScheme::new(f_a, f_prime_a, i, j_a, j_b)
            }
            _ => {
                return Err(CliError::Argument(
                    "give --scheme or all of --Fa, --Fpa, --I, --Ja, --Jb".into(),
                ))
            }
        };
        scheme.validate()?;
        Ok(scheme)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AreaArgs {
    /// Laser pulse area; defaults to θ.
    #[arg(long = "theta-c")]
    pub theta_c: Option<f64>,
    /// Hold θ_c = θ.
    #[arg(long, conflicts_with = "theta_c")]
    pub lock_areas: bool,
}

impl AreaArgs {
    pub fn mode(&self) -> AreaMode {
        match (self.lock_areas, self.theta_c) {
            (false, Some(theta_c)) => AreaMode::Fixed(theta_c),
            _ => AreaMode::Locked,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Cavity vacuum Rabi angle.
    #[arg(long)]
    pub theta: f64,
    #[command(flatten)]
    pub areas: AreaArgs,
    /// Angle between the polarizations, degrees.
    #[arg(long, default_value_t = 90.0)]
    pub psi: f64,
    /// Cross-check against the Fock-space evolution.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[arg(long, value_enum)]
    pub axis: Axis,
    /// First point (θ, or ψ in degrees).
    #[arg(long)]
    pub min: f64,
    /// Last point, inclusive.
    #[arg(long)]
    pub max: f64,
    #[arg(long)]
    pub step: f64,
    /// Fixed θ for ψ-sweeps.
    #[arg(long)]
    pub theta: Option<f64>,
    #[command(flatten)]
    pub areas: AreaArgs,
    /// Fixed ψ for θ-sweeps, degrees.
    #[arg(long, default_value_t = 90.0)]
    pub psi: f64,
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Angle between the polarizations, degrees.
    #[arg(long, default_value_t = 90.0)]
    pub psi: f64,
    #[arg(long, default_value_t = 10.0)]
    pub min: f64,
    #[arg(long, default_value_t = 30.0)]
    pub max: f64,
    /// Coarse grid spacing.
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    pub step: f64,
    /// Final bracket width of the refinement.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[command(flatten)]
    pub areas: AreaArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}
