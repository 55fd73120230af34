use thiserror::Error;

use crate::angular::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngularError {
    #[error("cannot parse half-integer (expected forms like 2, 5/2 or 2.5)")]
    Parse,
    #[error("angular momentum {0} is negative")]
    NegativeMomentum(HalfInt),
    #[error("projection {m} is not a valid projection of {j}")]
    MalformedProjection { j: HalfInt, m: HalfInt },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("{name} = {value} must be non-negative")]
    Negative { name: &'static str, value: HalfInt },
    #[error("{name} = {value} is not one of the hyperfine components {lo}..={hi}")]
    OutOfRange {
        name: &'static str,
        value: HalfInt,
        lo: HalfInt,
        hi: HalfInt,
    },
    #[error("laser and cavity ground components coincide (F = {0})")]
    SameGroundComponent(HalfInt),
    #[error("no excited hyperfine components")]
    NoExcitedComponents,
    #[error("unknown preset {0:?}")]
    UnknownPreset(alloc::string::String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("label mismatch in {0}")]
    LabelMismatch(&'static str),
    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("matrix has a negative eigenvalue {value:e}")]
    NegativeEigenvalue { value: f64 },
    #[error("Hermitian eigensolver did not converge")]
    NoConvergence,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Angular(#[from] AngularError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("polarization vector has zero norm")]
    ZeroPolarization,
    #[error("{name} = {value} must be finite and non-negative")]
    InvalidAngle { name: &'static str, value: f64 },
    #[error("{name} = {value} must be finite and positive")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("photon truncation n_max = {0} must be at least 1")]
    PhotonCutoff(usize),
    #[error("bridge identity power {0} outside 0..=3")]
    BridgePower(u32),
}
