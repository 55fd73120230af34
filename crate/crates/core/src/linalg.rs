//! Functions of Hermitian matrices by eigendecomposition.
//!
//! The kernel only ever needs functions of `Q` expressed through `Q²`, so the
//! scalar functions here take the eigenvalue `x` of `Q²` and evaluate at
//! `√x`. Each has a removable singularity or branch point at `x = 0` that is
//! handled with a short Taylor series.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::OperatorError;
use crate::operator::LabeledOperator;

/// Relative tolerance for Hermiticity and for roundoff-level negative eigenvalues.
pub const HERMITIAN_TOL: f64 = 1e-10;

const SERIES_CUTOFF: f64 = 1e-6;
const MAX_SWEEPS: usize = 100_000;

/// `cos(√x)`, valid for `x ≥ 0`.
pub fn cos_sqrt(x: f64) -> f64 {
    libm::cos(libm::sqrt(x))
}

/// `sin(√x)/√x`, equal to 1 at `x = 0`.
pub fn sinc_sqrt(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0
    } else {
        let q = libm::sqrt(x);
        libm::sin(q) / q
    }
}

/// `sin²(√x/2) / (√x/2)²`, equal to 1 at `x = 0`.
pub fn sinc2_half_sqrt(x: f64) -> f64 {
    if x.abs() < SERIES_CUTOFF {
        1.0 - x / 12.0 + x * x / 360.0 - x * x * x / 20160.0
    } else {
        let half = libm::sqrt(x) / 2.0;
        let s = libm::sin(half) / half;
        s * s
    }
}

/// Eigendecomposition `A = U diag(λ) U†` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianSpectrum {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl HermitianSpectrum {
    pub fn new(matrix: &DMatrix<Complex64>) -> Result<Self, OperatorError> {
        let scale = matrix.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let residual = (matrix - matrix.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if residual > HERMITIAN_TOL * scale {
            return Err(OperatorError::NotHermitian { residual });
        }
        let symmetrized = (matrix + matrix.adjoint()) * Complex64::new(0.5, 0.0);
        let eigen = SymmetricEigen::try_new(symmetrized, f64::EPSILON, MAX_SWEEPS)
            .ok_or(OperatorError::NoConvergence)?;
        Ok(HermitianSpectrum {
            eigenvalues: eigen.eigenvalues,
            eigenvectors: eigen.eigenvectors,
        })
    }

    /// Like [`HermitianSpectrum::new`], additionally requiring positive
    /// semidefiniteness; roundoff-level negative eigenvalues are set to zero.
    pub fn positive_semidefinite(matrix: &DMatrix<Complex64>) -> Result<Self, OperatorError> {
        let mut spectrum = HermitianSpectrum::new(matrix)?;
        let scale = matrix.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for value in spectrum.eigenvalues.iter_mut() {
            if *value < -HERMITIAN_TOL * scale {
                return Err(OperatorError::NegativeEigenvalue { value: *value });
            }
            if *value < 0.0 {
                *value = 0.0;
            }
        }
        Ok(spectrum)
    }

    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    /// `U diag(f(λ)) U†`.
    pub fn apply(&self, f: impl Fn(f64) -> Complex64) -> DMatrix<Complex64> {
        let mut scaled = self.eigenvectors.clone();
        for (j, &lambda) in self.eigenvalues.iter().enumerate() {
            let mut column = scaled.column_mut(j);
            column *= f(lambda);
        }
        scaled * self.eigenvectors.adjoint()
    }
}

fn apply_real(
    q_squared: &LabeledOperator,
    f: fn(f64) -> f64,
) -> Result<LabeledOperator, OperatorError> {
    if !q_squared.is_square() {
        return Err(OperatorError::LabelMismatch("matrix function"));
    }
    let spectrum = HermitianSpectrum::positive_semidefinite(q_squared.matrix())?;
    Ok(q_squared.with_matrix(spectrum.apply(|x| Complex64::new(f(x), 0.0))))
}

/// `cos(Q)` from `Q²`.
pub fn matrix_cos(q_squared: &LabeledOperator) -> Result<LabeledOperator, OperatorError> {
    apply_real(q_squared, cos_sqrt)
}

/// `sin(Q)/Q` from `Q²`.
pub fn matrix_sinc(q_squared: &LabeledOperator) -> Result<LabeledOperator, OperatorError> {
    apply_real(q_squared, sinc_sqrt)
}

/// `sin²(Q/2)/(Q/2)²` from `Q²`.
pub fn matrix_sinc2_half(q_squared: &LabeledOperator) -> Result<LabeledOperator, OperatorError> {
    apply_real(q_squared, sinc2_half_sqrt)
}

/// `exp(iH)` for Hermitian `H`.
pub fn exp_i_hermitian(generator: &LabeledOperator) -> Result<LabeledOperator, OperatorError> {
    if !generator.is_square() {
        return Err(OperatorError::LabelMismatch("exp_i_hermitian"));
    }
    let spectrum = HermitianSpectrum::new(generator.matrix())?;
    Ok(generator.with_matrix(spectrum.apply(|x| Complex64::from_polar(1.0, x))))
}
