//! Complex matrices whose rows and columns carry basis labels.

use alloc::vec::Vec;
use core::ops::Range;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::OperatorError;
use crate::scheme::BasisLabel;

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledOperator {
    matrix: DMatrix<Complex64>,
    rows: Vec<BasisLabel>,
    cols: Vec<BasisLabel>,
}

impl LabeledOperator {
    pub fn new(matrix: DMatrix<Complex64>, rows: Vec<BasisLabel>, cols: Vec<BasisLabel>) -> Self {
        assert_eq!(matrix.nrows(), rows.len(), "row labels do not match matrix");
        assert_eq!(
            matrix.ncols(),
            cols.len(),
            "column labels do not match matrix"
        );
        LabeledOperator { matrix, rows, cols }
    }

    pub fn zeros(rows: Vec<BasisLabel>, cols: Vec<BasisLabel>) -> Self {
        let matrix = DMatrix::zeros(rows.len(), cols.len());
        LabeledOperator { matrix, rows, cols }
    }

    pub fn identity(labels: Vec<BasisLabel>) -> Self {
        let n = labels.len();
        LabeledOperator {
            matrix: DMatrix::identity(n, n),
            rows: labels.clone(),
            cols: labels,
        }
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn rows(&self) -> &[BasisLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[BasisLabel] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Same labels, different entries.
    pub fn with_matrix(&self, matrix: DMatrix<Complex64>) -> Self {
        LabeledOperator::new(matrix, self.rows.clone(), self.cols.clone())
    }

    pub fn adjoint(&self) -> Self {
        LabeledOperator {
            matrix: self.matrix.adjoint(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    pub fn matmul(&self, rhs: &LabeledOperator) -> Result<Self, OperatorError> {
        if self.cols != rhs.rows {
            return Err(OperatorError::LabelMismatch("matmul"));
        }
        Ok(LabeledOperator {
            matrix: &self.matrix * &rhs.matrix,
            rows: self.rows.clone(),
            cols: rhs.cols.clone(),
        })
    }

    pub fn add(&self, rhs: &LabeledOperator) -> Result<Self, OperatorError> {
        self.check_same_shape(rhs, "add")?;
        Ok(self.with_matrix(&self.matrix + &rhs.matrix))
    }

    pub fn sub(&self, rhs: &LabeledOperator) -> Result<Self, OperatorError> {
        self.check_same_shape(rhs, "sub")?;
        Ok(self.with_matrix(&self.matrix - &rhs.matrix))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        self.with_matrix(&self.matrix * factor)
    }

    /// Integer power of a square operator.
    pub fn pow(&self, n: u32) -> Result<Self, OperatorError> {
        if !self.is_square() {
            return Err(OperatorError::LabelMismatch("pow"));
        }
        let mut out = DMatrix::identity(self.nrows(), self.ncols());
        for _ in 0..n {
            out = &out * &self.matrix;
        }
        Ok(self.with_matrix(out))
    }

    pub fn frobenius_norm_squared(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.frobenius_norm_squared())
    }

    pub fn frobenius_distance(&self, rhs: &LabeledOperator) -> Result<f64, OperatorError> {
        self.check_same_shape(rhs, "frobenius_distance")?;
        let sum: f64 = self
            .matrix
            .iter()
            .zip(rhs.matrix.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok(libm::sqrt(sum))
    }

    /// Largest entry of `|A - A†|`.
    pub fn hermiticity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Contiguous sub-block with its labels.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        let matrix = self
            .matrix
            .view((rows.start, cols.start), (rows.len(), cols.len()))
            .into_owned();
        LabeledOperator::new(matrix, self.rows[rows].to_vec(), self.cols[cols].to_vec())
    }

    fn check_same_shape(
        &self,
        rhs: &LabeledOperator,
        op: &'static str,
    ) -> Result<(), OperatorError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(OperatorError::LabelMismatch(op));
        }
        Ok(())
    }
}
