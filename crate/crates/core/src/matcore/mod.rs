//! Dense complex floating-point and exact rational matrices, with the norms,
//! comparisons and rank/nullspace primitives the rest of the crate uses.

mod elim;
pub mod json;
mod matrix;
mod scalar;

pub use elim::{
    determinant, inverse, nullspace, rank, rational_nullspace, rational_rank, row_reduce, solve,
    Echelon,
};
pub use matrix::{
    approx_eq, frobenius_norm, ComplexMatrix, GaussianMatrix, Matrix, RationalMatrix,
};
pub use scalar::{gaussian, rational_from_f64, rational_to_f64, ExactField, GaussianRational, Scalar};

use crate::error::{domain_err, Result};

/// Absolute and relative comparison tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-9, rel: 1e-9 }
    }
}

impl Tolerance {
    /// Unchecked constructor for literal values.
    pub const fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel }
    }

    /// Validating constructor: both fields finite and non-negative.
    pub fn try_new(abs: f64, rel: f64) -> Result<Self> {
        if !(abs.is_finite() && rel.is_finite() && abs >= 0.0 && rel >= 0.0) {
            return domain_err(format!("tolerances must be finite and >= 0, got abs={abs} rel={rel}"));
        }
        Ok(Tolerance { abs, rel })
    }

    /// Series truncation threshold at double precision: terms below
    /// `1e-17` in Frobenius norm no longer change an `O(1)` sum.
    pub const fn series() -> Self {
        Tolerance { abs: 1e-17, rel: 0.0 }
    }

    pub const fn abs_only(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }
}
