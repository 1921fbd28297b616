//! Matrix Lie groups and their Lie algebras, made executable.
//!
//! * [`matcore`]: dense complex (floating) and rational (exact) matrices.
//! * [`expmlog`]: matrix exponential and logarithm, derivative of `exp`,
//!   one-parameter subgroups.
//! * [`groups`]: membership tests for the classical matrix groups and their
//!   canonical constructors.
//! * [`liealg`]: Lie algebra membership, brackets, `ad`/`Ad`, structure
//!   constants.
//! * [`bch`]: Baker–Campbell–Hausdorff in closed, series and integral form.
//! * [`su2so3`]: the two-to-one map `SU(2) -> SO(3)` and its lift.
//! * [`repcore`], [`repsl2`], [`repsl3`]: representations of `sl(2,C)` and
//!   `sl(3,C)` built exactly from highest weights.

pub mod bch;
pub mod error;
pub mod expmlog;
pub mod groups;
pub mod liealg;
pub mod matcore;
pub mod repcore;
pub mod repsl2;
pub mod repsl3;
pub mod su2so3;

pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, GaussianMatrix, Matrix, RationalMatrix, Scalar, Tolerance};
pub use num_complex::Complex64;
pub use num_rational::BigRational;
