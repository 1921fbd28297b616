//! Scalar fields the dense matrices are generic over.
//!
//! Three carriers are provided: [`Complex64`] for floating-point work,
//! [`BigRational`] for exact rational work, and [`GaussianRational`]
//! (rationals adjoined `i`) for exact work with bases such as the `su(2)`
//! generators that carry factors of `i/2`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Tolerance;

/// Exact complex rational `a + b i`.
pub type GaussianRational = Complex<BigRational>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic never rounds.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Modulus, as a float (approximate for exact carriers).
    fn modulus(&self) -> f64;
    fn conj(&self) -> Self;
    fn to_complex64(&self) -> Complex64;
    /// The imaginary unit, if the carrier has one.
    fn imaginary_unit() -> Option<Self>;
    /// True iff the imaginary part is zero (exact) or within `tol.abs`.
    fn is_real_within(&self, tol: &Tolerance) -> bool;

    /// `|self - other| <= tol.abs + tol.rel * |other|`; plain equality for
    /// exact carriers.
    fn near(&self, other: &Self, tol: &Tolerance) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).modulus() <= tol.abs + tol.rel * other.modulus()
        }
    }

    /// Zero test: exact for exact carriers, `|self| <= tol.abs` otherwise.
    fn negligible(&self, tol: &Tolerance) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.modulus() <= tol.abs
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }
}

/// Marker for carriers whose zero test is exact, so rank and nullspace are
/// well defined.
pub trait ExactField: Scalar + Display {}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Complex64::new(0.0, 1.0))
    }
    fn is_real_within(&self, tol: &Tolerance) -> bool {
        self.im.abs() <= tol.abs
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn modulus(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn imaginary_unit() -> Option<Self> {
        None
    }
    fn is_real_within(&self, _tol: &Tolerance) -> bool {
        true
    }
}

impl ExactField for BigRational {}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        Complex::new(One::one(), Zero::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(BigRational::from_ratio(num, den), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn modulus(&self) -> f64 {
        self.to_complex64().norm()
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(Zero::zero(), One::one()))
    }
    fn is_real_within(&self, _tol: &Tolerance) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl ExactField for GaussianRational {}

/// Embeds a rational into the Gaussian rationals.
pub fn gaussian(re: BigRational, im: BigRational) -> GaussianRational {
    Complex::new(re, im)
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
