//! Matrix exponential and logarithm on their convergence domains, the
//! derivative of `exp`, the Lie product formula, and recovery of the
//! generator of a one-parameter subgroup.

use num_complex::Complex64;

use crate::error::{domain_err, shape_err, Error, Result};
use crate::matcore::{
    determinant, frobenius_norm, ComplexMatrix, ExactField, Matrix, RationalMatrix, Scalar,
    Tolerance,
};

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 200;

/// Scaled argument norm below which the exponential series is summed.
const EXP_SCALE_TARGET: f64 = 0.5;

/// `e^X` by scaling and squaring: `X` is halved until its Frobenius norm is
/// below `0.5`, the power series is summed until the next term drops below
/// `tol.abs`, and the result is squared back up.
pub fn mat_exp(x: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    x.require_square("mat_exp")?;
    let n = x.rows();
    if x.is_zero() {
        return Ok(ComplexMatrix::identity(n));
    }
    let norm = frobenius_norm(x);
    if !norm.is_finite() {
        return Err(Error::NonFinite("mat_exp argument".into()));
    }
    let mut squarings = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm >= EXP_SCALE_TARGET {
        scaled_norm /= 2.0;
        squarings += 1;
    }
    let y = x.scale_real(0.5f64.powi(squarings as i32));

    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    let mut converged = false;
    for k in 1..=MAX_SERIES_TERMS {
        term = (&term * &y).scale_real(1.0 / k as f64);
        sum = &sum + &term;
        if frobenius_norm(&term) < tol.abs {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "exponential series did not reach {} within {MAX_SERIES_TERMS} terms",
            tol.abs
        )));
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum.ensure_finite("mat_exp")
}

/// Exact terminating exponential `sum_{m<n} X^m / m!` of a nilpotent matrix.
pub fn mat_exp_nilpotent<T: ExactField>(x: &Matrix<T>) -> Result<Matrix<T>> {
    x.require_square("mat_exp_nilpotent")?;
    let n = x.rows();
    let mut sum = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for m in 1..=n {
        term = (&term * x).scale(&T::from_ratio(1, m as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        if m == n {
            break;
        }
        sum = &sum + &term;
    }
    domain_err(format!("matrix is not nilpotent: X^{n} != 0"))
}

/// `log A = sum_{m>=1} (-1)^{m+1} (A-I)^m / m`, defined for
/// `||A - I||_F < 1`. Real input gives real output.
pub fn mat_log(a: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    a.require_square("mat_log")?;
    let n = a.rows();
    let d = a - &ComplexMatrix::identity(n);
    let dn = frobenius_norm(&d);
    if !(dn < 1.0) {
        return Err(Error::OutOfDomain(format!(
            "logarithm series needs ||A - I||_F < 1, got {dn}"
        )));
    }
    let mut sum = ComplexMatrix::zeros(n, n);
    if d.is_zero() {
        return Ok(sum);
    }
    let mut power = ComplexMatrix::identity(n);
    for m in 1..=MAX_SERIES_TERMS {
        power = &power * &d;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        let term = power.scale_real(sign / m as f64);
        sum = &sum + &term;
        if frobenius_norm(&term) < tol.abs {
            return sum.ensure_finite("mat_log");
        }
    }
    Err(Error::Convergence(format!(
        "logarithm series did not reach {} within {MAX_SERIES_TERMS} terms",
        tol.abs
    )))
}

/// Exact logarithm of a Heisenberg group element
/// `[[1,a,b],[0,1,c],[0,0,1]]`: with `N = A - I`, `log A = N - N^2/2`.
pub fn heisenberg_log<T: ExactField>(a: &Matrix<T>) -> Result<Matrix<T>> {
    if a.shape() != (3, 3) {
        return domain_err(format!("Heisenberg element must be 3x3, got {:?}", a.shape()));
    }
    for i in 0..3 {
        for j in 0..=i {
            let want = if i == j { T::one() } else { T::zero() };
            if a[(i, j)] != want {
                return domain_err("matrix is not unit upper triangular");
            }
        }
    }
    let nil = a - &Matrix::identity(3);
    let sq = &nil * &nil;
    Ok(&nil - &sq.scale(&T::from_ratio(1, 2)))
}

/// Directional derivative `d/dt e^{X+tY}` at `t = 0`, truncated to
/// `e^X * sum_{k<terms} (-1)^k (ad X)^k (Y) / (k+1)!`.
pub fn exp_directional_derivative(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    terms: usize,
) -> Result<ComplexMatrix> {
    x.require_square("exp_directional_derivative")?;
    x.require_same_shape(y, "differentiate along")?;
    if terms == 0 {
        return domain_err("at least one series term is required");
    }
    let mut ad_power = y.clone();
    let mut sum = y.clone();
    let mut factorial = 1.0;
    for k in 1..terms {
        ad_power = x.commutator(&ad_power)?;
        factorial *= (k + 1) as f64;
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        sum = &sum + &ad_power.scale_real(sign / factorial);
    }
    let ex = mat_exp(x, &Tolerance::series())?;
    (&ex * &sum).ensure_finite("exp_directional_derivative")
}

/// `(e^{X/m} e^{Y/m})^m`.
pub fn lie_product_step(x: &ComplexMatrix, y: &ComplexMatrix, m: u32) -> Result<ComplexMatrix> {
    x.require_square("lie_product_step")?;
    x.require_same_shape(y, "combine")?;
    if m == 0 {
        return domain_err("m must be positive");
    }
    let tol = Tolerance::series();
    let inv = 1.0 / m as f64;
    let step = &mat_exp(&x.scale_real(inv), &tol)? * &mat_exp(&y.scale_real(inv), &tol)?;
    step.pow(m)?.ensure_finite("lie_product_step")
}

/// One sample `A(t)` of a one-parameter subgroup.
#[derive(Clone, Debug)]
pub struct OneParamSample {
    pub t: f64,
    pub value: ComplexMatrix,
}

impl OneParamSample {
    pub fn new(t: f64, value: ComplexMatrix) -> Self {
        OneParamSample { t, value }
    }
}

/// Recovers `X` with `A(t) = e^{tX}` from the sample nearest to `t = 0`
/// (`X = log A(t1) / t1`), then checks every other sample against
/// `e^{tX}` within `tol`.
pub fn one_param_generator(samples: &[OneParamSample], tol: &Tolerance) -> Result<ComplexMatrix> {
    if samples.len() < 2 {
        return domain_err("need at least two samples");
    }
    let shape = samples[0].value.shape();
    if shape.0 != shape.1 {
        return shape_err("sample values must be square");
    }
    if samples.iter().any(|s| s.value.shape() != shape) {
        return shape_err("all samples must share dimensions");
    }
    if samples.iter().any(|s| !s.t.is_finite()) {
        return domain_err("sample parameters must be finite");
    }
    for (i, a) in samples.iter().enumerate() {
        if samples[i + 1..].iter().any(|b| b.t == a.t) {
            return domain_err(format!("duplicate sample parameter t = {}", a.t));
        }
    }
    let n = shape.0;
    let origin = samples
        .iter()
        .find(|s| s.t == 0.0)
        .ok_or_else(|| Error::Domain("no sample at t = 0".into()))?;
    if !origin.value.approx_eq(&ComplexMatrix::identity(n), tol)? {
        return Err(Error::InconsistentSamples("A(0) is not the identity".into()));
    }
    let nearest = samples
        .iter()
        .filter(|s| s.t != 0.0)
        .min_by(|a, b| a.t.abs().total_cmp(&b.t.abs()))
        .expect("at least one non-zero sample");
    let generator = mat_log(&nearest.value, &Tolerance::series())?.scale_real(1.0 / nearest.t);
    for s in samples {
        let predicted = mat_exp(&generator.scale_real(s.t), &Tolerance::series())?;
        if !predicted.approx_eq(&s.value, tol)? {
            return Err(Error::InconsistentSamples(format!(
                "sample at t = {} is not e^(tX) for the generator recovered at t = {}",
                s.t, nearest.t
            )));
        }
    }
    Ok(generator)
}

/// Whether a real `A` with `det A = 1` lies in the image of
/// `exp: sl(2,R) -> SL(2,R)`: `trace A > -2 + tol.abs`, or `A = -I`.
pub fn in_exp_image_sl2r(a: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    if a.shape() != (2, 2) {
        return domain_err(format!("expected a 2x2 matrix, got {:?}", a.shape()));
    }
    if !a.is_real_within(tol) {
        return domain_err("matrix is not real");
    }
    let det = determinant(a)?;
    if !det.near(&Complex64::new(1.0, 0.0), tol) {
        return domain_err(format!("determinant {det} is not 1"));
    }
    if a.trace().re > -2.0 + tol.abs {
        return Ok(true);
    }
    a.approx_eq(&-&ComplexMatrix::identity(2), tol)
}

/// Exact rational specialisation of [`mat_exp_nilpotent`].
pub fn rational_exp_nilpotent(x: &RationalMatrix) -> Result<RationalMatrix> {
    mat_exp_nilpotent(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tight() -> Tolerance {
        Tolerance::new(1e-12, 0.0)
    }

    #[test]
    fn exp_of_zero_is_identity() {
        for n in 1..5 {
            let e = mat_exp(&ComplexMatrix::zeros(n, n), &Tolerance::default()).unwrap();
            assert_eq!(e, ComplexMatrix::identity(n));
        }
    }

    #[test]
    fn exp_rotation_block() {
        let a = FRAC_PI_2;
        let x = ComplexMatrix::real_rows(&[&[0.0, -a], &[a, 0.0]]);
        let e = mat_exp(&x, &Tolerance::series()).unwrap();
        let want = ComplexMatrix::real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert!(e.approx_eq(&want, &tight()).unwrap());
    }

    #[test]
    fn exp_jordan_block() {
        let x = ComplexMatrix::real_rows(&[&[LN_2, 3.0], &[0.0, LN_2]]);
        let e = mat_exp(&x, &Tolerance::series()).unwrap();
        let want = ComplexMatrix::real_rows(&[&[2.0, 6.0], &[0.0, 2.0]]);
        assert!(e.approx_eq(&want, &tight()).unwrap());
    }

    #[test]
    fn exp_rejects_non_square() {
        assert!(matches!(
            mat_exp(&ComplexMatrix::zeros(2, 3), &Tolerance::default()),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn nilpotent_exp_closed_form() {
        let (a, b, c) = (q(2, 1), q(0, 1), q(3, 1));
        let x = RationalMatrix::from_rows(vec![
            vec![q(0, 1), a.clone(), b.clone()],
            vec![q(0, 1), q(0, 1), c.clone()],
            vec![q(0, 1), q(0, 1), q(0, 1)],
        ]);
        let e = mat_exp_nilpotent(&x).unwrap();
        assert_eq!(e[(0, 1)], a);
        assert_eq!(e[(1, 2)], c);
        assert_eq!(e[(0, 2)], q(3, 1));
        assert_eq!(e[(0, 0)], q(1, 1));
        assert_eq!(mat_exp_nilpotent(&RationalMatrix::zeros(3, 3)).unwrap(), RationalMatrix::identity(3));
        assert!(mat_exp_nilpotent(&RationalMatrix::identity(2)).is_err());
    }

    #[test]
    fn log_examples() {
        let zero = mat_log(&ComplexMatrix::identity(3), &Tolerance::series()).unwrap();
        assert!(zero.is_zero());

        let x = ComplexMatrix::real_rows(&[&[0.0, 0.1], &[0.0, 0.0]]);
        let back = mat_log(&mat_exp(&x, &Tolerance::series()).unwrap(), &Tolerance::series()).unwrap();
        assert!(back.approx_eq(&x, &tight()).unwrap());

        let d = ComplexMatrix::real_rows(&[&[1.5, 0.0], &[0.0, 0.8]]);
        let l = mat_log(&d, &Tolerance::series()).unwrap();
        let want = ComplexMatrix::real_rows(&[&[1.5f64.ln(), 0.0], &[0.0, 0.8f64.ln()]]);
        assert!(l.approx_eq(&want, &tight()).unwrap());
        assert!(l.iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn log_outside_domain_errors() {
        let a = ComplexMatrix::real_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(mat_log(&a, &Tolerance::series()), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn heisenberg_log_examples() {
        assert!(heisenberg_log(&RationalMatrix::identity(3)).unwrap().is_zero());

        let a = RationalMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let x = heisenberg_log(&a).unwrap();
        assert_eq!(x[(0, 1)], q(1, 1));
        assert_eq!(x[(1, 2)], q(1, 1));
        assert_eq!(x[(0, 2)], q(-1, 2));
        assert_eq!(mat_exp_nilpotent(&x).unwrap(), a);

        let central = RationalMatrix::from_i64_rows(&[&[1, 0, 5], &[0, 1, 0], &[0, 0, 1]]);
        let x = heisenberg_log(&central).unwrap();
        assert_eq!(x, RationalMatrix::from_i64_rows(&[&[0, 0, 5], &[0, 0, 0], &[0, 0, 0]]));

        assert!(heisenberg_log(&RationalMatrix::identity(2)).is_err());
        assert!(heisenberg_log(&RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]])).is_err());
    }

    #[test]
    fn derivative_special_cases() {
        let y = ComplexMatrix::real_rows(&[&[0.1, 0.2], &[-0.3, 0.05]]);
        let zero = ComplexMatrix::zeros(2, 2);
        let d = exp_directional_derivative(&zero, &y, 10).unwrap();
        assert!(d.approx_eq(&y, &tight()).unwrap());

        // commuting X, Y
        let x = ComplexMatrix::real_rows(&[&[0.3, 0.0], &[0.0, -0.2]]);
        let y = ComplexMatrix::real_rows(&[&[0.7, 0.0], &[0.0, 0.4]]);
        let d = exp_directional_derivative(&x, &y, 5).unwrap();
        let want = &mat_exp(&x, &Tolerance::series()).unwrap() * &y;
        assert!(d.approx_eq(&want, &tight()).unwrap());

        assert!(exp_directional_derivative(&x, &y, 0).is_err());
        assert!(exp_directional_derivative(&x, &ComplexMatrix::zeros(3, 3), 3).is_err());
    }

    #[test]
    fn lie_product_commuting_and_m1() {
        let x = ComplexMatrix::real_rows(&[&[0.3, 0.0], &[0.0, -0.2]]);
        let y = ComplexMatrix::real_rows(&[&[0.5, 0.0], &[0.0, 0.1]]);
        let exact = mat_exp(&(&x + &y), &Tolerance::series()).unwrap();
        for m in [1, 3, 17] {
            let p = lie_product_step(&x, &y, m).unwrap();
            assert!(p.approx_eq(&exact, &Tolerance::new(1e-10, 0.0)).unwrap());
        }
        let x = ComplexMatrix::real_rows(&[&[0.0, 0.4], &[0.0, 0.0]]);
        let y = ComplexMatrix::real_rows(&[&[0.0, 0.0], &[0.3, 0.0]]);
        let s = Tolerance::series();
        let direct = &mat_exp(&x, &s).unwrap() * &mat_exp(&y, &s).unwrap();
        assert_eq!(lie_product_step(&x, &y, 1).unwrap(), direct);
    }

    #[test]
    fn generator_recovery() {
        let x = ComplexMatrix::real_rows(&[&[0.0, 0.2], &[0.0, 0.0]]);
        let samples: Vec<_> = [0.0, 0.5, 1.0]
            .iter()
            .map(|&t| OneParamSample::new(t, mat_exp(&x.scale_real(t), &Tolerance::series()).unwrap()))
            .collect();
        let got = one_param_generator(&samples, &Tolerance::default()).unwrap();
        assert!(got.approx_eq(&x, &Tolerance::new(1e-10, 0.0)).unwrap());

        let constant: Vec<_> = [0.0, 1.0, 2.0]
            .iter()
            .map(|&t| OneParamSample::new(t, ComplexMatrix::identity(2)))
            .collect();
        assert!(one_param_generator(&constant, &Tolerance::default()).unwrap().is_zero());

        let other = ComplexMatrix::real_rows(&[&[0.0, 0.0], &[0.2, 0.0]]);
        let mut mixed = samples.clone();
        mixed.push(OneParamSample::new(2.0, mat_exp(&other.scale_real(2.0), &Tolerance::series()).unwrap()));
        assert!(matches!(
            one_param_generator(&mixed, &Tolerance::default()),
            Err(Error::InconsistentSamples(_))
        ));
        assert!(one_param_generator(&samples[..1], &Tolerance::default()).is_err());
    }

    #[test]
    fn sl2r_exp_image() {
        let tol = Tolerance::default();
        assert!(in_exp_image_sl2r(&ComplexMatrix::identity(2), &tol).unwrap());
        assert!(in_exp_image_sl2r(&-&ComplexMatrix::identity(2), &tol).unwrap());
        let d = ComplexMatrix::real_rows(&[&[-2.0, 0.0], &[0.0, -0.5]]);
        assert!(!in_exp_image_sl2r(&d, &tol).unwrap());
        let bad_det = ComplexMatrix::real_rows(&[&[2.0, 0.0], &[0.0, 2.0]]);
        assert!(matches!(in_exp_image_sl2r(&bad_det, &tol), Err(Error::Domain(_))));
        // trace exactly -2 but not -I: a parabolic element
        let parabolic = ComplexMatrix::real_rows(&[&[-1.0, 1.0], &[0.0, -1.0]]);
        assert!(!in_exp_image_sl2r(&parabolic, &tol).unwrap());
    }
}
