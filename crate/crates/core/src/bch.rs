//! Baker–Campbell–Hausdorff: `log(e^X e^Y)` in closed form for Heisenberg
//! pairs, as a truncated commutator series, and by quadrature of the
//! integral formula.

use num_complex::Complex64;

use crate::error::{domain_err, Error, Result};
use crate::expmlog::mat_exp;
use crate::liealg::{ad_matrix, bracket, gl_basis, Basis};
use crate::matcore::{ComplexMatrix, Matrix, Scalar, Tolerance};

/// Truncation order of [`bch_series`], 1 to 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchOrder(u8);

impl BchOrder {
    pub fn new(order: u32) -> Result<Self> {
        match order {
            1..=3 => Ok(BchOrder(order as u8)),
            _ => domain_err(format!("series order must be 1, 2 or 3, got {order}")),
        }
    }

    pub fn get(self) -> u32 {
        u32::from(self.0)
    }
}

/// `X + Y + [X,Y]/2`, valid when `X` and `Y` commute with `[X,Y]`
/// (checked exactly for exact carriers, to `1e-12` otherwise).
pub fn bch_heisenberg<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>) -> Result<Matrix<T>> {
    let c = bracket(x, y)?;
    let tol = Tolerance::new(1e-12, 0.0);
    let central = |m: &Matrix<T>| -> Result<bool> {
        Ok(bracket(m, &c)?.iter().all(|z| z.negligible(&tol)))
    };
    if !central(x)? || !central(y)? {
        return domain_err("X and Y do not commute with [X, Y]");
    }
    Ok(&(x + y) + &c.scale(&T::from_ratio(1, 2)))
}

/// Partial sums of `X + Y + [X,Y]/2 + [X,[X,Y]]/12 - [Y,[X,Y]]/12`.
pub fn bch_series<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>, order: BchOrder) -> Result<Matrix<T>> {
    x.require_square("bch_series")?;
    x.require_same_shape(y, "combine")?;
    let mut z = x + y;
    if order.get() >= 2 {
        let c = bracket(x, y)?;
        z = &z + &c.scale(&T::from_ratio(1, 2));
        if order.get() >= 3 {
            let third = &bracket(x, &c)? - &bracket(y, &c)?;
            z = &z + &third.scale(&T::from_ratio(1, 12));
        }
    }
    Ok(z)
}

/// `g(M) = I + sum_{n=1}^{terms} (-1)^{n+1} (M - I)^n / (n (n+1))`, the
/// power series of `z log z / (z - 1)` about `z = 1`.
///
/// Requires `|M - I|_F < 1` or `M - I` nilpotent; in the nilpotent case
/// the sum stops once the powers vanish.
pub fn g_operator<T: Scalar>(m: &Matrix<T>, terms: usize) -> Result<Matrix<T>> {
    m.require_square("g_operator")?;
    if terms == 0 {
        return domain_err("at least one series term is required");
    }
    let n = m.rows();
    let d = m - &Matrix::identity(n);
    let norm = d.frobenius_norm();
    if !(norm < 1.0) {
        let nilpotent = d.pow(n as u32)?.is_zero();
        if !nilpotent {
            return Err(Error::OutOfDomain(format!(
                "g series needs |M - I|_F < 1 or M - I nilpotent, got norm {norm}"
            )));
        }
    }
    let mut sum = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for k in 1..=terms {
        power = &power * &d;
        if power.is_zero() {
            break;
        }
        let k = k as i64;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        sum = &sum + &power.scale(&T::from_ratio(sign, k * (k + 1)));
    }
    Ok(sum)
}

/// `Z = X + int_0^1 g(e^{ad X} e^{t ad Y})(Y) dt`, by composite Simpson's
/// rule on `quad_points` panels with `terms` terms of the `g` series.
///
/// `ad` is materialised on `basis`, or on the elementary basis of
/// `gl(n,C)` when none is given. At every quadrature node
/// `e^{ad X} e^{t ad Y}` must be in the domain of [`g_operator`].
pub fn bch_integral(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    quad_points: usize,
    terms: usize,
    basis: Option<&Basis<Complex64>>,
) -> Result<ComplexMatrix> {
    x.require_square("bch_integral")?;
    x.require_same_shape(y, "combine")?;
    if quad_points == 0 {
        return domain_err("need at least one quadrature panel");
    }
    let full;
    let basis = match basis {
        Some(b) => b,
        None => {
            full = gl_basis::<Complex64>(x.rows())?;
            &full
        }
    };
    let series = Tolerance::series();
    let ad_x = ad_matrix(x, basis)?;
    let ad_y = ad_matrix(y, basis)?;
    let e_ad_x = mat_exp(&ad_x, &series)?;
    let y_coords = ComplexMatrix::column(basis.coordinates(y)?);

    let intervals = 2 * quad_points;
    let h = 1.0 / intervals as f64;
    let mut acc = ComplexMatrix::zeros(basis.len(), 1);
    for node in 0..=intervals {
        let t = node as f64 * h;
        let m = &e_ad_x * &mat_exp(&ad_y.scale_real(t), &series)?;
        let g = g_operator(&m, terms).map_err(|e| match e {
            Error::OutOfDomain(d) => Error::OutOfDomain(format!("at t = {t}: {d}")),
            e => e,
        })?;
        let weight = if node == 0 || node == intervals {
            1.0
        } else if node % 2 == 1 {
            4.0
        } else {
            2.0
        };
        acc = &acc + &(&g * &y_coords).scale_real(weight);
    }
    let integral = basis.combine(&acc.scale_real(h / 3.0).into_vec())?;
    (x + &integral).ensure_finite("bch_integral")
}
