//! The adjoint map `SU(2) -> SO(3)`, `U |-> (A |-> U A U*)` on traceless
//! Hermitian matrices, and its two-valued inverse.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{domain_err, Error, Result};
use crate::groups::{is_member, GroupId};
use crate::matcore::{gaussian, ComplexMatrix, GaussianMatrix, Matrix, Tolerance};

/// `A1 = [[0,1],[1,0]]`, `A2 = [[0,i],[-i,0]]`, `A3 = [[1,0],[0,-1]]`,
/// orthonormal for `<A,B> = trace(AB)/2`.
pub struct TracelessHermBasis;

impl TracelessHermBasis {
    pub fn exact() -> [GaussianMatrix; 3] {
        let g = |re: i64, im: i64| gaussian(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()));
        [
            Matrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]]),
            Matrix::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]]),
            Matrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]]),
        ]
    }

    pub fn complex() -> [ComplexMatrix; 3] {
        Self::exact().map(|m| m.to_complex())
    }
}

/// `<A,B> = trace(AB)/2`.
pub fn inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    (a * b).trace() * 0.5
}

fn su2() -> GroupId {
    "SU(2)".parse().expect("SU(2)")
}

fn so3() -> GroupId {
    "SO(3)".parse().expect("SO(3)")
}

fn phi(u: &ComplexMatrix) -> ComplexMatrix {
    let a = TracelessHermBasis::complex();
    let uh = u.adjoint();
    ComplexMatrix::from_fn(3, 3, |i, j| {
        let v = inner(&a[i], &(&(u * &a[j]) * &uh));
        Complex64::new(v.re, 0.0)
    })
}

/// Matrix of `A |-> U A U*` in the basis `A1, A2, A3`:
/// entry `(i, j)` is `trace(A_i U A_j U*)/2`.
pub fn adjoint_to_so3(u: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    if u.shape() != (2, 2) || !is_member(u, &su2(), tol)? {
        return domain_err("matrix is not in SU(2)");
    }
    Ok(phi(u))
}

/// The two preimages `(U, -U)` of `R` in `SU(2)`.
///
/// With `B_j = sum_i R_ij A_i`, any `X` gives
/// `X + sum_j B_j X A_j = 2 trace(U* X) U`; `X` is taken from
/// `I, iA1, iA2, iA3` to maximise that multiple, then rescaled to
/// determinant one. The first preimage has `Re trace U >= 0`; when the
/// trace vanishes the first non-zero entry is made to have positive real
/// part (or positive imaginary part if purely imaginary).
pub fn so3_lift(r: &ComplexMatrix, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if r.shape() != (3, 3) || !is_member(r, &so3(), tol)? {
        return domain_err("matrix is not in SO(3)");
    }
    let a = TracelessHermBasis::complex();
    let b: Vec<ComplexMatrix> = (0..3)
        .map(|j| (0..3).fold(ComplexMatrix::zeros(2, 2), |acc, i| &acc + &a[i].scale_real(r[(i, j)].re)))
        .collect();
    let i = Complex64::new(0.0, 1.0);
    let candidates = [
        ComplexMatrix::identity(2),
        a[0].scale(&i),
        a[1].scale(&i),
        a[2].scale(&i),
    ];
    let m = candidates
        .iter()
        .map(|x| (0..3).fold(x.clone(), |acc, j| &acc + &(&(&b[j] * x) * &a[j])))
        .max_by(|p, q| p.frobenius_norm().total_cmp(&q.frobenius_norm()))
        .expect("four candidates");
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    if det.norm() < 1e-300 {
        return Err(Error::Convergence("degenerate lift".into()));
    }
    let mut u = m.scale(&(Complex64::new(1.0, 0.0) / det.sqrt()));
    if first_sign_negative(&u) {
        u = -&u;
    }
    let back = phi(&u);
    let bound = Tolerance::new(10.0 * tol.abs, 10.0 * tol.rel);
    if !back.approx_eq(r, &bound)? {
        return Err(Error::Convergence("lift does not reproduce the rotation".into()));
    }
    let minus = -&u;
    Ok((u, minus))
}

fn first_sign_negative(u: &ComplexMatrix) -> bool {
    let tie = 1e-12;
    let tr = u.trace().re;
    if tr.abs() > tie {
        return tr < 0.0;
    }
    for z in u.iter() {
        if z.re.abs() > tie {
            return z.re < 0.0;
        }
        if z.im.abs() > tie {
            return z.im < 0.0;
        }
    }
    false
}
