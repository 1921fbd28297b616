use num_complex::Complex64;

use super::Basis;
use crate::error::{shape_err, Result};
use crate::expmlog::mat_exp;
use crate::groups::{is_member, GroupId};
use crate::matcore::{inverse, ComplexMatrix, Matrix, Scalar, Tolerance};

/// Parameters at which [`algebra_membership_via_exp`] samples `e^{tX}`.
pub const DEFAULT_EXP_SAMPLES: [f64; 4] = [-1.0, -0.3, 0.3, 1.0];

/// `[X, Y] = XY - YX`.
pub fn bracket<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>) -> Result<Matrix<T>> {
    x.commutator(y)
}

/// Matrix of `ad X` in `basis`: column `j` holds the coordinates of
/// `[X, b_j]`.
pub fn ad_matrix<T: Scalar>(x: &Matrix<T>, basis: &Basis<T>) -> Result<Matrix<T>> {
    let m = basis.len();
    let mut out = Matrix::zeros(m, m);
    for (j, b) in basis.elements.iter().enumerate() {
        let coords = basis.coordinates(&bracket(x, b)?)?;
        for (i, c) in coords.into_iter().enumerate() {
            out[(i, j)] = c;
        }
    }
    Ok(out)
}

/// `Ad_A(X) = A X A^{-1}`.
#[allow(non_snake_case)]
pub fn Ad_apply<T: Scalar>(a: &Matrix<T>, x: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square("Ad")?;
    a.require_same_shape(x, "conjugate")?;
    let inv = inverse(a)?;
    Ok(&(a * x) * &inv)
}

/// `c[i][j][k]` with `[b_i, b_j] = sum_k c_ijk b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> StructureConstants<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// `c_ijk + c_jik = 0` for all indices (within `tol` for floats).
    pub fn is_skew(&self, tol: &Tolerance) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| (self.get(i, j, k).clone() + self.get(j, i, k).clone()).negligible(tol))
            })
        })
    }

    /// `sum_m (c_ijm c_mkl + c_jkm c_mil + c_kim c_mjl) = 0` for all
    /// `i, j, k, l`.
    pub fn satisfies_jacobi(&self, tol: &Tolerance) -> bool {
        let d = self.dim;
        let c = |a, b, e| self.get(a, b, e).clone();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut s = T::zero();
                        for m in 0..d {
                            s = s
                                + c(i, j, m) * c(m, k, l)
                                + c(j, k, m) * c(m, i, l)
                                + c(k, i, m) * c(m, j, l);
                        }
                        if !s.negligible(tol) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

/// Structure constants of a bracket-closed basis, in the basis carrier
/// (exact for rational and Gaussian-rational bases).
pub fn structure_constants<T: Scalar>(basis: &Basis<T>) -> Result<StructureConstants<T>> {
    let d = basis.len();
    let mut data = Vec::with_capacity(d * d * d);
    for x in &basis.elements {
        for y in &basis.elements {
            data.extend(basis.coordinates(&bracket(x, y)?)?);
        }
    }
    Ok(StructureConstants { dim: d, data })
}

/// `X = X1 + i X2` with `X1 = (X - X*)/2` and `X2 = (X + X*)/(2i)`, both
/// in `u(n)`.
pub fn u_decompose(x: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    x.require_square("u_decompose")?;
    let xh = x.adjoint();
    let x1 = (x - &xh).scale_real(0.5);
    let x2 = (x + &xh).scale(&Complex64::new(0.0, -0.5));
    Ok((x1, x2))
}

/// True iff `e^{tX}` is in `g` for every sampled `t`. A finite stand-in for
/// the definition; [`super::in_algebra`] is authoritative.
pub fn algebra_membership_via_exp(
    x: &ComplexMatrix,
    g: &GroupId,
    samples: &[f64],
    tol: &Tolerance,
) -> Result<bool> {
    let d = g.dim();
    if x.shape() != (d, d) {
        return shape_err(format!("{g} acts by {d}x{d} matrices, got {:?}", x.shape()));
    }
    for &t in samples {
        if !is_member(&mat_exp(&x.scale_real(t), &Tolerance::series())?, g, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}
