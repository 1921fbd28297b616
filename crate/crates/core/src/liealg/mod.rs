//! Lie algebras of the classical groups: membership, brackets, `ad` and
//! `Ad`, structure constants, and the `u(n)` splitting of `gl(n,C)`.

mod basis;
mod ops;

pub use basis::{gl_basis, heis_basis, sl2_basis, sl3_basis, so3_basis, su2_basis, Basis};
pub use ops::{
    ad_matrix, algebra_membership_via_exp, bracket, structure_constants, u_decompose, Ad_apply,
    StructureConstants, DEFAULT_EXP_SAMPLES,
};

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{shape_err, Error, Result};
use crate::groups::{parse_dim, split_call, Family, Field, GroupId};
use crate::matcore::{
    gaussian, rational_nullspace, ComplexMatrix, GaussianMatrix, GaussianRational, Matrix,
    RationalMatrix, Scalar, Tolerance,
};

/// The Lie algebra of a [`GroupId`].
///
/// String form mirrors the group names in lower case: `gl(n,R)`,
/// `sl(n,C)`, `so(n)`, `so(n,C)`, `so(n,k)`, `u(n)`, `su(n)`, `sp(n,R)`,
/// `sp(n,C)`, `sp(n)`, `heis`, `e(n)`, `p(n,1)`. `O(n)` and `SO(n)` share
/// `so(n)`, and likewise for the other orthogonal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraId {
    group: GroupId,
}

impl AlgebraId {
    pub fn of_group(g: &GroupId) -> Self {
        let family = match g.family {
            Family::Orthogonal => Family::SpecialOrthogonal,
            Family::ComplexOrthogonal => Family::ComplexSpecialOrthogonal,
            Family::GeneralizedOrthogonal => Family::GeneralizedSpecialOrthogonal,
            f => f,
        };
        AlgebraId { group: GroupId { family, ..*g } }
    }

    /// The identity component's group id (`SO(n)` for `so(n)`, etc.).
    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn family(&self) -> Family {
        self.group.family
    }

    pub fn field(&self) -> Field {
        self.group.field
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.group.to_string();
        let (head, tail) = g.split_at(g.find('(').unwrap_or(g.len()));
        let tail = if head == "Heis" { "" } else { tail };
        write!(f, "{}{}", head.to_lowercase(), tail)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "heis" {
            return Ok(AlgebraId::of_group(&"Heis".parse()?));
        }
        let (name, args) = split_call(s)?;
        let upper = match name {
            "gl" => "GL",
            "sl" => "SL",
            "so" => "SO",
            "u" => "U",
            "su" => "SU",
            "sp" => "Sp",
            "e" => "E",
            "p" => "P",
            _ => return Err(Error::Parse(format!("unknown algebra \"{s}\""))),
        };
        parse_dim(args[0])?;
        let g: GroupId = format!("{upper}({})", args.join(",")).parse()?;
        Ok(AlgebraId::of_group(&g))
    }
}

fn signature<T: Scalar>(n: usize, k: usize) -> Matrix<T> {
    let d: Vec<T> = (0..n + k).map(|i| if i < n { T::one() } else { -T::one() }).collect();
    Matrix::diag(&d)
}

fn symplectic<T: Scalar>(n: usize) -> Matrix<T> {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = T::one();
        j[(n + i, i)] = -T::one();
    }
    j
}

/// `(lhs, rhs)` pairs that must agree for `x` to lie in `a`; realness is
/// handled separately.
fn conditions<T: Scalar>(x: &Matrix<T>, a: &AlgebraId) -> Vec<(Matrix<T>, Matrix<T>)> {
    use Family::*;
    let g = a.group();
    let zero1 = || Matrix::<T>::zeros(1, 1);
    let trace = |m: &Matrix<T>| Matrix::diag(&[m.trace()]);
    let skew = |m: &Matrix<T>| (m.transpose(), -m);
    let g_skew = |m: &Matrix<T>, form: &Matrix<T>| (&(form * &m.transpose()) * form, -m);
    match g.family {
        GeneralLinear => vec![],
        SpecialLinear => vec![(trace(x), zero1())],
        SpecialOrthogonal | ComplexSpecialOrthogonal => vec![skew(x)],
        GeneralizedSpecialOrthogonal => vec![g_skew(x, &signature(g.n, g.k))],
        Unitary => vec![(x.adjoint(), -x)],
        SpecialUnitary => vec![(x.adjoint(), -x), (trace(x), zero1())],
        SymplecticReal | SymplecticComplex => {
            let j = symplectic::<T>(g.n);
            vec![(&(&j * &x.transpose()) * &j, x.clone())]
        }
        CompactSymplectic => {
            let j = symplectic::<T>(g.n);
            vec![(&(&j * &x.transpose()) * &j, x.clone()), (x.adjoint(), -x)]
        }
        Heisenberg => {
            let lower = Matrix::from_fn(3, 3, |i, j| if j <= i { x[(i, j)].clone() } else { T::zero() });
            vec![(lower, Matrix::zeros(3, 3))]
        }
        EuclideanEmbedded | PoincareEmbedded => {
            let d = x.rows();
            let m = d - 1;
            let bottom = x.submatrix(m, 0, 1, d);
            let block = x.submatrix(0, 0, m, m);
            let form = if g.family == EuclideanEmbedded { signature(m, 0) } else { signature(g.n, 1) };
            vec![(bottom, Matrix::zeros(1, d)), g_skew(&block, &form)]
        }
        // groups are mapped to their identity component by `of_group`
        Orthogonal | ComplexOrthogonal | GeneralizedOrthogonal => unreachable!(),
    }
}

/// Evaluates the defining linear conditions of `a` within `tol` (exactly
/// for exact carriers). Real algebras also require real entries.
pub fn in_algebra<T: Scalar>(x: &Matrix<T>, a: &AlgebraId, tol: &Tolerance) -> Result<bool> {
    let d = a.dim();
    if x.shape() != (d, d) {
        return shape_err(format!("{a} consists of {d}x{d} matrices, got {:?}", x.shape()));
    }
    if a.field() == Field::Real && !x.is_real_within(tol) {
        return Ok(false);
    }
    for (lhs, rhs) in conditions(x, a) {
        if !lhs.approx_eq(&rhs, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An exact basis of `a` as a real vector space, from the nullspace of its
/// defining conditions over the real coordinates `E_ij`, `i E_ij`.
pub fn real_basis(a: &AlgebraId) -> Result<Vec<GaussianMatrix>> {
    let d = a.dim();
    let coords: Vec<GaussianMatrix> = (0..2 * d * d)
        .map(|p| {
            let (i, j) = ((p % (d * d)) / d, p % d);
            let unit = GaussianMatrix::unit(d, i, j);
            if p < d * d {
                unit
            } else {
                unit.scale(&GaussianRational::imaginary_unit().expect("complex carrier"))
            }
        })
        .collect();
    let defect = |x: &GaussianMatrix| -> Vec<BigRational> {
        let mut out = Vec::new();
        let mut push = |m: &GaussianMatrix| {
            for z in m.iter() {
                out.push(z.re.clone());
                out.push(z.im.clone());
            }
        };
        if a.field() == Field::Real {
            push(&(x - &x.conj()));
        }
        for (lhs, rhs) in conditions(x, a) {
            push(&(&lhs - &rhs));
        }
        out
    };
    let columns: Vec<Vec<BigRational>> = coords.iter().map(defect).collect();
    let rows = columns[0].len();
    if rows == 0 {
        return Ok(coords);
    }
    let constraint = RationalMatrix::from_fn(rows, coords.len(), |r, c| columns[c][r].clone());
    Ok(rational_nullspace(&constraint)
        .into_iter()
        .map(|v| {
            coords.iter().enumerate().fold(GaussianMatrix::zeros(d, d), |acc, (p, e)| {
                if v[(p, 0)].is_zero() {
                    acc
                } else {
                    &acc + &e.scale(&gaussian(v[(p, 0)].clone(), <BigRational as Scalar>::zero()))
                }
            })
        })
        .collect())
}

/// [`real_basis`] converted to floating point.
pub fn real_basis_complex(a: &AlgebraId) -> Result<Vec<ComplexMatrix>> {
    Ok(real_basis(a)?.iter().map(Matrix::to_complex).collect())
}

/// `sum_i c_i B_i` with real coefficients.
pub fn combine(basis: &[ComplexMatrix], coeffs: &[f64]) -> Result<ComplexMatrix> {
    if basis.is_empty() || basis.len() != coeffs.len() {
        return shape_err(format!("{} basis elements but {} coefficients", basis.len(), coeffs.len()));
    }
    let (r, c) = basis[0].shape();
    let mut out = ComplexMatrix::zeros(r, c);
    for (b, &t) in basis.iter().zip(coeffs) {
        out = out.checked_add(&b.scale_real(t))?;
    }
    Ok(out)
}
