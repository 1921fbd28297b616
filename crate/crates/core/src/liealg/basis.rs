use num_rational::BigRational;

use super::{in_algebra, AlgebraId};
use crate::error::{domain_err, shape_err, Error, Result};
use crate::matcore::{gaussian, solve, GaussianRational, Matrix, RationalMatrix, Scalar, Tolerance};

/// An ordered, labelled basis of a matrix Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis<T> {
    pub algebra: AlgebraId,
    pub labels: Vec<String>,
    pub elements: Vec<Matrix<T>>,
}

impl<T: Scalar> Basis<T> {
    /// Checks that the elements are square of one size, match the labels,
    /// and lie in `algebra`.
    pub fn new(algebra: AlgebraId, labels: Vec<String>, elements: Vec<Matrix<T>>) -> Result<Self> {
        if elements.is_empty() || labels.len() != elements.len() {
            return shape_err(format!("{} labels for {} elements", labels.len(), elements.len()));
        }
        for (l, e) in labels.iter().zip(&elements) {
            if !in_algebra(e, &algebra, &Tolerance::default())? {
                return domain_err(format!("basis element {l} is not in {algebra}"));
            }
        }
        Ok(Basis { algebra, labels, elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Size of the matrices.
    pub fn matrix_dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, label: &str) -> Option<&Matrix<T>> {
        self.index_of(label).map(|i| &self.elements[i])
    }

    /// `sum_i c_i b_i`.
    pub fn combine(&self, coeffs: &[T]) -> Result<Matrix<T>> {
        if coeffs.len() != self.len() {
            return shape_err(format!("{} coefficients for a basis of {}", coeffs.len(), self.len()));
        }
        let d = self.matrix_dim();
        Ok(self.elements.iter().zip(coeffs).fold(Matrix::zeros(d, d), |acc, (b, c)| {
            if c.is_zero() {
                acc
            } else {
                &acc + &b.scale(c)
            }
        }))
    }

    /// Coordinates of `v` in this basis.
    ///
    /// Solves the normal equations `(B* B) c = B* v`, `B` having the
    /// flattened elements as columns. Exact carriers require a zero
    /// residual; floating ones require `|Bc - v| < 1e-9 (1 + |v|)`.
    pub fn coordinates(&self, v: &Matrix<T>) -> Result<Vec<T>> {
        let d = self.matrix_dim();
        if v.shape() != (d, d) {
            return shape_err(format!("expected a {d}x{d} matrix, got {:?}", v.shape()));
        }
        let m = self.len();
        let b = Matrix::from_fn(d * d, m, |p, j| self.elements[j][(p / d, p % d)].clone());
        let target = Matrix::column(v.iter().cloned().collect());
        let bh = b.adjoint();
        let c = solve(&(&bh * &b), &(&bh * &target))
            .map_err(|_| Error::Domain("basis elements are linearly dependent".into()))?;
        let residual = &(&b * &c) - &target;
        let inside = if T::EXACT {
            residual.is_zero()
        } else {
            residual.frobenius_norm() < 1e-9 * (1.0 + v.frobenius_norm())
        };
        if !inside {
            return Err(Error::Closure(format!(
                "matrix is not in the span of the {} basis",
                self.algebra
            )));
        }
        Ok(c.into_vec())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Basis<U> {
        Basis {
            algebra: self.algebra,
            labels: self.labels.clone(),
            elements: self.elements.iter().map(|e| e.map(&f)).collect(),
        }
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn algebra(s: &str) -> AlgebraId {
    s.parse().expect("built-in algebra name")
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `E1 = (1/2)[[i,0],[0,-i]]`, `E2 = (1/2)[[0,1],[-1,0]]`,
/// `E3 = (1/2)[[0,i],[i,0]]`, with `[E1,E2] = E3` cyclically.
pub fn su2_basis() -> Basis<GaussianRational> {
    let z = || gaussian(q(0, 1), q(0, 1));
    let re = |v| gaussian(q(v, 2), q(0, 1));
    let im = |v| gaussian(q(0, 1), q(v, 2));
    let e1 = Matrix::from_rows(vec![vec![im(1), z()], vec![z(), im(-1)]]);
    let e2 = Matrix::from_rows(vec![vec![z(), re(1)], vec![re(-1), z()]]);
    let e3 = Matrix::from_rows(vec![vec![z(), im(1)], vec![im(1), z()]]);
    Basis::new(algebra("su(2)"), labels(&["E1", "E2", "E3"]), vec![e1, e2, e3]).expect("su(2) basis")
}

/// The infinitesimal rotations `F1, F2, F3` about the coordinate axes.
pub fn so3_basis() -> Basis<BigRational> {
    let f1 = RationalMatrix::from_i64_rows(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
    let f2 = RationalMatrix::from_i64_rows(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
    let f3 = RationalMatrix::from_i64_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
    Basis::new(algebra("so(3)"), labels(&["F1", "F2", "F3"]), vec![f1, f2, f3]).expect("so(3) basis")
}

/// `H = diag(1,-1)`, `X = E12`, `Y = E21`.
pub fn sl2_basis() -> Basis<BigRational> {
    let h = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
    let x = RationalMatrix::unit(2, 0, 1);
    let y = RationalMatrix::unit(2, 1, 0);
    Basis::new(algebra("sl(2,C)"), labels(&["H", "X", "Y"]), vec![h, x, y]).expect("sl(2) basis")
}

/// `H1 = diag(1,-1,0)`, `H2 = diag(0,1,-1)`, `X1 = E12`, `X2 = E23`,
/// `X3 = E13`, `Y1 = E21`, `Y2 = E32`, `Y3 = E31`.
pub fn sl3_basis() -> Basis<BigRational> {
    let e = |i, j| RationalMatrix::unit(3, i, j);
    let h1 = RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
    let h2 = RationalMatrix::from_i64_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
    Basis::new(
        algebra("sl(3,C)"),
        labels(&["H1", "H2", "X1", "X2", "X3", "Y1", "Y2", "Y3"]),
        vec![h1, h2, e(0, 1), e(1, 2), e(0, 2), e(1, 0), e(2, 1), e(2, 0)],
    )
    .expect("sl(3) basis")
}

/// `X = E12`, `Y = E23`, `Z = E13` (central).
pub fn heis_basis() -> Basis<BigRational> {
    let e = |i, j| RationalMatrix::unit(3, i, j);
    Basis::new(algebra("heis"), labels(&["X", "Y", "Z"]), vec![e(0, 1), e(1, 2), e(0, 2)])
        .expect("Heisenberg basis")
}

/// Elementary matrices `E_ij` of `gl(n,C)`, row-major order.
pub fn gl_basis<T: Scalar>(n: usize) -> Result<Basis<T>> {
    let a: AlgebraId = format!("gl({n},C)").parse()?;
    let mut names = Vec::new();
    let mut elems = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("E{}{}", i + 1, j + 1));
            elems.push(Matrix::unit(n, i, j));
        }
    }
    Ok(Basis { algebra: a, labels: names, elements: elems })
}
