//! Gaussian elimination: exact rank/nullspace over [`ExactField`] carriers,
//! and pivoted determinant/inverse/solve over any [`Scalar`].

use super::matrix::Matrix;
use super::scalar::{ExactField, Scalar};
use crate::error::{domain_err, shape_err, Result};

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rref: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: ExactField> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Fully reduced row echelon form, exact.
pub fn row_reduce<T: ExactField>(m: &Matrix<T>) -> Echelon<T> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, r, p);
        let inv = T::one() / a[(r, c)].clone();
        for j in c..cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rref: a, pivots }
}

/// Exact rank.
pub fn rank<T: ExactField>(m: &Matrix<T>) -> usize {
    row_reduce(m).rank()
}

/// Exact basis of the right nullspace, one column vector per free column.
/// The number of vectors is `cols - rank`.
pub fn nullspace<T: ExactField>(m: &Matrix<T>) -> Vec<Matrix<T>> {
    let cols = m.cols();
    let ech = row_reduce(m);
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = -ech.rref[(row, f)].clone();
            }
            Matrix::column(v)
        })
        .collect()
}

pub fn rational_rank(m: &super::RationalMatrix) -> usize {
    rank(m)
}

pub fn rational_nullspace(m: &super::RationalMatrix) -> Vec<super::RationalMatrix> {
    nullspace(m)
}

fn swap_rows<T>(a: &mut Matrix<T>, i: usize, j: usize)
where
    T: Scalar,
{
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let tmp = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
}

/// LU factorisation with row pivoting: first non-zero pivot for exact
/// carriers, largest modulus otherwise.
struct Lu<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
    sign_flips: usize,
    singular: bool,
}

fn lu<T: Scalar>(m: &Matrix<T>) -> Lu<T> {
    let n = m.rows();
    let mut a = m.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut flips = 0;
    let scale = m.iter().map(Scalar::modulus).fold(0.0_f64, f64::max);
    let tiny = f64::EPSILON * scale * n as f64;
    let mut singular = false;
    for k in 0..n {
        let p = if T::EXACT {
            (k..n).find(|&i| !a[(i, k)].is_zero())
        } else {
            (k..n)
                .max_by(|&i, &j| a[(i, k)].modulus().total_cmp(&a[(j, k)].modulus()))
                .filter(|&i| a[(i, k)].modulus() > tiny && !a[(i, k)].is_zero())
        };
        let Some(p) = p else {
            singular = true;
            continue;
        };
        if p != k {
            swap_rows(&mut a, p, k);
            perm.swap(p, k);
            flips += 1;
        }
        let piv = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() / piv.clone();
            a[(i, k)] = f.clone();
            for j in k + 1..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
            }
        }
    }
    Lu { lu: a, perm, sign_flips: flips, singular }
}

pub fn determinant<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    m.require_square("determinant")?;
    let f = lu(m);
    if f.singular {
        return Ok(T::zero());
    }
    let mut d = (0..m.rows()).fold(T::one(), |acc, i| acc * f.lu[(i, i)].clone());
    if f.sign_flips % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

/// Solves `m x = b` for square, non-singular `m`; `b` may have several columns.
pub fn solve<T: Scalar>(m: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    m.require_square("solve")?;
    if b.rows() != m.rows() {
        return shape_err(format!(
            "right-hand side has {} rows, system has {}",
            b.rows(),
            m.rows()
        ));
    }
    let n = m.rows();
    let f = lu(m);
    if f.singular {
        return domain_err("matrix is singular");
    }
    let mut x = Matrix::<T>::zeros(n, b.cols());
    for c in 0..b.cols() {
        let mut y: Vec<T> = f.perm.iter().map(|&p| b[(p, c)].clone()).collect();
        for i in 0..n {
            for k in 0..i {
                if !f.lu[(i, k)].is_zero() {
                    y[i] = y[i].clone() - f.lu[(i, k)].clone() * y[k].clone();
                }
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                if !f.lu[(i, k)].is_zero() {
                    y[i] = y[i].clone() - f.lu[(i, k)].clone() * y[k].clone();
                }
            }
            y[i] = y[i].clone() / f.lu[(i, i)].clone();
        }
        for (i, v) in y.into_iter().enumerate() {
            x[(i, c)] = v;
        }
    }
    Ok(x)
}

pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    m.require_square("inverse")?;
    solve(m, &Matrix::identity(m.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{ComplexMatrix, RationalMatrix};
    use num_complex::Complex64;

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rational_rank(&RationalMatrix::zeros(3, 3)), 0);
        assert_eq!(rational_rank(&RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(rational_nullspace(&RationalMatrix::identity(2)).is_empty());
        let ns = rational_nullspace(&RationalMatrix::zeros(2, 2));
        assert_eq!(ns.len(), 2);
        let stacked = ns[0].direct_sum(&ns[1]);
        assert_eq!(rational_rank(&stacked), 2);

        let ns = rational_nullspace(&RationalMatrix::from_i64_rows(&[&[1, -1]]));
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][(0, 0)], ns[0][(1, 0)]);
        assert!(!ns[0].is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RationalMatrix::from_i64_rows(&[&[0, 2], &[3, 1]]);
        assert_eq!(determinant(&m).unwrap(), <num_rational::BigRational as Scalar>::from_i64(-6));
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(2));

        let c = ComplexMatrix::from_fn(2, 2, |i, j| Complex64::new((i + 2 * j) as f64, i as f64 - 1.0));
        let inv = inverse(&c).unwrap();
        let prod = &c * &inv;
        assert!(prod
            .approx_eq(&ComplexMatrix::identity(2), &crate::Tolerance::new(1e-14, 0.0))
            .unwrap());
    }

    #[test]
    fn singular_is_reported() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(inverse(&m).is_err());
        assert_eq!(determinant(&m).unwrap(), <num_rational::BigRational as Scalar>::zero());
    }
}
