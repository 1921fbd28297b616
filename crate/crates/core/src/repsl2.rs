//! Irreducible representations of `sl(2,C)` in the abstract ladder model and
//! the homogeneous-polynomial model, and decomposition of exact
//! representations into irreducibles.
//!
//! Bases are ordered `k = 0..m`, with `pi(H)` acting by `m - 2k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain_err, Error, Result};
use crate::liealg::{sl2_basis, AlgebraId};
use crate::matcore::{rational_rank, RationalMatrix};
use crate::repcore::{tensor_product, verify_relations, Representation, Weight};

/// An eigenvalue of `pi(H)`.
pub type Sl2Weight = i64;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn sl2() -> AlgebraId {
    "sl(2,C)".parse().expect("sl(2,C)")
}

fn labels() -> Vec<String> {
    ["H", "X", "Y"].iter().map(|s| s.to_string()).collect()
}

fn ladder(m: u32, x_coeff: impl Fn(i64) -> i64, y_coeff: impl Fn(i64) -> i64) -> Representation<BigRational> {
    let d = m as usize + 1;
    let mi = i64::from(m);
    let h = RationalMatrix::from_fn(d, d, |i, j| if i == j { q(mi - 2 * i as i64) } else { q(0) });
    let x = RationalMatrix::from_fn(d, d, |i, j| if i + 1 == j { q(x_coeff(j as i64)) } else { q(0) });
    let y = RationalMatrix::from_fn(d, d, |i, j| if i == j + 1 { q(y_coeff(j as i64)) } else { q(0) });
    let weights = (0..d as i64).map(|k| Weight::sl2(mi - 2 * k)).collect();
    Representation::new(sl2(), labels(), vec![h, x, y], Some(weights)).expect("ladder representation")
}

/// `pi(H) u_k = (m-2k) u_k`, `pi(Y) u_k = u_{k+1}`,
/// `pi(X) u_k = (km - k(k-1)) u_{k-1}`.
pub fn sl2_irrep(m: u32) -> Representation<BigRational> {
    let mi = i64::from(m);
    ladder(m, |k| k * mi - k * (k - 1), |_| 1)
}

/// Action on homogeneous polynomials of degree `m` in the basis
/// `z1^k z2^(m-k)`: `pi(H) = -z1 d/dz1 + z2 d/dz2`, `pi(X) = -z2 d/dz1`,
/// `pi(Y) = -z1 d/dz2`.
pub fn sl2_poly_irrep(m: u32) -> Representation<BigRational> {
    let mi = i64::from(m);
    ladder(m, |k| -k, |k| -(mi - k))
}

/// `T = diag((-1)^k m!/(m-k)!)`, so that `T^-1 P T = A` for each generator,
/// `P` from [`sl2_poly_irrep`] and `A` from [`sl2_irrep`].
pub fn sl2_intertwiner(m: u32) -> RationalMatrix {
    let d = m as usize + 1;
    let mut diag = Vec::with_capacity(d);
    let mut c = BigInt::one();
    for k in 0..d {
        if k > 0 {
            c = -c * BigInt::from(m as usize - k + 1);
        }
        diag.push(BigRational::from_integer(c.clone()));
    }
    RationalMatrix::diag(&diag)
}

fn generator<'a>(rep: &'a Representation<BigRational>, label: &str) -> Result<&'a RationalMatrix> {
    rep.generator(label)
        .ok_or_else(|| Error::Domain(format!("representation has no generator {label}")))
}

fn is_triangular(m: &RationalMatrix) -> bool {
    let n = m.rows();
    let upper = (0..n).all(|i| (0..i).all(|j| m[(i, j)].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m[(i, j)].is_zero()));
    upper || lower
}

fn integer(x: &BigRational) -> Result<i64> {
    if !x.is_integer() {
        return domain_err(format!("non-integer eigenvalue {x} of pi(H)"));
    }
    x.to_integer().to_i64().ok_or_else(|| Error::Domain("eigenvalue out of range".into()))
}

fn shifted(h: &RationalMatrix, lambda: i64) -> RationalMatrix {
    h - &RationalMatrix::identity(h.rows()).scale(&q(lambda))
}

/// Eigenvalues of `pi(H)` with multiplicity, largest first.
///
/// Uses the weight annotations when present, the diagonal when `pi(H)` is
/// triangular, and otherwise counts generalised eigenspaces for integer
/// candidates bounded by the row-sum norm. Fails if the spectrum is not
/// integral.
pub fn sl2_weights(rep: &Representation<BigRational>) -> Result<Vec<Sl2Weight>> {
    let mut out = if let Some(w) = rep.weights() {
        if w.iter().any(|x| x.0.len() != 1) {
            return domain_err("weights are not sl(2,C) weights");
        }
        w.iter().map(|x| x.0[0]).collect()
    } else {
        let h = generator(rep, "H")?;
        if is_triangular(h) {
            (0..h.rows()).map(|i| integer(&h[(i, i)])).collect::<Result<Vec<_>>>()?
        } else {
            let n = h.rows();
            let bound = (0..n)
                .map(|i| h.row(i).iter().fold(q(0), |s, x| s + x.abs()))
                .max()
                .unwrap_or_else(|| q(0))
                .ceil()
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Domain("pi(H) too large".into()))?;
            let mut out = Vec::new();
            for lambda in -bound..=bound {
                let p = shifted(h, lambda).pow(n as u32)?;
                let mult = n - rational_rank(&p);
                out.extend(std::iter::repeat(lambda).take(mult));
            }
            if out.len() != n {
                return domain_err("pi(H) has non-integer eigenvalues");
            }
            out
        }
    };
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Highest weights of the irreducible summands, largest first.
///
/// The number of summands of highest weight `l` is the dimension of
/// `ker pi(X)` intersected with the `l`-eigenspace of `pi(H)`.
pub fn sl2_decompose(rep: &Representation<BigRational>) -> Result<Vec<u32>> {
    if rep.generators().len() != 3 || !verify_relations(rep, &sl2_basis())? {
        return domain_err("not a representation of sl(2,C)");
    }
    let h = generator(rep, "H")?;
    let x = generator(rep, "X")?;
    let weights = sl2_weights(rep)?;
    let d = rep.dim();
    let top = weights.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    for lambda in (0..=top).rev() {
        let stacked = RationalMatrix::from_fn(2 * d, d, |i, j| {
            if i < d {
                x[(i, j)].clone()
            } else {
                shifted(h, lambda)[(i - d, j)].clone()
            }
        });
        let count = d - rational_rank(&stacked);
        out.extend(std::iter::repeat(lambda as u32).take(count));
    }
    let covered: usize = out.iter().map(|&m| m as usize + 1).sum();
    if covered != d {
        return Err(Error::Decomposition(format!(
            "highest weight vectors account for {covered} of {d} dimensions"
        )));
    }
    Ok(out)
}

/// Decomposition of `V_m (x) V_n`.
pub fn cg(m: u32, n: u32) -> Result<Vec<u32>> {
    sl2_decompose(&tensor_product(&sl2_irrep(m), &sl2_irrep(n))?)
}
