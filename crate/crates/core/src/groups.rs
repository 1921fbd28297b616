//! The classical matrix groups: membership predicates, canonical
//! constructors, the components of `O(1,1)`, and polar decomposition.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{domain_err, shape_err, Error, Result};
use crate::matcore::{determinant, inverse, ComplexMatrix, Matrix, Scalar, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GeneralLinear,
    SpecialLinear,
    Orthogonal,
    SpecialOrthogonal,
    Unitary,
    SpecialUnitary,
    ComplexOrthogonal,
    ComplexSpecialOrthogonal,
    GeneralizedOrthogonal,
    GeneralizedSpecialOrthogonal,
    SymplecticReal,
    SymplecticComplex,
    CompactSymplectic,
    Heisenberg,
    EuclideanEmbedded,
    PoincareEmbedded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

/// A named group with its parameters.
///
/// String form (case-sensitive, no spaces):
///
/// | string | group |
/// |---|---|
/// | `GL(n,R)` `GL(n,C)` `SL(n,R)` `SL(n,C)` | general / special linear |
/// | `O(n)` `SO(n)` | real orthogonal |
/// | `O(n,C)` `SO(n,C)` | complex orthogonal |
/// | `O(n,k)` `SO(n,k)`, `k >= 1` | generalized orthogonal, size `n+k` |
/// | `U(n)` `SU(n)` | unitary |
/// | `Sp(n,R)` `Sp(n,C)` | symplectic, size `2n` |
/// | `Sp(n)` | compact symplectic, size `2n` |
/// | `Heis` | Heisenberg group, size 3 |
/// | `E(n)` | Euclidean group, size `n+1` |
/// | `P(n,1)` | Poincaré group, size `n+2` |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupId {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub field: Field,
}

impl GroupId {
    /// Checks the parameter constraints.
    pub fn new(family: Family, n: usize, k: usize, field: Field) -> Result<Self> {
        use Family::*;
        if n == 0 {
            return domain_err("n must be positive");
        }
        let needs_k = matches!(family, GeneralizedOrthogonal | GeneralizedSpecialOrthogonal);
        if needs_k && k == 0 {
            return domain_err("generalized orthogonal groups need k >= 1");
        }
        if family == PoincareEmbedded && k != 1 {
            return domain_err("the Poincaré group has k = 1");
        }
        if !needs_k && family != PoincareEmbedded && k != 0 {
            return domain_err(format!("{family:?} takes no k parameter"));
        }
        if family == Heisenberg && n != 3 {
            return domain_err("the Heisenberg group is 3x3");
        }
        let fixed = match family {
            GeneralLinear | SpecialLinear => None,
            Unitary | SpecialUnitary | ComplexOrthogonal | ComplexSpecialOrthogonal
            | SymplecticComplex | CompactSymplectic => Some(Field::Complex),
            _ => Some(Field::Real),
        };
        if fixed.is_some_and(|f| f != field) {
            return domain_err(format!("{family:?} is defined over {:?}", fixed.unwrap()));
        }
        Ok(GroupId { family, n, k, field })
    }

    pub fn simple(family: Family, n: usize) -> Result<Self> {
        use Family::*;
        let field = match family {
            Unitary | SpecialUnitary | ComplexOrthogonal | ComplexSpecialOrthogonal
            | SymplecticComplex | CompactSymplectic => Field::Complex,
            _ => Field::Real,
        };
        let k = usize::from(family == PoincareEmbedded);
        GroupId::new(family, n, k, field)
    }

    /// Matrix size the group acts by.
    pub fn dim(&self) -> usize {
        use Family::*;
        match self.family {
            GeneralizedOrthogonal | GeneralizedSpecialOrthogonal => self.n + self.k,
            SymplecticReal | SymplecticComplex | CompactSymplectic => 2 * self.n,
            Heisenberg => 3,
            EuclideanEmbedded => self.n + 1,
            PoincareEmbedded => self.n + 2,
            _ => self.n,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let fl = if self.field == Field::Real { "R" } else { "C" };
        let (n, k) = (self.n, self.k);
        match self.family {
            GeneralLinear => write!(f, "GL({n},{fl})"),
            SpecialLinear => write!(f, "SL({n},{fl})"),
            Orthogonal => write!(f, "O({n})"),
            SpecialOrthogonal => write!(f, "SO({n})"),
            Unitary => write!(f, "U({n})"),
            SpecialUnitary => write!(f, "SU({n})"),
            ComplexOrthogonal => write!(f, "O({n},C)"),
            ComplexSpecialOrthogonal => write!(f, "SO({n},C)"),
            GeneralizedOrthogonal => write!(f, "O({n},{k})"),
            GeneralizedSpecialOrthogonal => write!(f, "SO({n},{k})"),
            SymplecticReal => write!(f, "Sp({n},R)"),
            SymplecticComplex => write!(f, "Sp({n},C)"),
            CompactSymplectic => write!(f, "Sp({n})"),
            Heisenberg => write!(f, "Heis"),
            EuclideanEmbedded => write!(f, "E({n})"),
            PoincareEmbedded => write!(f, "P({n},1)"),
        }
    }
}

/// Splits `NAME(a[,b])` into the name and its arguments.
pub(crate) fn split_call(s: &str) -> Result<(&str, Vec<&str>)> {
    let bad = || Error::Parse(format!("cannot parse \"{s}\""));
    let open = s.find('(').ok_or_else(bad)?;
    let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let args: Vec<&str> = inner.split(',').collect();
    if args.len() > 2 || args.iter().any(|a| a.is_empty()) {
        return Err(bad());
    }
    Ok((&s[..open], args))
}

pub(crate) fn parse_dim(a: &str) -> Result<usize> {
    if a.is_empty() || a.len() > 4 || !a.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("\"{a}\" is not a small positive integer")));
    }
    let v: usize = a.parse().map_err(|_| Error::Parse(format!("bad integer \"{a}\"")))?;
    if v == 0 {
        return Err(Error::Parse("dimensions must be positive".into()));
    }
    Ok(v)
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Family::*;
        if s == "Heis" {
            return GroupId::new(Heisenberg, 3, 0, Field::Real);
        }
        let (name, args) = split_call(s)?;
        let n = parse_dim(args[0])?;
        let second = args.get(1).copied();
        let field_of = |a: &str| match a {
            "R" => Ok(Field::Real),
            "C" => Ok(Field::Complex),
            _ => Err(Error::Parse(format!("unknown field \"{a}\" in \"{s}\""))),
        };
        let id = match (name, second) {
            ("GL", Some(f)) => GroupId::new(GeneralLinear, n, 0, field_of(f)?),
            ("SL", Some(f)) => GroupId::new(SpecialLinear, n, 0, field_of(f)?),
            ("O", None) => GroupId::simple(Orthogonal, n),
            ("SO", None) => GroupId::simple(SpecialOrthogonal, n),
            ("O", Some("C")) => GroupId::simple(ComplexOrthogonal, n),
            ("SO", Some("C")) => GroupId::simple(ComplexSpecialOrthogonal, n),
            ("O", Some(k)) => GroupId::new(GeneralizedOrthogonal, n, parse_dim(k)?, Field::Real),
            ("SO", Some(k)) => {
                GroupId::new(GeneralizedSpecialOrthogonal, n, parse_dim(k)?, Field::Real)
            }
            ("U", None) => GroupId::simple(Unitary, n),
            ("SU", None) => GroupId::simple(SpecialUnitary, n),
            ("Sp", Some("R")) => GroupId::simple(SymplecticReal, n),
            ("Sp", Some("C")) => GroupId::simple(SymplecticComplex, n),
            ("Sp", None) => GroupId::simple(CompactSymplectic, n),
            ("E", None) => GroupId::simple(EuclideanEmbedded, n),
            ("P", Some("1")) => GroupId::simple(PoincareEmbedded, n),
            _ => return Err(Error::Parse(format!("unknown group \"{s}\""))),
        };
        id.map_err(|e| Error::Parse(e.detail().to_string()))
    }
}

/// `diag(I_n, -I_k)`.
pub fn metric_g(n: usize, k: usize) -> ComplexMatrix {
    let mut d = vec![Complex64::new(1.0, 0.0); n];
    d.extend(std::iter::repeat(Complex64::new(-1.0, 0.0)).take(k));
    ComplexMatrix::diag(&d)
}

/// `[[0, I_n], [-I_n, 0]]`.
#[allow(non_snake_case)]
pub fn symplectic_J(n: usize) -> ComplexMatrix {
    let mut j = ComplexMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = Complex64::new(1.0, 0.0);
        j[(n + i, i)] = Complex64::new(-1.0, 0.0);
    }
    j
}

fn det_is(a: &ComplexMatrix, want: f64, tol: &Tolerance) -> Result<bool> {
    Ok(determinant(a)?.near(&Complex64::new(want, 0.0), tol))
}

fn preserves(a: &ComplexMatrix, form: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    (&(&a.transpose() * form) * a).approx_eq(form, tol)
}

fn is_unitary(a: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    (&a.adjoint() * a).approx_eq(&ComplexMatrix::identity(a.rows()), tol)
}

fn affine_frame(a: &ComplexMatrix, tol: &Tolerance) -> bool {
    let n = a.rows() - 1;
    (0..=n).all(|j| {
        let want = if j == n { 1.0 } else { 0.0 };
        a[(n, j)].near(&Complex64::new(want, 0.0), tol)
    })
}

/// Evaluates the defining identity of `g` within `tol`. Real groups also
/// require every imaginary part to be within `tol.abs` of zero.
pub fn is_member(a: &ComplexMatrix, g: &GroupId, tol: &Tolerance) -> Result<bool> {
    use Family::*;
    let d = g.dim();
    if a.shape() != (d, d) {
        return shape_err(format!("{g} acts by {d}x{d} matrices, got {:?}", a.shape()));
    }
    if g.field == Field::Real && !a.is_real_within(tol) {
        return Ok(false);
    }
    let id = ComplexMatrix::identity(d);
    Ok(match g.family {
        GeneralLinear => determinant(a)?.modulus() > tol.abs,
        SpecialLinear => det_is(a, 1.0, tol)?,
        Orthogonal | ComplexOrthogonal => preserves(a, &id, tol)?,
        SpecialOrthogonal | ComplexSpecialOrthogonal => {
            preserves(a, &id, tol)? && det_is(a, 1.0, tol)?
        }
        Unitary => is_unitary(a, tol)?,
        SpecialUnitary => is_unitary(a, tol)? && det_is(a, 1.0, tol)?,
        GeneralizedOrthogonal => preserves(a, &metric_g(g.n, g.k), tol)?,
        GeneralizedSpecialOrthogonal => {
            preserves(a, &metric_g(g.n, g.k), tol)? && det_is(a, 1.0, tol)?
        }
        SymplecticReal | SymplecticComplex => preserves(a, &symplectic_J(g.n), tol)?,
        CompactSymplectic => preserves(a, &symplectic_J(g.n), tol)? && is_unitary(a, tol)?,
        Heisenberg => (0..3).all(|i| {
            (0..=i).all(|j| {
                let want = if i == j { 1.0 } else { 0.0 };
                a[(i, j)].near(&Complex64::new(want, 0.0), tol)
            })
        }),
        EuclideanEmbedded => {
            affine_frame(a, tol) && preserves(&a.submatrix(0, 0, g.n, g.n), &ComplexMatrix::identity(g.n), tol)?
        }
        PoincareEmbedded => {
            affine_frame(a, tol)
                && preserves(&a.submatrix(0, 0, g.n + 1, g.n + 1), &metric_g(g.n, 1), tol)?
        }
    })
}

/// `[[alpha, -conj(beta)], [beta, conj(alpha)]]`.
pub fn su2_matrix(alpha: Complex64, beta: Complex64) -> Result<ComplexMatrix> {
    let norm = alpha.norm_sqr() + beta.norm_sqr();
    if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
        return domain_err(format!("|alpha|^2 + |beta|^2 = {norm}, expected 1"));
    }
    Ok(ComplexMatrix::from_rows(vec![
        vec![alpha, -beta.conj()],
        vec![beta, alpha.conj()],
    ]))
}

/// The affine matrix `[[R, x], [0, 1]]` of the pair `{x, R}`. With an
/// `O(n,1)` block this is also the Poincaré embedding.
pub fn euclidean_embed<T: Scalar>(r: &Matrix<T>, x: &[T]) -> Result<Matrix<T>> {
    let n = r.rows();
    if !r.is_square() || x.len() != n {
        return shape_err(format!(
            "need an n x n block and a length-n vector, got {:?} and {}",
            r.shape(),
            x.len()
        ));
    }
    if !r.is_real_within(&Tolerance::new(0.0, 0.0)) || !x.iter().all(|v| v.is_real_within(&Tolerance::new(0.0, 0.0))) {
        return domain_err("embedded blocks must be real");
    }
    let mut out = Matrix::identity(n + 1);
    out.set_block(0, 0, r);
    for (i, v) in x.iter().enumerate() {
        out[(i, n)] = v.clone();
    }
    Ok(out)
}

/// Polar decomposition `A = R H` of a real invertible matrix: `R`
/// orthogonal, `H` symmetric positive definite.
///
/// `R` is the limit of `R <- (R + R^{-T}) / 2` started at `A`; then
/// `H = R^T A`, symmetrised. `H` is certified positive definite by a
/// Cholesky factorisation.
pub fn polar_decompose_sl(a: &ComplexMatrix, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexMatrix)> {
    a.require_square("polar_decompose_sl")?;
    if !a.is_real_within(tol) {
        return domain_err("polar decomposition needs a real matrix");
    }
    let a = a.real_part();
    let n = a.rows();
    let mut r = a.clone();
    let mut last_step = f64::INFINITY;
    let mut converged = false;
    for _ in 0..100 {
        let next = (&r + &inverse(&r)?.transpose()).scale_real(0.5);
        let step = (&next - &r).frobenius_norm();
        r = next;
        let floor = 1e-15 * r.frobenius_norm().max(1.0);
        // once quadratic convergence has stalled at rounding level, stop
        if step <= floor || (step < 1e-8 && step >= last_step) {
            converged = true;
            break;
        }
        last_step = step;
    }
    if !converged {
        return Err(Error::Convergence("polar iteration did not settle in 100 steps".into()));
    }
    let h = &r.transpose() * &a;
    let h = (&h + &h.transpose()).scale_real(0.5);
    if !is_member(&r, &GroupId::simple(Family::Orthogonal, n)?, tol)? {
        return Err(Error::Convergence("orthogonal factor lost orthogonality".into()));
    }
    if !cholesky_ok(&h) {
        return Err(Error::Convergence("symmetric factor is not positive definite".into()));
    }
    Ok((r.ensure_finite("polar factor")?, h.ensure_finite("polar factor")?))
}

/// True iff the real symmetric matrix admits a Cholesky factorisation with
/// strictly positive pivots.
pub fn cholesky_ok(h: &ComplexMatrix) -> bool {
    let n = h.rows();
    let mut l = vec![0.0f64; n * n];
    for j in 0..n {
        let mut d = h[(j, j)].re;
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d > 0.0) {
            return false;
        }
        let djj = d.sqrt();
        l[j * n + j] = djj;
        for i in j + 1..n {
            let mut s = h[(i, j)].re;
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / djj;
        }
    }
    true
}

/// The four shapes an element of `O(1,1)` can take, with `c = cosh t`,
/// `s = sinh t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum O11Form {
    /// `[[c, s], [s, c]]`
    Boost,
    /// `[[-c, s], [s, -c]]`
    NegBoost,
    /// `[[c, -s], [s, -c]]`
    Reflect,
    /// `[[-c, -s], [s, c]]`
    NegReflect,
}

impl O11Form {
    pub fn index(self) -> u8 {
        match self {
            O11Form::Boost => 1,
            O11Form::NegBoost => 2,
            O11Form::Reflect => 3,
            O11Form::NegReflect => 4,
        }
    }
}

/// Classifies an `O(1,1)` element by the signs of `A_11` and `det A`.
pub fn o11_component(a: &ComplexMatrix, tol: &Tolerance) -> Result<O11Form> {
    let g = GroupId::new(Family::GeneralizedOrthogonal, 1, 1, Field::Real)?;
    if a.shape() != (2, 2) || !is_member(a, &g, tol)? {
        return domain_err("matrix is not in O(1,1)");
    }
    let positive_corner = a[(0, 0)].re > 0.0;
    let det_one = determinant(a)?.re > 0.0;
    Ok(match (positive_corner, det_one) {
        (true, true) => O11Form::Boost,
        (false, true) => O11Form::NegBoost,
        (true, false) => O11Form::Reflect,
        (false, false) => O11Form::NegReflect,
    })
}

/// `[[cosh t, sinh t], [sinh t, cosh t]]`.
pub fn boost(t: f64) -> ComplexMatrix {
    ComplexMatrix::real_rows(&[&[t.cosh(), t.sinh()], &[t.sinh(), t.cosh()]])
}

/// `[[cos t, -sin t], [sin t, cos t]]`.
pub fn rotation2(t: f64) -> ComplexMatrix {
    ComplexMatrix::real_rows(&[&[t.cos(), -t.sin()], &[t.sin(), t.cos()]])
}
