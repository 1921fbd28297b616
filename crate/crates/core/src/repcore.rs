//! Finite-dimensional representations of matrix Lie algebras: the value
//! type, direct sums, tensor products, duals and the homomorphism check.
//!
//! JSON form:
//! `{"algebra": "sl(2,C)", "labels": ["H","X","Y"], "generators": [..],
//! "weights": [[1], [-1]]}` with generators in the matrix interchange
//! format and `"weights"` optional.

use std::fmt;
use std::ops::{Add, Neg};

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{domain_err, shape_err, Error, Result};
use crate::liealg::{structure_constants, AlgebraId, Basis};
use crate::matcore::json::{complex_from_json, complex_to_json, exact_rational_from_json, rational_to_json};
use crate::matcore::{Matrix, Scalar, Tolerance};

/// Integer weight: one component for `sl(2,C)`, two for `sl(3,C)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn sl2(m: i64) -> Self {
        Weight(vec![m])
    }

    pub fn sl3(m1: i64, m2: i64) -> Self {
        Weight(vec![m1, m2])
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Generator matrices `pi(b)`, one per basis label, on a common space.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<T> {
    algebra: AlgebraId,
    labels: Vec<String>,
    generators: Vec<Matrix<T>>,
    weights: Option<Vec<Weight>>,
}

impl<T: Scalar> Representation<T> {
    /// Checks that all generators are square of one size, that there is one
    /// label per generator, and one weight of uniform length per basis
    /// vector when weights are given.
    pub fn new(
        algebra: AlgebraId,
        labels: Vec<String>,
        generators: Vec<Matrix<T>>,
        weights: Option<Vec<Weight>>,
    ) -> Result<Self> {
        if generators.is_empty() || labels.len() != generators.len() {
            return shape_err(format!("{} labels for {} generators", labels.len(), generators.len()));
        }
        let d = generators[0].rows();
        if generators.iter().any(|g| g.shape() != (d, d)) {
            return shape_err("generators must all be square of the same size");
        }
        if let Some(w) = &weights {
            if w.len() != d {
                return shape_err(format!("{} weights for dimension {d}", w.len()));
            }
            if w.iter().any(|x| x.0.len() != w[0].0.len()) {
                return shape_err("weights of mixed length");
            }
        }
        Ok(Representation { algebra, labels, generators, weights })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Matrix<T>] {
        &self.generators
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn generator(&self, label: &str) -> Option<&Matrix<T>> {
        self.labels.iter().position(|l| l == label).map(|i| &self.generators[i])
    }

    /// `pi(sum_i c_i b_i) = sum_i c_i pi(b_i)`.
    pub fn apply(&self, coeffs: &[T]) -> Result<Matrix<T>> {
        if coeffs.len() != self.generators.len() {
            return shape_err(format!("{} coefficients for {} generators", coeffs.len(), self.generators.len()));
        }
        let d = self.dim();
        Ok(self
            .generators
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(d, d), |acc, (g, c)| &acc + &g.scale(c)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Representation<U> {
        Representation {
            algebra: self.algebra,
            labels: self.labels.clone(),
            generators: self.generators.iter().map(|g| g.map(&f)).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Same representation with `weights` attached.
    pub fn with_weights(self, weights: Vec<Weight>) -> Result<Self> {
        Self::new(self.algebra, self.labels, self.generators, Some(weights))
    }
}

/// True iff `[pi(b_i), pi(b_j)] = sum_k c_ijk pi(b_k)` for every pair, with
/// `c` the structure constants of `basis`. Exact for exact carriers, to
/// `1e-10` otherwise.
pub fn verify_relations<T: Scalar>(rep: &Representation<T>, basis: &Basis<T>) -> Result<bool> {
    let n = basis.len();
    if rep.generators.len() != n {
        return shape_err(format!("{} generators for a basis of {n}", rep.generators.len()));
    }
    let c = structure_constants(basis)?;
    let tol = Tolerance::new(1e-10, 0.0);
    let g = &rep.generators;
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = g[i].commutator(&g[j])?;
            let rhs = (0..n).fold(Matrix::zeros(rep.dim(), rep.dim()), |acc, k| {
                let ck = c.get(i, j, k);
                if ck.is_zero() {
                    acc
                } else {
                    &acc + &g[k].scale(ck)
                }
            });
            let ok = if T::EXACT { lhs == rhs } else { lhs.approx_eq(&rhs, &tol)? };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn compatible<T>(r1: &Representation<T>, r2: &Representation<T>) -> Result<()> {
    if r1.algebra != r2.algebra {
        return domain_err(format!("representations of {} and {}", r1.algebra, r2.algebra));
    }
    if r1.labels != r2.labels {
        return domain_err("generator labels differ");
    }
    Ok(())
}

/// Block-diagonal generators on `V1 + V2`; weights concatenate.
pub fn direct_sum<T: Scalar>(r1: &Representation<T>, r2: &Representation<T>) -> Result<Representation<T>> {
    compatible(r1, r2)?;
    let generators = r1.generators.iter().zip(&r2.generators).map(|(a, b)| a.direct_sum(b)).collect();
    let weights = match (&r1.weights, &r2.weights) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
        _ => None,
    };
    Representation::new(r1.algebra, r1.labels.clone(), generators, weights)
}

/// `pi1(b) (x) I + I (x) pi2(b)`; basis vector `(i1, i2)` has index
/// `i1 * d2 + i2` and weight `w1(i1) + w2(i2)`.
pub fn tensor_product<T: Scalar>(r1: &Representation<T>, r2: &Representation<T>) -> Result<Representation<T>> {
    compatible(r1, r2)?;
    let (i1, i2) = (Matrix::identity(r1.dim()), Matrix::identity(r2.dim()));
    let generators = r1
        .generators
        .iter()
        .zip(&r2.generators)
        .map(|(a, b)| &a.kron(&i2) + &i1.kron(b))
        .collect();
    let weights = match (&r1.weights, &r2.weights) {
        (Some(a), Some(b)) => {
            if a[0].0.len() != b[0].0.len() {
                return domain_err("weights of different length");
            }
            Some(a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect())
        }
        _ => None,
    };
    Representation::new(r1.algebra, r1.labels.clone(), generators, weights)
}

/// `pi*(b) = -pi(b)^T`; weights are negated.
pub fn dual<T: Scalar>(rep: &Representation<T>) -> Representation<T> {
    Representation {
        algebra: rep.algebra,
        labels: rep.labels.clone(),
        generators: rep.generators.iter().map(|g| -&g.transpose()).collect(),
        weights: rep.weights.as_ref().map(|w| w.iter().map(|x| -x).collect()),
    }
}

fn to_json<T: Scalar>(rep: &Representation<T>, matrix: impl Fn(&Matrix<T>) -> Value) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".into(), json!(rep.algebra.to_string()));
    obj.insert("labels".into(), json!(rep.labels));
    obj.insert("generators".into(), Value::Array(rep.generators.iter().map(matrix).collect()));
    if let Some(w) = &rep.weights {
        obj.insert("weights".into(), json!(w.iter().map(|x| x.0.clone()).collect::<Vec<_>>()));
    }
    Value::Object(obj)
}

fn from_json<T: Scalar>(v: &Value, matrix: impl Fn(&Value) -> Result<Matrix<T>>) -> Result<Representation<T>> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("representation must be a JSON object".into()))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| Error::Parse(format!("missing \"{k}\"")));
    let algebra: AlgebraId = field("algebra")?
        .as_str()
        .ok_or_else(|| Error::Parse("\"algebra\" must be a string".into()))?
        .parse()?;
    let labels = field("labels")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"labels\" must be an array".into()))?
        .iter()
        .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Parse("labels must be strings".into())))
        .collect::<Result<Vec<_>>>()?;
    let generators = field("generators")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"generators\" must be an array".into()))?
        .iter()
        .map(matrix)
        .collect::<Result<Vec<_>>>()?;
    let weights = match obj.get("weights") {
        None | Some(Value::Null) => None,
        Some(w) => Some(
            w.as_array()
                .ok_or_else(|| Error::Parse("\"weights\" must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_array()
                        .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                        .filter(|a| !a.is_empty())
                        .map(Weight)
                        .ok_or_else(|| Error::Parse("a weight must be a non-empty integer array".into()))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Representation::new(algebra, labels, generators, weights).map_err(|e| Error::Parse(e.detail().to_string()))
}

impl Representation<BigRational> {
    pub fn to_json(&self) -> Value {
        to_json(self, rational_to_json)
    }

    /// Accepts generators in either matrix format; imaginary parts must be
    /// zero.
    pub fn from_json(v: &Value) -> Result<Self> {
        from_json(v, exact_rational_from_json)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?)
    }
}

impl Representation<Complex64> {
    pub fn to_json(&self) -> Value {
        to_json(self, complex_to_json)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        from_json(v, complex_from_json)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?)
    }
}
