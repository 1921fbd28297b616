//! `sl(3,C)`: roots, the weight order, highest-weight irreducibles built
//! inside tensor powers of the standard and dual standard representations,
//! weight tables and the Weyl group.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{domain_err, Error, Result};
use crate::liealg::AlgebraId;
use crate::matcore::RationalMatrix;
use crate::repcore::{Representation, Weight};

pub use crate::liealg::sl3_basis;

/// `(m1, m2)`: eigenvalues of `pi(H1)` and `pi(H2)`.
pub type Sl3Weight = (i64, i64);

/// Largest `m1 + m2` accepted by [`sl3_highest_weight_irrep`].
pub const DEFAULT_CAP: u32 = 6;

pub const SIMPLE_ROOTS: [Sl3Weight; 2] = [(2, -1), (-1, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub weight: Sl3Weight,
    pub vector_label: &'static str,
}

pub fn sl3_roots() -> [Root; 6] {
    let r = |weight, vector_label| Root { weight, vector_label };
    [
        r((2, -1), "X1"),
        r((-1, 2), "X2"),
        r((1, 1), "X3"),
        r((-2, 1), "Y1"),
        r((1, -2), "Y2"),
        r((-1, -1), "Y3"),
    ]
}

/// `(a, b)` with `mu = a alpha1 + b alpha2`, exactly.
pub fn simple_root_coords(mu: Sl3Weight) -> (BigRational, BigRational) {
    let third = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(3));
    (third(2 * mu.0 + mu.1), third(mu.0 + 2 * mu.1))
}

/// `mu1 >= mu2`: the difference is a non-negative combination of the
/// simple roots.
pub fn is_higher(mu1: Sl3Weight, mu2: Sl3Weight) -> bool {
    let (a, b) = simple_root_coords((mu1.0 - mu2.0, mu1.1 - mu2.1));
    !a.is_negative() && !b.is_negative()
}

/// The weight above every other one, if there is one.
pub fn highest_weight(weights: &[Sl3Weight]) -> Option<Sl3Weight> {
    weights.iter().copied().find(|&w| weights.iter().all(|&v| is_higher(w, v)))
}

/// `(m1+1)(m2+1)(m1+m2+2)/2`.
pub fn sl3_dim_formula(m1: u32, m2: u32) -> u64 {
    let (a, b) = (u64::from(m1), u64::from(m2));
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

fn sl3() -> AlgebraId {
    "sl(3,C)".parse().expect("sl(3,C)")
}

const STANDARD_WEIGHTS: [Sl3Weight; 3] = [(1, 0), (-1, 1), (0, -1)];

fn to_weight(w: Sl3Weight) -> Weight {
    Weight::sl3(w.0, w.1)
}

/// Generators are the basis matrices; `e1, e2, e3` have weights
/// `(1,0), (-1,1), (0,-1)`.
pub fn sl3_standard_rep() -> Representation<BigRational> {
    let b = sl3_basis();
    Representation::new(sl3(), b.labels, b.elements, Some(STANDARD_WEIGHTS.map(to_weight).to_vec()))
        .expect("standard representation")
}

/// `pi(Z) = -Z^T`, with weights `(-1,0), (1,-1), (0,1)`.
pub fn sl3_antifundamental_rep() -> Representation<BigRational> {
    let b = sl3_basis();
    let gens = b.elements.iter().map(|z| -&z.transpose()).collect();
    let weights = STANDARD_WEIGHTS.map(|(a, c)| to_weight((-a, -c))).to_vec();
    Representation::new(sl3(), b.labels, gens, Some(weights)).expect("dual standard representation")
}

type Sparse = HashMap<usize, BigRational>;

/// `V^(x m1) (x) Vbar^(x m2)` without forming its matrices. Basis vector
/// `(i_1, .., i_n)` has index `sum_s i_s 3^(n-1-s)`.
struct TensorPower {
    slots: usize,
    m1: usize,
    /// `factors[f][g]` lists `(row, col, value)` of generator `g` on factor
    /// kind `f` (0 standard, 1 dual).
    factors: [Vec<Vec<(usize, usize, BigRational)>>; 2],
    weights: [[Sl3Weight; 3]; 2],
}

impl TensorPower {
    fn new(m1: u32, m2: u32) -> Self {
        let entries = |rep: &Representation<BigRational>| {
            rep.generators()
                .iter()
                .map(|g| {
                    let mut out = Vec::new();
                    for i in 0..3 {
                        for j in 0..3 {
                            if !g[(i, j)].is_zero() {
                                out.push((i, j, g[(i, j)].clone()));
                            }
                        }
                    }
                    out
                })
                .collect()
        };
        let weights = |rep: &Representation<BigRational>| {
            let w = rep.weights().expect("annotated");
            [0, 1, 2].map(|i| (w[i].0[0], w[i].0[1]))
        };
        let (s, a) = (sl3_standard_rep(), sl3_antifundamental_rep());
        TensorPower {
            slots: (m1 + m2) as usize,
            m1: m1 as usize,
            factors: [entries(&s), entries(&a)],
            weights: [weights(&s), weights(&a)],
        }
    }

    fn kind(&self, slot: usize) -> usize {
        usize::from(slot >= self.m1)
    }

    fn place(&self, slot: usize) -> usize {
        3usize.pow((self.slots - 1 - slot) as u32)
    }

    fn digit(&self, index: usize, slot: usize) -> usize {
        index / self.place(slot) % 3
    }

    fn weight(&self, index: usize) -> Sl3Weight {
        (0..self.slots).fold((0, 0), |acc, s| {
            let w = self.weights[self.kind(s)][self.digit(index, s)];
            (acc.0 + w.0, acc.1 + w.1)
        })
    }

    fn apply(&self, g: usize, v: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&index, c) in v {
            for s in 0..self.slots {
                let d = self.digit(index, s);
                for (row, col, val) in &self.factors[self.kind(s)][g] {
                    if *col == d {
                        let target = index - d * self.place(s) + row * self.place(s);
                        let e = out.entry(target).or_insert_with(BigRational::zero);
                        *e += c * val;
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `e1 (x) .. (x) e1 (x) e3 (x) .. (x) e3`.
    fn cyclic_vector(&self) -> Sparse {
        let index = (self.m1..self.slots).map(|s| 2 * self.place(s)).sum();
        Sparse::from([(index, BigRational::from_integer(1.into()))])
    }
}

/// Sparse reduced row echelon form: every row has a pivot with value one,
/// and no other row is non-zero there.
#[derive(Default)]
struct Span {
    rows: Vec<(usize, Sparse)>,
}

impl Span {
    fn reduce(&self, v: &Sparse) -> Sparse {
        let mut w = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = w.get(p).cloned() {
                for (k, x) in row {
                    let e = w.entry(*k).or_insert_with(BigRational::zero);
                    *e -= &c * x;
                }
                w.retain(|_, x| !x.is_zero());
            }
        }
        w
    }

    fn insert(&mut self, v: &Sparse) -> bool {
        let w = self.reduce(v);
        let Some(&p) = w.keys().min() else {
            return false;
        };
        let lead = w[&p].clone();
        let w: Sparse = w.into_iter().map(|(k, x)| (k, x / &lead)).collect();
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                for (k, x) in &w {
                    let e = row.entry(*k).or_insert_with(BigRational::zero);
                    *e -= &c * x;
                }
                row.retain(|_, x| !x.is_zero());
            }
        }
        self.rows.push((p, w));
        true
    }
}

/// The irreducible representation with highest weight `(m1, m2)`, with
/// `m1 + m2 <= DEFAULT_CAP`.
pub fn sl3_highest_weight_irrep(m1: u32, m2: u32) -> Result<Representation<BigRational>> {
    sl3_highest_weight_irrep_capped(m1, m2, DEFAULT_CAP)
}

/// Builds the cyclic subspace generated by `e1^(x m1) (x) e3^(x m2)` inside
/// `V^(x m1) (x) Vbar^(x m2)` and restricts the generators to it, exactly.
/// Basis vectors are weight vectors, highest weight first; the weights are
/// attached to the result.
pub fn sl3_highest_weight_irrep_capped(m1: u32, m2: u32, cap: u32) -> Result<Representation<BigRational>> {
    if u64::from(m1) + u64::from(m2) > u64::from(cap) {
        return Err(Error::Resource(format!(
            "m1 + m2 = {} exceeds the cap of {cap}",
            u64::from(m1) + u64::from(m2)
        )));
    }
    let tp = TensorPower::new(m1, m2);
    let labels = sl3_basis().labels;
    let ngens = labels.len();

    let mut span = Span::default();
    let start = tp.cyclic_vector();
    span.insert(&start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for g in 0..ngens {
            let w = tp.apply(g, &u);
            if span.insert(&w) {
                queue.push_back(w);
            }
        }
    }

    let top = (m1 as i64, m2 as i64);
    let height = |w: Sl3Weight| {
        let (a, b) = simple_root_coords((top.0 - w.0, top.1 - w.1));
        a + b
    };
    let mut rows: Vec<(Sl3Weight, usize, Sparse)> = span
        .rows
        .into_iter()
        .map(|(p, r)| {
            let w = tp.weight(p);
            if r.keys().any(|&k| tp.weight(k) != w) {
                return Err(Error::Internal("closure vector is not a weight vector".into()));
            }
            Ok((w, p, r))
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|x, y| height(x.0).cmp(&height(y.0)).then(y.0.cmp(&x.0)).then(x.1.cmp(&y.1)));

    let d = rows.len();
    let mut gens = Vec::with_capacity(ngens);
    for g in 0..ngens {
        let mut m = RationalMatrix::zeros(d, d);
        for (j, (_, _, r)) in rows.iter().enumerate() {
            let image = tp.apply(g, r);
            let mut residual = image.clone();
            for (i, (_, p, row)) in rows.iter().enumerate() {
                if let Some(c) = image.get(p) {
                    m[(i, j)] = c.clone();
                    for (k, x) in row {
                        let e = residual.entry(*k).or_insert_with(BigRational::zero);
                        *e -= c * x;
                    }
                }
            }
            if residual.values().any(|x| !x.is_zero()) {
                return Err(Error::Internal("closure is not invariant".into()));
            }
        }
        gens.push(m);
    }
    let weights = rows.iter().map(|(w, _, _)| to_weight(*w)).collect();
    Representation::new(sl3(), labels, gens, Some(weights))
}

fn sl3_weights(rep: &Representation<BigRational>) -> Result<Vec<Sl3Weight>> {
    let w = rep
        .weights()
        .ok_or_else(|| Error::Domain("representation carries no weights".into()))?;
    w.iter()
        .map(|x| match x.0[..] {
            [a, b] => Ok((a, b)),
            _ => domain_err(format!("{x} is not an sl(3,C) weight")),
        })
        .collect()
}

/// Weight multiplicities, keyed by weight.
pub fn weight_multiplicities(rep: &Representation<BigRational>) -> Result<BTreeMap<Sl3Weight, usize>> {
    let mut out = BTreeMap::new();
    for w in sl3_weights(rep)? {
        *out.entry(w).or_insert(0) += 1;
    }
    Ok(out)
}

pub const CSV_HEADER: &str = "m1,m2,multiplicity";

/// `m1,m2,multiplicity` rows, descending in `(m1, m2)`, newline-terminated.
pub fn weights_to_csv(mult: &BTreeMap<Sl3Weight, usize>) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for ((a, b), n) in mult.iter().rev() {
        writeln!(out, "{a},{b},{n}").expect("write to String");
    }
    out
}

/// Reads a weight table. Each weight may appear once and multiplicities
/// must be positive.
pub fn weights_from_csv(text: &str) -> Result<BTreeMap<Sl3Weight, usize>> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some(CSV_HEADER) {
        return Err(Error::Parse(format!("expected header \"{CSV_HEADER}\"")));
    }
    let mut out = BTreeMap::new();
    for (n, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: expected m1,m2,multiplicity", n + 2));
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let [a, b, c] = cells[..] else {
            return Err(bad());
        };
        let w = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        let k: usize = c.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(Error::Parse(format!("line {}: zero multiplicity", n + 2)));
        }
        if out.insert(w, k).is_some() {
            return Err(Error::Parse(format!("line {}: repeated weight ({},{})", n + 2, w.0, w.1)));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylElement {
    pub index: usize,
    pub matrix: RationalMatrix,
}

/// `w0..w5`: the permutation matrices of `C^3`, negated where needed for
/// determinant one.
pub fn weyl_elements() -> Vec<WeylElement> {
    let m = |sign: i64, rows: [[i64; 3]; 3]| {
        let r: Vec<Vec<i64>> = rows.iter().map(|row| row.iter().map(|x| sign * x).collect()).collect();
        let refs: Vec<&[i64]> = r.iter().map(Vec::as_slice).collect();
        RationalMatrix::from_i64_rows(&refs)
    };
    let mats = [
        m(1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        m(1, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        m(1, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        m(-1, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        m(-1, [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
        m(-1, [[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
    ];
    mats.into_iter().enumerate().map(|(index, matrix)| WeylElement { index, matrix }).collect()
}

/// `w . mu`: the weight that a `mu`-weight vector has for `pi(w^-1 . w)`.
pub fn weyl_act(w: &WeylElement, mu: Sl3Weight) -> Sl3Weight {
    let (a, b) = mu;
    match w.index {
        0 => (a, b),
        1 => (-a - b, a),
        2 => (b, -a - b),
        3 => (-a, a + b),
        4 => (-b, -a),
        5 => (a + b, -b),
        _ => unreachable!("Weyl group has six elements"),
    }
}

/// True iff every weight has the same multiplicity as each of its Weyl
/// images.
pub fn weyl_invariance_check(rep: &Representation<BigRational>) -> Result<bool> {
    let mult = weight_multiplicities(rep)?;
    let ws = weyl_elements();
    Ok(mult
        .iter()
        .all(|(&mu, &k)| ws.iter().all(|w| mult.get(&weyl_act(w, mu)) == Some(&k))))
}
