//! Matrix interchange format.
//!
//! Floating matrices: `{"rows": r, "cols": c, "re": [..], "im": [..]}` with
//! row-major entries; `"im"` is omitted on output when every imaginary part
//! is zero and optional on input.
//!
//! Rational matrices: `{"rows": r, "cols": c, "num": [..], "den": [..]}`.
//! Numerators and denominators are JSON integers; values outside the 64-bit
//! range are written as decimal strings, and both spellings are accepted.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use super::matrix::{ComplexMatrix, GaussianMatrix, Matrix, RationalMatrix};
use super::scalar::{gaussian, rational_from_f64};
use crate::error::{Error, Result};

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Parse("matrix must be a JSON object".into()))
}

fn dims(obj: &Map<String, Value>) -> Result<(usize, usize)> {
    let get = |k: &str| -> Result<usize> {
        let n = obj
            .get(k)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse(format!("missing or invalid \"{k}\"")))?;
        if n == 0 {
            return parse_err(format!("\"{k}\" must be positive"));
        }
        usize::try_from(n).map_err(|_| Error::Parse(format!("\"{k}\" too large")))
    };
    let (r, c) = (get("rows")?, get("cols")?);
    // Anything this large cannot have come with a matching entry array.
    if r.checked_mul(c).map_or(true, |n| n > (1 << 28)) {
        return parse_err("matrix dimensions too large");
    }
    Ok((r, c))
}

fn float_array(obj: &Map<String, Value>, key: &str, len: usize) -> Result<Option<Vec<f64>>> {
    let Some(v) = obj.get(key) else {
        return Ok(None);
    };
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?;
    if arr.len() != len {
        return parse_err(format!("\"{key}\" has {} entries, expected {len}", arr.len()));
    }
    arr.iter()
        .map(|x| {
            x.as_f64()
                .filter(|f| f.is_finite())
                .ok_or_else(|| Error::Parse(format!("\"{key}\" entries must be finite numbers")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn int_array(obj: &Map<String, Value>, key: &str, len: usize) -> Result<Vec<BigInt>> {
    let arr = obj
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing or invalid \"{key}\"")))?;
    if arr.len() != len {
        return parse_err(format!("\"{key}\" has {} entries, expected {len}", arr.len()));
    }
    arr.iter().map(parse_int).collect()
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                parse_err(format!("{n} is not an integer"))
            }
        }
        Value::String(s) => {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || s.len() > 4096 {
                return parse_err(format!("\"{s}\" is not an integer"));
            }
            s.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))
        }
        _ => parse_err("integer entries must be numbers or strings"),
    }
}

fn int_to_json(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(v) => json!(v),
        None => Value::String(i.to_string()),
    }
}

pub fn complex_to_json(m: &ComplexMatrix) -> Value {
    let re: Vec<f64> = m.iter().map(|z| z.re).collect();
    let mut obj = Map::new();
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    obj.insert("re".into(), json!(re));
    if m.iter().any(|z| z.im != 0.0) {
        let im: Vec<f64> = m.iter().map(|z| z.im).collect();
        obj.insert("im".into(), json!(im));
    }
    Value::Object(obj)
}

pub fn complex_from_json(v: &Value) -> Result<ComplexMatrix> {
    let obj = object(v)?;
    let (r, c) = dims(obj)?;
    let re = float_array(obj, "re", r * c)?.ok_or_else(|| Error::Parse("missing \"re\"".into()))?;
    let im = float_array(obj, "im", r * c)?.unwrap_or_else(|| vec![0.0; r * c]);
    Matrix::new(r, c, re.into_iter().zip(im).map(|(a, b)| Complex64::new(a, b)).collect())
}

pub fn complex_from_str(s: &str) -> Result<ComplexMatrix> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    complex_from_json(&v)
}

pub fn rational_to_json(m: &RationalMatrix) -> Value {
    let num: Vec<Value> = m.iter().map(|q| int_to_json(q.numer())).collect();
    let den: Vec<Value> = m.iter().map(|q| int_to_json(q.denom())).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "num": num, "den": den })
}

pub fn rational_from_json(v: &Value) -> Result<RationalMatrix> {
    let obj = object(v)?;
    let (r, c) = dims(obj)?;
    let num = int_array(obj, "num", r * c)?;
    let den = int_array(obj, "den", r * c)?;
    if den.iter().any(Zero::is_zero) {
        return parse_err("zero denominator");
    }
    Matrix::new(
        r,
        c,
        num.into_iter().zip(den).map(|(n, d)| BigRational::new(n, d)).collect(),
    )
}

pub fn rational_from_str(s: &str) -> Result<RationalMatrix> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    rational_from_json(&v)
}

/// Reads either format into exact Gaussian rationals. Doubles convert to
/// their exact binary value.
pub fn exact_from_json(v: &Value) -> Result<GaussianMatrix> {
    let obj = object(v)?;
    if obj.contains_key("num") {
        return Ok(rational_from_json(v)?.to_gaussian());
    }
    let m = complex_from_json(v)?;
    let conv = |x: f64| rational_from_f64(x).ok_or_else(|| Error::Parse("non-finite entry".into()));
    let data = m
        .iter()
        .map(|z| Ok(gaussian(conv(z.re)?, conv(z.im)?)))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(m.rows(), m.cols(), data)
}

/// Reads either format into an exact rational matrix; fails if any
/// imaginary part is non-zero.
pub fn exact_rational_from_json(v: &Value) -> Result<RationalMatrix> {
    exact_from_json(v)?
        .to_rational()
        .ok_or_else(|| Error::Parse("expected a real matrix".into()))
}
