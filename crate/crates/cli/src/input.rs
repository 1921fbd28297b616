use std::io::Read;

use liekit::matcore::json::{complex_from_json, exact_rational_from_json};
use liekit::{ComplexMatrix, Error, RationalMatrix, Scalar};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn to_json(&self) -> Value {
        match self {
            CliError::Lib(e) => json!({ "error": e.kind(), "detail": e.detail() }),
            CliError::Io(d) => json!({ "error": "io", "detail": d }),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Inline text, `@path`, or `-` for stdin.
pub fn read_arg(arg: &str) -> CliResult<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn read_json(arg: &str) -> CliResult<Value> {
    let text = read_arg(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()).into())
}

/// A matrix argument: exact when given in the rational format.
pub enum Mat {
    Exact(RationalMatrix),
    Float(ComplexMatrix),
}

impl Mat {
    pub fn parse(arg: &str) -> CliResult<Self> {
        let v = read_json(arg)?;
        if v.get("num").is_some() {
            Ok(Mat::Exact(exact_rational_from_json(&v)?))
        } else {
            Ok(Mat::Float(complex_from_json(&v)?))
        }
    }

    pub fn complex(self) -> ComplexMatrix {
        match self {
            Mat::Exact(m) => m.map(|x| x.to_complex64()),
            Mat::Float(m) => m,
        }
    }
}

pub fn complex(arg: &str) -> CliResult<ComplexMatrix> {
    Ok(Mat::parse(arg)?.complex())
}

pub fn rational(arg: &str) -> CliResult<RationalMatrix> {
    Ok(exact_rational_from_json(&read_json(arg)?)?)
}
