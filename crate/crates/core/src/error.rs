use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure mode of the library. The CLI reports [`Error::kind`] as the
/// machine-readable error tag.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("closure error: {0}")]
    Closure(String),
    #[error("inconsistent samples: {0}")]
    InconsistentSamples(String),
    #[error("decomposition error: {0}")]
    Decomposition(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Shape(_) => "shape",
            Error::Domain(_) => "domain",
            Error::OutOfDomain(_) => "out_of_domain",
            Error::Convergence(_) => "convergence",
            Error::Closure(_) => "closure",
            Error::InconsistentSamples(_) => "inconsistent_samples",
            Error::Decomposition(_) => "decomposition",
            Error::Resource(_) => "resource",
            Error::Internal(_) => "internal",
            Error::Parse(_) => "parse",
            Error::NonFinite(_) => "non_finite",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Error::Shape(s)
            | Error::Domain(s)
            | Error::OutOfDomain(s)
            | Error::Convergence(s)
            | Error::Closure(s)
            | Error::InconsistentSamples(s)
            | Error::Decomposition(s)
            | Error::Resource(s)
            | Error::Internal(s)
            | Error::Parse(s)
            | Error::NonFinite(s) => s.clone(),
        }
    }
}

pub(crate) fn shape_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Shape(msg.into()))
}

pub(crate) fn domain_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
