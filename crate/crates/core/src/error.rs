use crate::wreath::GroupParams;

/// Everything that can go wrong in the library.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("parameter mismatch: {0} vs {1}")]
    ParamMismatch(GroupParams, GroupParams),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not an element of {params}: {reason}")]
    NotMember { params: GroupParams, reason: String },
    #[error("not implemented for intermediate p: {0} is not well generated")]
    UnsupportedP(GroupParams),
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("braid index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("graph is not a unicycle")]
    NotUnicycle,
    #[error("element is not quasi-Coxeter")]
    NotQuasiCoxeter,
    #[error("element is not parabolic quasi-Coxeter")]
    NotParabolicQuasiCoxeter,
    #[error("wrong cardinality: expected {expected}, got {got}")]
    Cardinality { expected: usize, got: usize },
    #[error("reflection {reflection} does not belong to type {ty}")]
    TypeMismatch { reflection: String, ty: String },
    #[error("malformed composition: {0}")]
    MalformedComposition(String),
    #[error("too many nonzero-color cycles for exact search: {0} > 16")]
    TooManyCycles(usize),
    #[error("unrecognized reflection subgroup: {0}")]
    Unrecognized(String),
}

pub type Result<T> = std::result::Result<T, Error>;
