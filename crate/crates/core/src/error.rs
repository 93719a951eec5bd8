use thiserror::Error;

use crate::linalg::Cx;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("numeric range exceeded: {0}")]
    NumericRange(String),
    #[error("matrix determinant {det} is not 1")]
    Determinant { det: Cx },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("search found no {0}")]
    EmptySearch(&'static str),
    #[error("({p},{q}) is not a coprime pair")]
    InvalidPair { p: u64, q: u64 },
    #[error("c_n vanishes identically for ({p},{q})")]
    DegenerateLink { p: u64, q: u64 },
    #[error("input exceeds size limit: {0}")]
    SizeLimit(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NumericFailure { iterations: usize, partial: Vec<Cx> },
    #[error("no geometric root: {0}")]
    NoGeometricRoot(String),
    #[error("unsupported trace branch: {0}")]
    UnsupportedBranch(&'static str),
    #[error("division by a value indistinguishable from zero")]
    Division,
    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}
