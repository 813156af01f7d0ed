use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("exponent {0} is not a multiple of 1/2")]
    BadExponent(String),

    #[error("Δ(1)≠1: Δ(1) = {0}")]
    NotNormalized(i64),

    #[error("Δ is not symmetric under t ↔ t⁻¹")]
    Asymmetric,

    #[error("Δ has half-integer exponents; a knot polynomial must have integer exponents")]
    HalfIntegerKnot,

    #[error("not an L-space staircase: {0}")]
    NotLSpace(String),

    #[error("inexact division: {0}")]
    NonDivisible(String),

    #[error("Alexander vector {0:?} (doubled) is off the lattice Z^n + c·1")]
    OffLattice(Vec<i64>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("window exceeds index range: {0}")]
    WindowOutOfRange(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("i/o: {1}")]
    Io(std::io::ErrorKind, String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.kind(), e.to_string())
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
