//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus failed the primality check.
    NotPrime(u64),
    /// The requested modulus is outside the supported range [2, 2^31).
    ModulusOutOfRange(u64),
    /// Attempted to invert (or divide by) zero.
    DivisionByZero,
    /// A vector or matrix dimension did not match its context.
    DimensionMismatch { expected: usize, got: usize },
    /// The zero polynomial has no leading term.
    ZeroPolynomial,
    /// A point set or variety must contain at least one point.
    EmptyPointSet,
    /// Two input points coincide (row index of the second occurrence).
    DuplicatePoint(usize),
    /// A variable subset must be nonempty.
    EmptyVariableSet,
    /// The leading term mentions a variable that has a basis relation
    /// (0-based index), violating the rewriter precondition.
    InessentialLeadingTerm(usize),
    /// A basis element was expected to be monic.
    NonMonic,
    /// More distinct points requested than the space holds.
    TooManyPoints { m: usize, capacity: u128 },
    /// Exponent arithmetic exceeded the machine-integer range.
    ExponentOverflow,
    /// A term-order specification was rejected (reason attached).
    InvalidOrder(String),
    /// Input text could not be parsed (diagnostic attached).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ModulusOutOfRange(p) => {
                write!(f, "modulus {p} outside supported range [2, 2^31)")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
            Error::EmptyPointSet => write!(f, "point set is empty"),
            Error::DuplicatePoint(i) => write!(f, "duplicate point at row {}", i + 1),
            Error::EmptyVariableSet => write!(f, "variable subset is empty"),
            Error::InessentialLeadingTerm(i) => {
                write!(f, "leading term contains inessential variable x{}", i + 1)
            }
            Error::NonMonic => write!(f, "basis element is not monic"),
            Error::TooManyPoints { m, capacity } => {
                write!(f, "cannot place {m} distinct points in a space of size {capacity}")
            }
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::InvalidOrder(msg) => write!(f, "invalid term order: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
