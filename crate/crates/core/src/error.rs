use thiserror::Error;

use crate::coxeter::Label;

/// Errors from reading a Coxeter system document. Line numbers are 1-based;
/// line 0 means the error came from a programmatic constructor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: asymmetric matrix: m({s},{t}) given as both {first} and {second}")]
    Asymmetric { line: usize, s: String, t: String, first: Label, second: Label },
    #[error("line {line}: off-diagonal label {label} is below 2")]
    LabelTooSmall { line: usize, label: u32 },
    #[error("line {line}: unknown generator '{name}'")]
    UnknownGenerator { line: usize, name: String },
    #[error("line {line}: duplicate generator '{name}'")]
    DuplicateGenerator { line: usize, name: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no 'generators:' line")]
    NoGenerators,
    #[error("{0} generators; at most 64 are supported")]
    TooManyGenerators(usize),
}

/// Failures that are not mathematical answers: budgets exhausted or
/// inputs outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("word too long for exact reduction: length {len} exceeds bound {bound}")]
    WordTooLong { len: usize, bound: usize },
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("{0} is not spherical")]
    NotSpherical(String),
    #[error("{set} is not halvable along {s}")]
    NotHalvable { set: String, s: String },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
