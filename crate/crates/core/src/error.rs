use thiserror::Error;

use crate::scenario::ValidationReport;

/// Errors surfaced by the library. Each variant carries a stable machine
/// code (see [`Error::code`]) so front ends can map them to exit statuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("distribution failed validation: {0}")]
    Validation(ValidationReport),

    #[error("instrument marginal p(x={0}) is zero")]
    ZeroInstrumentMarginal(usize),

    #[error("division by zero: {0} vanishes on the sample")]
    DivisionByZero(&'static str),

    #[error("inequality `{id}` requires x_card = {expected}, got {got}")]
    UnsupportedCardinality {
        id: String,
        expected: usize,
        got: usize,
    },

    #[error("unknown inequality id `{0}`")]
    UnknownInequality(String),

    #[error("interventional distribution required by `{0}` but not supplied")]
    MissingInterventional(String),

    #[error("violation alpha = {alpha} outside the feasible range [0, {alpha_max}]")]
    AlphaOutOfRange { alpha: String, alpha_max: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("closed form only covers a uniformly distributed instrument")]
    UnsupportedByClosedForm,

    #[error("invalid quantum setup: {0}")]
    InvalidQuantumSetup(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("numerical failure in solver: {0}")]
    Numerical(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Validation(_) => "validation_failed",
            Error::ZeroInstrumentMarginal(_) => "zero_marginal",
            Error::DivisionByZero(_) => "division_by_zero",
            Error::UnsupportedCardinality { .. } => "unsupported_cardinality",
            Error::UnknownInequality(_) => "unknown_inequality",
            Error::MissingInterventional(_) => "missing_interventional",
            Error::AlphaOutOfRange { .. } => "alpha_out_of_range",
            Error::OutOfRange(_) => "out_of_range",
            Error::UnsupportedByClosedForm => "unsupported_by_closed_form",
            Error::InvalidQuantumSetup(_) => "invalid_quantum_setup",
            Error::Infeasible => "infeasible",
            Error::Unbounded => "unbounded",
            Error::Numerical(_) => "numerical",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
