use thiserror::Error;

use crate::exactla::FieldSpec;
use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: String, found: String },

    #[error("matrix shape mismatch: expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("invalid scalar {text:?} for field {field}")]
    InvalidScalar { text: String, field: FieldSpec },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("structural inconsistency: {0}")]
    StructuralInconsistency(String),

    #[error("syntax error at {line}:{column}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("unbound generator {0:?}")]
    UnboundGenerator(String),

    #[error("unknown object {0:?}")]
    UnknownObject(String),

    #[error("wire mismatch at step {step}: expected [{expected}], found [{found}]")]
    WireMismatch {
        step: usize,
        expected: String,
        found: String,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("hypotheses failed: {}", .0.failed_ids().join(", "))]
    HypothesisFailure(Box<CheckReport>),
}
