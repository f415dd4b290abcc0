use thiserror::Error;

use crate::norms::NormKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("membership value {0} is outside [0,1]")]
    MembershipOutOfRange(f64),

    #[error("{0} is not a t-norm")]
    NotATNorm(NormKind),

    #[error("{0} is not a t-conorm")]
    NotATConorm(NormKind),

    #[error("unknown norm kind '{0}'")]
    UnknownNorm(String),

    #[error("duplicate identifier '{0}'")]
    DuplicateIdentifier(String),

    #[error("unknown parameter '{0}'")]
    UnknownParameter(String),

    #[error("unknown object '{0}'")]
    UnknownObject(String),

    #[error("parameter '{0}' has grade 0 but a nonempty approximate set")]
    ZeroGradeApprox(String),

    #[error("operands are over different universes")]
    UniverseMismatch,

    #[error("operands are over different parameter spaces")]
    SpaceMismatch,

    #[error("right set of the first relation differs from left set of the second")]
    MiddleMismatch,

    #[error("relation is not over a single FP-soft set")]
    NotOnSingleSet,

    #[error("relation is not an equivalence relation")]
    NotEquivalence,

    #[error("relation power requires n >= 1")]
    ZeroPower,

    #[error("fuzzy set has empty support")]
    EmptySupport,

    #[error("relation entry ({0},{1}) exceeds the product bound")]
    EntryExceedsProduct(String, String),

    #[error("duplicate relation entry for pair ({0},{1})")]
    DuplicatePair(String, String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unresolved {kind} reference '{name}'")]
    Unresolved { kind: &'static str, name: String },

    #[error("grade '{text}' for parameter '{parameter}' is not a decimal in [0,1]")]
    InvalidGrade { parameter: String, text: String },

    #[error("cannot read '{path}': {message}")]
    Io { path: String, message: String },
}
