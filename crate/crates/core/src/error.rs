use thiserror::Error;

/// Errors raised by operations on a model and its subsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("subset over a carrier of size {subset} used with a model of order {model}")]
    CarrierMismatch { subset: usize, model: usize },
    #[error("operation requires a non-empty subset")]
    EmptySubset,
    #[error("subset is not a two-sided ideal")]
    NotAnIdeal,
    #[error(
        "carrier of size {order} exceeds the exhaustive sweep cap of {cap}; \
         use generated ideals (--generated-from) instead"
    )]
    SweepCapExceeded { order: usize, cap: usize },
    #[error("canonicalization limited to order <= {max_order} and {max_gammas} operators, got {order} and {gammas}")]
    CanonGuard {
        order: usize,
        gammas: usize,
        max_order: usize,
        max_gammas: usize,
    },
    #[error("invalid model: {0}")]
    InvalidModel(String),
}

/// A model file that failed to parse, with the 1-based line it failed on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `gag v1`, found `{0}`")]
    BadHeader(String),
    #[error("expected `{expected}`, found `{found}`")]
    Expected { expected: String, found: String },
    #[error("duplicate {what} name `{name}`")]
    DuplicateName { what: &'static str, name: String },
    #[error("entry `{entry}` out of range: not one of the {order} element names")]
    EntryOutOfRange { entry: String, order: usize },
    #[error("table row has {found} entries, expected {expected}")]
    RowLength { found: usize, expected: usize },
    #[error("table `{table}` has {found} rows, expected {expected}")]
    MissingRows {
        table: String,
        found: usize,
        expected: usize,
    },
    #[error("unknown operator `{0}`")]
    UnknownGamma(String),
    #[error("table for operator `{0}` given twice")]
    DuplicateTable(String),
    #[error("no table given for operator `{0}`")]
    MissingTable(String),
    #[error("unexpected content `{0}`")]
    Unexpected(String),
    #[error("{0}")]
    Invalid(String),
    #[error("malformed structured document: {0}")]
    Json(String),
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}
