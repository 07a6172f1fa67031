//! Error and result types shared across the crate.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Alias for `std::result::Result` with [`Error`] as the error type.
pub type Result<T> = std::result::Result<T, Error>;

/// Top-level error for parsing, validation, and numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation's documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A data file failed to parse or validate.
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// Items whose summed score is zero and for which no override was
    /// supplied. Callers that need binary truth cannot proceed past these.
    #[error("query {query_id:?}: rank(s) {ranks:?} have score 0 and no override")]
    UnresolvedTies { query_id: String, ranks: Vec<u32> },

    /// A statistic is undefined for the given data (zero variance,
    /// empty denominator, degenerate agreement).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// An I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

/// A parse or validation failure tied to a file location.
///
/// `line` is the 1-based line number of the offending record when one
/// exists; whole-file validation failures (e.g. a missing cell detected
/// after grouping) carry no line.
#[derive(Debug)]
pub struct ParseError {
    pub path: PathBuf,
    pub line: Option<u64>,
    pub kind: ParseKind,
}

impl ParseError {
    pub fn new(path: impl Into<PathBuf>, line: Option<u64>, kind: ParseKind) -> Self {
        ParseError {
            path: path.into(),
            line,
            kind,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{line}: {}", self.path.display(), self.kind),
            None => write!(f, "{}: {}", self.path.display(), self.kind),
        }
    }
}

impl std::error::Error for ParseError {}

/// The distinct ways a record can be malformed.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseKind {
    #[error("unknown label {0:?} (expected one of R, P, I, N)")]
    UnknownLabel(String),

    #[error("unknown topic {0:?}")]
    UnknownTopic(String),

    #[error("unknown query category {0:?} (expected Ambiguous, Entity, or General)")]
    UnknownCategory(String),

    #[error("unknown verdict {0:?} (expected relevant or irrelevant)")]
    UnknownVerdict(String),

    #[error("duplicate judgment for query {query_id:?} rank {rank} assessor {assessor_id:?}")]
    DuplicateCell {
        query_id: String,
        rank: u32,
        assessor_id: String,
    },

    #[error("missing judgment for query {query_id:?} rank {rank} assessor {assessor_id:?}")]
    MissingCell {
        query_id: String,
        rank: u32,
        assessor_id: String,
    },

    #[error("duplicate rank {rank} for query {query_id:?}")]
    DuplicateRank { query_id: String, rank: u32 },

    #[error("query {query_id:?}: expected rank {expected} next, found {found}")]
    RankGap {
        query_id: String,
        expected: u32,
        found: u32,
    },

    #[error("missing column {0:?} in header")]
    MissingColumn(String),

    #[error("bad {field} value {got:?}: expected {expected}")]
    BadField {
        field: &'static str,
        expected: &'static str,
        got: String,
    },

    #[error("malformed record: {0}")]
    Malformed(String),

    #[error("file contains no data rows")]
    Empty,
}
