use crate::shape::Cell;

/// Errors shared by every module of the crate.
///
/// Domain violations (a mark off a corner, a second arc into the same
/// vertex, ...) get their own variant so callers and tests can match on
/// the exact failure instead of scraping message strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("shape {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("mark {0} is not a corner of the shape")]
    MarkNotCorner(Cell),

    #[error("cell {0} is not a corner of the shape")]
    NotACorner(Cell),

    #[error("entries do not fill the shape: {0}")]
    ShapeMismatch(String),

    #[error("entries are not strictly increasing: {place} holds {a} and {b}")]
    NotIncreasing { place: String, a: usize, b: usize },

    #[error("entries and letters must be positive")]
    NonPositive,

    #[error("letter {letter} occurs but is not maximal (maximum is {max})")]
    NotMaximalLetter { letter: usize, max: usize },

    #[error("reverse insertion stuck: row {row} has no entry below {value}")]
    ReverseStuck { row: usize, value: usize },

    #[error("invalid arc: {0}")]
    InvalidArc(String),

    #[error("vertex {vertex} is the right endpoint of more than one arc")]
    InDegree { vertex: usize },

    #[error("blocks are not nearly disjoint: {a} and {b} share {t}")]
    NotNearlyDisjoint { a: String, b: String, t: usize },

    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),

    #[error("invalid vacillating sequence at index {index}: {reason}")]
    InvalidVht { index: usize, reason: String },

    #[error("{what} is limited to {max}, got {got}")]
    SizeCap {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
