use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("color word has length {found}, row has {expected} points")]
    ColorLength { expected: usize, found: usize },

    #[error("cannot mix colored and uncolored partitions")]
    ColorMode,

    #[error("operation needs a colored partition")]
    Uncolored,

    #[error("arity mismatch: expected {expected} points, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("colors do not match at the composition interface")]
    ColorMismatch,

    #[error("cannot rotate from an empty row")]
    EmptyRow,

    #[error("partition is not square (k = {upper}, l = {lower})")]
    NotSquare { upper: usize, lower: usize },

    #[error("partition has {0} blocks, at most 52 are supported")]
    TooManyBlocks(usize),

    #[error("partition {0} is not projective")]
    NotProjective(String),

    #[error("partition {0} is not a building partition")]
    NotBuilding(String),

    #[error("partition {0} has a block of odd size")]
    OddBlock(String),

    #[error("partition {0} is not a pair partition")]
    NotPairPartition(String),

    #[error("partition {0} is not in the category")]
    NotInCategory(String),

    #[error("membership of {0} is unknown beyond the closure bound")]
    UnknownMembership(String),

    #[error("bounds exceeded: {what} is {requested}, limit {limit}")]
    Bounds { what: &'static str, requested: usize, limit: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
