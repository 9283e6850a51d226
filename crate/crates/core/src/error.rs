use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("word {word:?} is not a reduced word for the longest element")]
    NotReduced { word: Vec<usize> },

    #[error("word {word:?} is not adapted to K = {k:?}")]
    NotAdapted { word: Vec<usize>, k: Vec<usize> },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not upper unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("polynomials live over different variable sets")]
    VariableSetMismatch,

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("inexact division; remainder witness: {remainder}")]
    InexactDivision { remainder: String },

    #[error("polynomial exceeds size cap: {0}")]
    TooLarge(String),

    #[error("vertex {0} is frozen")]
    FrozenVertex(i32),

    #[error("vertex {0} is not in the seed")]
    UnknownVertex(i32),

    #[error("a quotient denominator vanished at this point{}; retry in symbolic mode", at_vertex(.vertex))]
    SingularEvaluation { vertex: Option<i32> },

    #[error("parse error: {0}")]
    Parse(String),
}

fn at_vertex(v: &Option<i32>) -> String {
    match v {
        Some(v) => format!(" (vertex {v})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
