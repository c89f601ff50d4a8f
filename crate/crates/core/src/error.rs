use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degree matrix has a zero diagonal entry at index {index}")]
    SingularDegree { index: usize },

    #[error("degree matrix is not diagonal (entry {row},{col} is nonzero)")]
    NotDiagonal { row: usize, col: usize },

    #[error("{line} {index} is all zero (isolated vertex)")]
    IsolatedVertex { line: Line, index: usize },

    #[error("matrix {name}: {source}")]
    Operand {
        name: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("entry {value} at {row},{col} is not 0 or 1")]
    NotBinary { row: usize, col: usize, value: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("theorem path and exhaustive search disagree on sample {sample}")]
    Inconsistent { sample: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

impl Error {
    pub(crate) fn in_operand(self, name: &'static str) -> Error {
        Error::Operand {
            name,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
