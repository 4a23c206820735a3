use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {n} is outside the supported range {min}..={max}")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
    #[error("mismatched group degrees: {left} vs {right}")]
    MismatchedDegree { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {partition} does not partition {n}")]
    PartitionMismatch { partition: String, n: usize },
    #[error("data set is empty")]
    EmptyData,
    #[error("tableau is empty")]
    EmptyTableau,
    #[error("not a magic square: {0}")]
    NotMagic(String),
    #[error("line sum must be at least 1")]
    ZeroLineSum,
    #[error("tableaux have different sums")]
    MismatchedSums,
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("line {line}: {message}")]
    Dataset { line: usize, message: String },
    #[error("unsupported basis file schema {0:?}")]
    Schema(String),
    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_degree(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::DegreeOutOfRange { n, min, max });
    }
    Ok(())
}
