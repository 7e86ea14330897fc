use thiserror::Error;

/// Errors raised by graph construction, ranking, PHITS and detection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("adjacency matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquareMatrix { row: usize, len: usize, expected: usize },
    #[error("adjacency matrix entry ({row}, {col}) is {value}, expected 0 or 1")]
    NonBinaryEntry { row: usize, col: usize, value: u8 },
    #[error("node index {index} out of range for graph with {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph has no nodes")]
    NoNodes,
    #[error("{factors} factors requested but the graph has only {n} nodes")]
    FactorsExceedNodes { factors: usize, n: usize },
    #[error("node {0} is never cited")]
    NeverCited(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
