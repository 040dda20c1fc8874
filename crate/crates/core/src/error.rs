use thiserror::Error;

/// Errors produced by the combinatorial and transform builders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid biword: {0}")]
    InvalidBiword(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("value {value} outside 1..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("matrix is not unitary (residual {0:e})")]
    NotUnitary(f64),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("{required} amplitudes exceed the memory budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
