use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ActivationError {
    #[error("spectral config needs at least one term")]
    EmptyConfig,
    #[error("lattice polynomial needs at least one clause")]
    NoClauses,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} names piece {index} but only {pieces} pieces exist")]
    PieceIndexOutOfRange {
        clause: usize,
        index: usize,
        pieces: usize,
    },
    #[error("piece coefficients must be finite")]
    NonFiniteCoefficient,
    #[error("input has dimension {got} but the pieces expect {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}
