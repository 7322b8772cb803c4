use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LayerError {
    #[error("layer input must be finite")]
    NonFiniteSample,
    #[error("grid shrinks below 1 sample")]
    GridTooSmall,
    #[error("residual iteration needs a non-negative start")]
    NegativeStart,
    #[error("residual iteration needs an anti-extensive operator")]
    NotAntiExtensive,
    #[error("residual iteration needs a grid-preserving operator")]
    GridChanged,
    #[error("invalid layer description: {0}")]
    MalformedSpec(String),
}
