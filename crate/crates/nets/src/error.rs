use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NetError {
    #[error("stride must be at least 1")]
    ZeroStride,
    #[error("{got} feature maps supplied for {expected} levels")]
    FeatureCountMismatch { expected: usize, got: usize },
    #[error("extent {extent} at level {level} is not divisible by stride {stride}")]
    IndivisibleExtent { extent: usize, level: usize, stride: usize },
    #[error("median networks need finite samples")]
    NonFiniteInput,
}
