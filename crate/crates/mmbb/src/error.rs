use grid_core::Point;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MmbbError {
    #[error("a kernel needs at least one support point")]
    EmptyKernel,
    #[error("zero weight at {0:?}; drop the point instead")]
    ZeroWeight(Point),
    #[error("duplicate support point {0:?}")]
    DuplicateSupport(Point),
    #[error("weight {weight} at {point:?} is negative")]
    NegativeWeight { point: Point, weight: f64 },
    #[error("weights sum to {0}, expected 1")]
    NotNormalised(f64),
    #[error("enumeration needs {needed} patterns, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("sample {value} at {point:?} is outside the alphabet")]
    SampleOutsideAlphabet { point: Point, value: f64 },
    #[error("kernel has no positive part")]
    EmptyPositivePart,
    #[error("kernel has no negative part")]
    EmptyNegativePart,
    #[error("basis group {0} is empty")]
    EmptyGroup(usize),
}
