use grid_core::Point;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PyramidError {
    #[error("coarse extents {coarse:?} do not match fine extents {fine:?} at stride {stride}")]
    ExtentMismatch {
        coarse: Vec<usize>,
        fine: Vec<usize>,
        stride: usize,
    },
    #[error("kernel offset {point:?} is not a multiple of the stride {stride}")]
    OffsetNotStrided { point: Point, stride: usize },
    #[error("kernel folded to nothing at stride {stride}")]
    FoldedToNothing { stride: usize },
    #[error("pyramid level list is empty")]
    NoLevels,
}
