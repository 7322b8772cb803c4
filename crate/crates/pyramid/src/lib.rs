//! Multiresolution operators: stride resampling, erosion pyramids, decimated
//! max-pooling with its adjoint, strided and circular convolution, smoothing
//! pyramids with exact detail bookkeeping, and residue skeletons.

mod error;
mod export;
mod laplacian;
mod pool;
mod resample;
mod skeleton;
mod stride;

pub use error::PyramidError;
pub use export::{export_levels, import_levels};
pub use laplacian::{
    binomial_kernel, laplacian_expand, laplacian_pyramid, laplacian_reconstruct, replicate_up,
    PyramidLevel,
};
pub use pool::{maxpool, maxpool_adjoint};
pub use resample::{coarse_extents, gh_analysis, gh_synthesis, resample, ResampleMode};
pub use skeleton::{skeleton_decompose, skeleton_reconstruct};
pub use stride::{aliased_kernel, circular_conv, noble_reindexed_kernel, strided_conv};
