//! Layer designs over the lattice operator substrate: openings by
//! structuring function, regularised spectral filters, self-dual median
//! openings, rectifier-pooled feature maps, biased openings, residual
//! blocks, and the iteration/defect instruments that separate the
//! idempotent designs from the standard pooled layer.

mod apply;
mod defect;
mod error;
mod iterate;
mod spec;
mod spectral;

pub use apply::{bias_layer_apply, layer_apply, resnet_block, ResnetBlock};
pub use defect::idempotency_defect;
pub use error::LayerError;
pub use iterate::{iterate_layer, iterate_with, IterationMode, IterationTrace};
pub use spec::LayerSpec;
pub use spectral::{spectral_apply, spectral_multiplier};
