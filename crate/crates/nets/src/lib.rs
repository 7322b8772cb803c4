//! Encoder–decoder networks built from decimated lattice operators,
//! with top-hat skip connections that make the decoder reconstruct the
//! encoder input exactly, and a skipless skeleton that is an opening in
//! its operative lattice.

mod config;
mod error;
mod export;
mod forward;

pub use config::{Lattice, SkipMode, UNetConfig};
pub use error::NetError;
pub use export::export_trace;
pub use forward::{skeleton_idempotency_check, unet_forward, UNetTrace};
