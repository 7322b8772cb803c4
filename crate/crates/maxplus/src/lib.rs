//! Max-plus and max-times morphology on the pointwise lattice.
//!
//! Erosion restricts its window to the signal domain (equivalently pads with
//! top); dilation pads with bottom.  With the translation built into the
//! `x+y` / `x−y` indexing, erosion and dilation with the *same* structuring
//! function form a Galois adjunction, so `open = dilate ∘ erode` and
//! `close = erode ∘ dilate` with one shared structuring function.

mod maxtimes;
mod ops;

pub use maxtimes::{exp_signal, log_signal, maxtimes_morph, MaxTimesDirection, MaxTimesError};
pub use ops::{adjunction_holds, apply, close, dilate, erode, open, MorphOpResult, OpKind};
