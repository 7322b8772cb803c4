//! Flat morphology over the zero-rooted signed-magnitude order.
//!
//! Finite reals are ordered by magnitude along each sign chain with zero
//! as the shared least element.  The erosion folds the total binary
//! infimum over a window, the dilation takes the window supremum through
//! the reflected reads that pair with it, and their composite is a
//! self-dual idempotent opening.  A sign-split variant of decimated
//! pooling recovers the decimated window supremum wherever a pooling
//! window does not mix signs.

mod ops;
mod pool;
mod scalar;

pub use ops::{med_dilate, med_erode, med_open};
pub use pool::{negative_part, positive_part, sym_maxpool};
pub use scalar::{med_inf, med_sup};
