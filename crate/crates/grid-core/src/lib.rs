//! Extended-real arithmetic and finite-grid signals.
//!
//! Every operator in this workspace acts on a [`Signal`]: a finite one- or
//! two-dimensional grid of extended-real samples.  This crate supplies the
//! sample type [`ExtReal`] (reals with an adjoined top and bottom), the
//! signal container, flat windows and weighted structuring functions,
//! quantisation alphabets, the pointwise and median orderings, and the
//! plain-text / PGM interchange formats.
//!
//! Samples are never NaN, and no operation forms `Top + Bottom`: erosions
//! add finite structuring values to samples, dilations likewise, and the
//! few places that sum extended reals uphold the invariant by construction.

mod alphabet;
mod ext_real;
mod io;
mod order;
mod signal;
mod structuring;

pub use alphabet::{Alphabet, AlphabetError};
pub use ext_real::ExtReal;
pub use io::{
    parse_pgm, parse_signal_text, read_pgm_file, read_signal_file, write_pgm, write_pgm_file,
    write_signal_file, write_signal_text, FormatError,
};
pub use order::{median_leq, negate, pointwise_leq, scalar_median_leq};
pub use signal::{Point, Signal, SignalError};
pub use structuring::{StructuringError, StructuringFunction, Window};
