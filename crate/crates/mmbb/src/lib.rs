//! Morphological basis representation of linear convolution.
//!
//! A finite non-negative normalised kernel admits an exact rewriting of
//! convolution as a maximum of erosions: the structuring elements range over
//! the kernel's virtual basis, the image of the quantisation patterns under
//! the characteristic matrix.  Signed kernels split into gain-weighted
//! positive and negative branches.  This crate computes the basis exactly
//! (kernel weights and alphabet levels are snapped to rationals), evaluates
//! the sup-of-erosions and signed forms, the sup-generating operators, the
//! sign test, the basis-weighted layer, and the activation-pooling operator.
//!
//! Direct summation `conv_direct` is the oracle every representation is
//! checked against; representation equality holds at points whose full
//! support window lies inside the domain.

mod basis;
mod char_matrix;
mod conv;
mod error;
mod kernel;
mod layer;
mod supgen;

pub use basis::{snap_rational, virtual_basis, virtual_basis_with_cap, VirtualBasis, DEFAULT_ENUMERATION_CAP};
pub use char_matrix::{char_matrix, CharacteristicMatrix};
pub use conv::{
    conv_direct, conv_signed_mmbb, conv_via_virtual_basis, interior_points, is_interior,
    sup_erosion_branch,
};
pub use error::MmbbError;
pub use kernel::{Kernel, KernelPart};
pub use layer::{apmo_apply, mmbb_layer_apply, ApmoItem};
pub use sign_test::bb_sign_test;
pub use supgen::{anti_dilate, supgen_apply, SupGenPair};
