//! Rectifier activations with their adjoints, pooled activation operators,
//! morphological activations, spectral feature banks, and lattice-polynomial
//! evaluation.

mod apd;
mod error;
mod morpho;
mod poly;
mod relu;
mod sigspec;

pub use apd::{apd, apd_adjoint, apd_factored};
pub use error::ActivationError;
pub use morpho::morpho_activation;
pub use poly::{lattice_poly_eval, AffinePiece, LatticePolynomial};
pub use relu::{relu_param, relu_upper_adjoint};
pub use sigspec::{sigspec, SigSpecConfig};
