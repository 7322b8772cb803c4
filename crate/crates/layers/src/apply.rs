//! Forward application of layer descriptions.

use crate::error::LayerError;
use crate::spec::LayerSpec;
use crate::spectral::spectral_apply;
use activations::{apd, sigspec};
use grid_core::{Signal, StructuringFunction};
use maxplus::{dilate, erode, open};
use median_lattice::med_open;
use mmbb::apmo_apply;

/// Run one layer forward.
///
/// Decimating kinds emit their stride-R coarse grid; the rest preserve
/// the input grid.
pub fn layer_apply(spec: &LayerSpec, f: &Signal) -> Result<Signal, LayerError> {
    spec.validate()?;
    match spec {
        LayerSpec::Type1 { structuring } => Ok(open(f, structuring)),
        LayerSpec::Type2 { kernel, epsilon } => spectral_apply(f, kernel, *epsilon),
        LayerSpec::Type3 { window } => {
            if !f.all_finite() {
                return Err(LayerError::NonFiniteSample);
            }
            Ok(med_open(f, window))
        }
        LayerSpec::Cnn { features, stride, alpha } => {
            if !f.all_finite() {
                return Err(LayerError::NonFiniteSample);
            }
            Ok(apd(&sigspec(f, features), *stride, *alpha))
        }
        LayerSpec::Apd { stride, alpha } => {
            if !f.all_finite() {
                return Err(LayerError::NonFiniteSample);
            }
            Ok(apd(f, *stride, *alpha))
        }
        LayerSpec::Apmo { items, stride } => Ok(apmo_apply(f, items, *stride)),
    }
}

/// Opening with a bias inserted between the adjoint pair:
/// dilate(erode(f, b) + α, b).
///
/// A negative bias pushes the output strictly below the plain opening,
/// so only suitably eroded signals survive as fixed points.
pub fn bias_layer_apply(b: &StructuringFunction, alpha: f64, f: &Signal) -> Signal {
    assert!(alpha.is_finite(), "bias must be finite");
    dilate(&erode(f, b).map(|v| v.add_offset(alpha)), b)
}

/// A residual block around the opening: the block output together with
/// the non-negative top-hat residue it discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct ResnetBlock {
    pub block: Signal,
    pub tophat: Signal,
}

/// block = open(f, b); tophat = f − block ≥ 0.
pub fn resnet_block(b: &StructuringFunction, f: &Signal) -> ResnetBlock {
    let block = open(f, b);
    let tophat = f.zip_map(&block, |a, o| a.add(o.neg()));
    ResnetBlock { block, tophat }
}
