//! Measuring how far a layer is from idempotency.

use crate::apply::layer_apply;
use crate::error::LayerError;
use crate::spec::LayerSpec;
use grid_core::{ExtReal, Signal};
use pyramid::{coarse_extents, maxpool, resample, ResampleMode};

/// Sup-norm distance between one and two applications of the layer.
///
/// Grid-preserving kinds compare directly.  Decimating kinds re-apply on
/// the first output's grid and compare against the first output put
/// through its own decimation (max-pooling for the rectifier-pooled
/// kinds, plain subsampling for the min-of-dilations kind), so both
/// sides live on the twice-coarsened grid.
pub fn idempotency_defect(spec: &LayerSpec, f: &Signal) -> Result<f64, LayerError> {
    let once = layer_apply(spec, f)?;
    let reference = match spec {
        LayerSpec::Cnn { stride, .. } | LayerSpec::Apd { stride, .. } => {
            check_coarse(&once, *stride)?;
            maxpool(&once, *stride)
        }
        LayerSpec::Apmo { stride, .. } => {
            check_coarse(&once, *stride)?;
            resample(&once, *stride, ResampleMode::Down, ExtReal::Bottom)
        }
        _ => once.clone(),
    };
    let twice = layer_apply(spec, &once)?;
    Ok(twice.sup_distance(&reference))
}

fn check_coarse(once: &Signal, stride: usize) -> Result<(), LayerError> {
    if coarse_extents(once.extents(), stride).iter().any(|&e| e == 0) {
        return Err(LayerError::GridTooSmall);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use activations::SigSpecConfig;
    use grid_core::{StructuringFunction, Window};
    use mmbb::Kernel;

    fn sig(values: &[f64]) -> Signal {
        Signal::from_f64_1d(values)
    }

    #[test]
    fn opening_layers_have_zero_defect() {
        let spec = LayerSpec::Type1 {
            structuring: StructuringFunction::flat_1d(&[0, 1]),
        };
        let defect = idempotency_defect(&spec, &sig(&[3.0, 1.0, 2.0, 5.0])).expect("valid layer");
        assert_eq!(defect, 0.0);
    }

    #[test]
    fn self_dual_layers_have_zero_defect() {
        let spec = LayerSpec::Type3 { window: Window::new_1d(&[-1, 0, 1]) };
        let defect = idempotency_defect(&spec, &sig(&[2.0, -1.0, 3.0, 0.0])).expect("valid layer");
        assert_eq!(defect, 0.0);
    }

    #[test]
    fn unregularised_spectral_layers_have_negligible_defect() {
        let spec = LayerSpec::Type2 {
            kernel: Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel"),
            epsilon: 0.0,
        };
        let defect = idempotency_defect(&spec, &sig(&[3.0, -1.0, 4.0, 1.0])).expect("valid layer");
        assert!(defect <= 1e-7, "defect {defect} exceeds transform round-off");
    }

    #[test]
    fn regularised_spectral_layers_have_positive_defect() {
        let spec = LayerSpec::Type2 {
            kernel: Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel"),
            epsilon: 0.5,
        };
        let defect = idempotency_defect(&spec, &sig(&[3.0, -1.0, 4.0, 1.0])).expect("valid layer");
        assert!(defect > 1e-7, "attenuated bins should move twice, got {defect}");
    }

    #[test]
    fn a_pooled_feature_layer_shows_a_positive_defect() {
        let features = SigSpecConfig::new(
            vec![(1.0, Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel"))],
            0.0,
        )
        .expect("valid config");
        let spec = LayerSpec::Cnn { features, stride: 2, alpha: 0.0 };
        let defect = idempotency_defect(&spec, &sig(&[4.0, 0.0, 0.0, 4.0, 0.0, 0.0, 4.0, 0.0]))
            .expect("valid layer");
        assert!(defect > 0.0, "smoothing then pooling twice should drift");
    }

    #[test]
    fn a_plain_pooling_layer_on_nonnegative_input_has_zero_defect() {
        let spec = LayerSpec::Apd { stride: 2, alpha: 0.0 };
        let defect = idempotency_defect(&spec, &sig(&[1.0, 4.0, 0.0, 2.0])).expect("valid layer");
        assert_eq!(defect, 0.0, "pooling a pooled signal is pooling");
    }
}
