use crate::error::ActivationError;
use grid_core::{ExtReal, Signal};
use mmbb::{conv_direct, Kernel};

/// Weighted bank of convolutions with a bias reserved for the activation
/// stage of whatever composition uses it.
#[derive(Debug, Clone, PartialEq)]
pub struct SigSpecConfig {
    terms: Vec<(f64, Kernel)>,
    bias: f64,
}

impl SigSpecConfig {
    pub fn new(terms: Vec<(f64, Kernel)>, bias: f64) -> Result<SigSpecConfig, ActivationError> {
        if terms.is_empty() {
            return Err(ActivationError::EmptyConfig);
        }
        Ok(SigSpecConfig { terms, bias })
    }

    pub fn terms(&self) -> &[(f64, Kernel)] {
        &self.terms
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }
}

/// Sums the weighted convolutions; the configured bias is left to the caller.
pub fn sigspec(f: &Signal, cfg: &SigSpecConfig) -> Signal {
    assert!(f.all_finite(), "spectral features need finite samples");
    let zero = Signal::filled(f.dims(), f.extents(), ExtReal::finite(0.0)).expect("same shape");
    cfg.terms.iter().fold(zero, |acc, (w, k)| {
        acc.zip_map(&conv_direct(f, k), |a, v| a.add(v.scale(*w)))
    })
}
