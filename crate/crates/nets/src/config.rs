use crate::error::NetError;
use activations::SigSpecConfig;
use grid_core::StructuringFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipMode {
    None,
    Tophat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    MaxPlus,
    Median,
}

/// Encoder–decoder description: one structuring function per level, a
/// shared stride, the skip policy, the operative lattice, and optional
/// per-level feature maps on either side (identity when absent).
#[derive(Clone, Debug)]
pub struct UNetConfig {
    structuring: Vec<StructuringFunction>,
    stride: usize,
    skip: SkipMode,
    lattice: Lattice,
    features: Vec<Option<SigSpecConfig>>,
    feature_duals: Vec<Option<SigSpecConfig>>,
    strict: bool,
}

impl UNetConfig {
    pub fn new(
        structuring: Vec<StructuringFunction>,
        stride: usize,
        skip: SkipMode,
        lattice: Lattice,
    ) -> Result<UNetConfig, NetError> {
        if stride == 0 {
            return Err(NetError::ZeroStride);
        }
        let levels = structuring.len();
        Ok(UNetConfig {
            structuring,
            stride,
            skip,
            lattice,
            features: vec![None; levels],
            feature_duals: vec![None; levels],
            strict: false,
        })
    }

    /// Replace the per-level encoder feature maps; one slot per level.
    pub fn with_features(
        mut self,
        features: Vec<Option<SigSpecConfig>>,
    ) -> Result<UNetConfig, NetError> {
        if features.len() != self.levels() {
            return Err(NetError::FeatureCountMismatch {
                expected: self.levels(),
                got: features.len(),
            });
        }
        self.features = features;
        Ok(self)
    }

    /// Replace the per-level decoder feature maps; one slot per level.
    pub fn with_feature_duals(
        mut self,
        duals: Vec<Option<SigSpecConfig>>,
    ) -> Result<UNetConfig, NetError> {
        if duals.len() != self.levels() {
            return Err(NetError::FeatureCountMismatch {
                expected: self.levels(),
                got: duals.len(),
            });
        }
        self.feature_duals = duals;
        Ok(self)
    }

    /// Demand the full level count: descending past an indivisible
    /// extent becomes an error instead of an early stop.
    pub fn strict(mut self) -> UNetConfig {
        self.strict = true;
        self
    }

    pub fn levels(&self) -> usize {
        self.structuring.len()
    }

    pub fn structuring(&self) -> &[StructuringFunction] {
        &self.structuring
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn skip(&self) -> SkipMode {
        self.skip
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn features(&self) -> &[Option<SigSpecConfig>] {
        &self.features
    }

    pub fn feature_duals(&self) -> &[Option<SigSpecConfig>] {
        &self.feature_duals
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }
}
