use crate::error::MmbbError;
use grid_core::Point;

/// A finite-support real kernel with a fixed support ordering.
///
/// The support order fixes the coordinate bijection used by every basis
/// representation: coordinate `i` always pairs with `support()[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel {
    support: Vec<Point>,
    weights: Vec<f64>,
}

/// A single-signed part of a kernel: the normalised kernel and its gain.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPart {
    pub kernel: Kernel,
    pub gain: f64,
}

impl Kernel {
    pub fn new(pairs: &[(Point, f64)]) -> Result<Kernel, MmbbError> {
        if pairs.is_empty() {
            return Err(MmbbError::EmptyKernel);
        }
        let mut support = Vec::with_capacity(pairs.len());
        let mut weights = Vec::with_capacity(pairs.len());
        for &(p, w) in pairs {
            if w == 0.0 {
                return Err(MmbbError::ZeroWeight(p));
            }
            if support.contains(&p) {
                return Err(MmbbError::DuplicateSupport(p));
            }
            support.push(p);
            weights.push(w);
        }
        Ok(Kernel { support, weights })
    }

    pub fn from_pairs_1d(pairs: &[(i64, f64)]) -> Result<Kernel, MmbbError> {
        let pairs: Vec<(Point, f64)> = pairs.iter().map(|&(o, w)| ([o, 0], w)).collect();
        Kernel::new(&pairs)
    }

    /// The unit mass at the origin.
    pub fn identity() -> Kernel {
        Kernel::new(&[([0, 0], 1.0)]).expect("unit mass is a valid kernel")
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &[Point] {
        &self.support
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, f64)> + '_ {
        self.support.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|&w| w > 0.0)
    }

    pub fn is_normalised(&self) -> bool {
        self.is_nonnegative() && (self.weight_sum() - 1.0).abs() <= 1e-12
    }

    /// Positive part as a normalised kernel with its gain G⁺ = Σ max(k,0).
    pub fn positive_part(&self) -> Option<KernelPart> {
        self.signed_part(1.0)
    }

    /// Negative part: weights −min(k,0) normalised, gain G⁻ = Σ max(−k,0).
    pub fn negative_part(&self) -> Option<KernelPart> {
        self.signed_part(-1.0)
    }

    fn signed_part(&self, sign: f64) -> Option<KernelPart> {
        let pairs: Vec<(Point, f64)> = self
            .iter()
            .filter(|&(_, w)| w * sign > 0.0)
            .map(|(p, w)| (p, w * sign))
            .collect();
        if pairs.is_empty() {
            return None;
        }
        let gain: f64 = pairs.iter().map(|&(_, w)| w).sum();
        let normalised: Vec<(Point, f64)> = pairs.iter().map(|&(p, w)| (p, w / gain)).collect();
        Some(KernelPart {
            kernel: Kernel::new(&normalised).expect("normalised part keeps distinct support"),
            gain,
        })
    }
}
