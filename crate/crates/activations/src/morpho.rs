use grid_core::{Signal, StructuringFunction};
use maxplus::erode;
use mmbb::anti_dilate;

/// Morphological activation: the largest erosion over the basis, capped by an
/// anti-dilation.
pub fn morpho_activation(
    f: &Signal,
    basis: &[StructuringFunction],
    cap: &StructuringFunction,
) -> Signal {
    assert!(!basis.is_empty(), "activation basis must be non-empty");
    let sup = basis
        .iter()
        .map(|g| erode(f, g))
        .reduce(|acc, e| acc.zip_map(&e, |a, b| a.max(b)))
        .expect("basis checked non-empty");
    sup.zip_map(&anti_dilate(f, cap), |a, b| a.min(b))
}
