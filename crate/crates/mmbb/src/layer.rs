use grid_core::{ExtReal, Signal, StructuringFunction};
use maxplus::erode;

use crate::error::MmbbError;

/// One APMO branch: a structuring function and its additive bias.
#[derive(Clone, Debug, PartialEq)]
pub struct ApmoItem {
    pub structuring: StructuringFunction,
    pub bias: f64,
}

/// Σⱼ wⱼ · maxᵢ erode(f, gᵢⱼ): a weighted combination of sup-of-erosion
/// branches, the basis-parameterised form of a linear layer.
pub fn mmbb_layer_apply(
    f: &Signal,
    bases: &[(f64, Vec<StructuringFunction>)],
) -> Result<Signal, MmbbError> {
    for (j, (_, group)) in bases.iter().enumerate() {
        if group.is_empty() {
            return Err(MmbbError::EmptyGroup(j));
        }
    }
    let mut out = Signal::filled(f.dims(), f.extents(), ExtReal::finite(0.0))
        .expect("input shape is valid");
    for (w, group) in bases {
        let mut branch = Signal::filled(f.dims(), f.extents(), ExtReal::Bottom)
            .expect("input shape is valid");
        for g in group {
            branch = branch.zip_map(&erode(f, g), |a, b| a.max(b));
        }
        out = out.zip_map(&branch, |acc, v| acc.add(v.scale(*w)));
    }
    Ok(out)
}

/// out(n) = minⱼ { max over y ∈ support(bⱼ) with Rn−y in-domain of
/// f(Rn−y) + bⱼ(y), plus αⱼ } on the stride-R coarse grid.
pub fn apmo_apply(f: &Signal, items: &[ApmoItem], r: usize) -> Signal {
    assert!(r >= 1, "stride must be at least 1");
    assert!(!items.is_empty(), "apmo needs at least one branch");
    let coarse: Vec<usize> = f
        .extents()
        .iter()
        .take(f.dims())
        .map(|&n| (n + r - 1) / r)
        .collect();
    let cells: usize = coarse.iter().product();
    let cols = if f.dims() == 2 { coarse[1] } else { 1 };
    let mut out = Vec::with_capacity(cells);
    for cell in 0..cells {
        let n = [(cell / cols.max(1)) as i64, (cell % cols.max(1)) as i64];
        let base = [n[0] * r as i64, n[1] * r as i64];
        let mut best = ExtReal::Top;
        for item in items {
            let mut branch = ExtReal::Bottom;
            for (y, w) in item.structuring.iter() {
                if let Some(v) = f.get([base[0] - y[0], base[1] - y[1]]) {
                    branch = branch.max(v.add_offset(w));
                }
            }
            best = best.min(branch.add_offset(item.bias));
        }
        out.push(best);
    }
    Signal::new(f.dims(), &coarse, out).expect("coarse extents are non-empty")
}
