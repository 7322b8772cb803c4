use crate::error::PyramidError;
use crate::resample::{coarse_extents, resample, ResampleMode};
use grid_core::{ExtReal, Signal};
use mmbb::{conv_direct, Kernel};

const STRIDE: usize = 2;

/// One analysis step: the coarse approximation and the detail it left behind.
#[derive(Debug, Clone, PartialEq)]
pub struct PyramidLevel {
    pub approximation: Signal,
    pub detail: Signal,
}

/// The binomial smoothing kernel, weights 1/4, 1/2, 1/4 centred at the origin.
pub fn binomial_kernel() -> Kernel {
    Kernel::from_pairs_1d(&[(-1, 0.25), (0, 0.5), (1, 0.25)]).expect("fixed valid kernel")
}

/// Piecewise-constant upsampling: `out(z) = g(floor(z / r))`.
pub fn replicate_up(g: &Signal, r: usize, fine_extents: &[usize]) -> Result<Signal, PyramidError> {
    assert!(r >= 1, "stride must be at least 1");
    if g.extents() != coarse_extents(fine_extents, r).as_slice() {
        return Err(PyramidError::ExtentMismatch {
            coarse: g.extents().to_vec(),
            fine: fine_extents.to_vec(),
            stride: r,
        });
    }
    let mut out = Signal::filled(g.dims(), fine_extents, ExtReal::Bottom)
        .expect("fine extents stay positive");
    let fine_points: Vec<_> = out.points().collect();
    for z in fine_points {
        out.set(z, g.at([z[0] / r as i64, z[1] / r as i64]));
    }
    Ok(out)
}

/// Expands a coarse approximation back to the finer grid: replicate, then smooth.
pub fn laplacian_expand(
    g: &Signal,
    k_smooth: &Kernel,
    fine_extents: &[usize],
) -> Result<Signal, PyramidError> {
    Ok(conv_direct(&replicate_up(g, STRIDE, fine_extents)?, k_smooth))
}

/// Smooth-and-decimate analysis with exact detail bookkeeping.
///
/// Each level stores the next coarse approximation and the detail
/// `finer - expand(coarser)` on the finer grid, so summing details against
/// re-expanded approximations reverses the analysis without error.
pub fn laplacian_pyramid(f: &Signal, k_smooth: &Kernel, levels: usize) -> Vec<PyramidLevel> {
    assert!(levels >= 1, "need at least one level");
    let mut gauss = f.clone();
    let mut out = Vec::with_capacity(levels);
    for _ in 0..levels {
        let coarse = resample(
            &conv_direct(&gauss, k_smooth),
            STRIDE,
            ResampleMode::Down,
            ExtReal::Bottom,
        );
        let expanded = laplacian_expand(&coarse, k_smooth, gauss.extents())
            .expect("expansion target is the level it came from");
        let detail = gauss.zip_map(&expanded, |a, b| a.add(b.neg()));
        out.push(PyramidLevel {
            approximation: coarse.clone(),
            detail,
        });
        gauss = coarse;
    }
    out
}

/// Folds a pyramid back to the finest level by the telescoping identity.
pub fn laplacian_reconstruct(
    levels: &[PyramidLevel],
    k_smooth: &Kernel,
) -> Result<Signal, PyramidError> {
    let last = levels.last().ok_or(PyramidError::NoLevels)?;
    let mut current = last.approximation.clone();
    for level in levels.iter().rev() {
        let expanded = laplacian_expand(&current, k_smooth, level.detail.extents())?;
        current = level.detail.zip_map(&expanded, |a, b| a.add(b));
    }
    Ok(current)
}
