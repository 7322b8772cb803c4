use grid_core::{ExtReal, Signal, StructuringFunction};
use maxplus::{dilate, erode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResampleMode {
    Down,
    Up,
}

fn ceil_div(n: usize, r: usize) -> usize {
    (n + r - 1) / r
}

/// Extents after downsampling every axis by `r`.
pub fn coarse_extents(fine: &[usize], r: usize) -> Vec<usize> {
    fine.iter().map(|&n| ceil_div(n, r)).collect()
}

/// Grid resampling by an integer stride.
///
/// Down keeps the samples at stride multiples, `out(n) = f(r*n)`; up places
/// `f(n)` at position `r*n` and `fill` everywhere else. Down after up is the
/// identity for any fill.
pub fn resample(f: &Signal, r: usize, mode: ResampleMode, fill: ExtReal) -> Signal {
    assert!(r >= 1, "stride must be at least 1");
    match mode {
        ResampleMode::Down => {
            let extents = coarse_extents(f.extents(), r);
            let mut out = Signal::filled(f.dims(), &extents, ExtReal::Bottom)
                .expect("downsampled extents stay positive");
            let coarse_points: Vec<_> = out.points().collect();
            for p in coarse_points {
                out.set(p, f.at([p[0] * r as i64, p[1] * r as i64]));
            }
            out
        }
        ResampleMode::Up => {
            let extents: Vec<usize> = f.extents().iter().map(|&n| n * r).collect();
            let mut out =
                Signal::filled(f.dims(), &extents, fill).expect("upsampled extents stay positive");
            for p in f.points() {
                out.set([p[0] * r as i64, p[1] * r as i64], f.at(p));
            }
            out
        }
    }
}

/// Erosion pyramid analysis: erode, then downsample.
pub fn gh_analysis(f: &Signal, b: &StructuringFunction, r: usize) -> Signal {
    resample(&erode(f, b), r, ResampleMode::Down, ExtReal::Bottom)
}

/// Erosion pyramid synthesis: upsample with bottom fill, then dilate.
///
/// The output extent along each axis is `r` times the coarse extent, so
/// synthesis after analysis reproduces the input shape exactly when every
/// extent is divisible by `r`. The composition is an opening: increasing,
/// anti-extensive, idempotent.
pub fn gh_synthesis(g: &Signal, b: &StructuringFunction, r: usize) -> Signal {
    dilate(&resample(g, r, ResampleMode::Up, ExtReal::Bottom), b)
}
