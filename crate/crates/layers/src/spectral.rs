//! Circular spectral filtering on a signal's own DFT grid.

use crate::error::LayerError;
use grid_core::{ExtReal, Signal};
use mmbb::Kernel;
use rustfft::{num_complex::Complex, FftPlanner};

fn grid_shape(extents: &[usize]) -> (usize, usize) {
    let rows = extents[0];
    let cols = if extents.len() == 2 { extents[1] } else { 1 };
    (rows, cols)
}

fn fft_2d(buf: &mut [Complex<f64>], rows: usize, cols: usize, inverse: bool) {
    let mut planner = FftPlanner::new();
    if cols > 1 {
        let fft = if inverse {
            planner.plan_fft_inverse(cols)
        } else {
            planner.plan_fft_forward(cols)
        };
        for row in buf.chunks_exact_mut(cols) {
            fft.process(row);
        }
    }
    if rows > 1 {
        let fft = if inverse {
            planner.plan_fft_inverse(rows)
        } else {
            planner.plan_fft_forward(rows)
        };
        let mut column = vec![Complex::new(0.0, 0.0); rows];
        for j in 0..cols {
            for i in 0..rows {
                column[i] = buf[i * cols + j];
            }
            fft.process(&mut column);
            for i in 0..rows {
                buf[i * cols + j] = column[i];
            }
        }
    }
}

/// DFT bins of the kernel embedded periodically on the (rows × cols) grid.
///
/// Going through the same FFT as the signal keeps structural zeros exact:
/// a two-tap symmetric kernel really reaches 0 at the Nyquist bin instead
/// of a rounding residue, so the zero-regularisation multiplier projects
/// there instead of passing the bin through.
fn kernel_bins(k: &Kernel, rows: usize, cols: usize) -> Vec<Complex<f64>> {
    let mut buf = vec![Complex::new(0.0, 0.0); rows * cols];
    for (p, w) in k.iter() {
        let i = p[0].rem_euclid(rows as i64) as usize;
        let j = p[1].rem_euclid(cols as i64) as usize;
        buf[i * cols + j] += Complex::new(w, 0.0);
    }
    fft_2d(&mut buf, rows, cols, false);
    buf
}

/// The regularised deconvolution multiplier |K|²/(|K|² + ε²) per DFT bin,
/// with 0/0 read as 0, in row-major bin order.
pub fn spectral_multiplier(k: &Kernel, epsilon: f64, extents: &[usize]) -> Vec<f64> {
    assert!(epsilon >= 0.0 && epsilon.is_finite(), "regularisation must be a finite non-negative real");
    let (rows, cols) = grid_shape(extents);
    kernel_bins(k, rows, cols)
        .iter()
        .map(|bin| {
            let power = bin.norm_sqr();
            let denominator = power + epsilon * epsilon;
            if denominator == 0.0 {
                0.0
            } else {
                power / denominator
            }
        })
        .collect()
}

/// Filter a signal by the regularised deconvolution multiplier of `k`.
pub fn spectral_apply(f: &Signal, k: &Kernel, epsilon: f64) -> Result<Signal, LayerError> {
    if !f.all_finite() {
        return Err(LayerError::NonFiniteSample);
    }
    let (rows, cols) = grid_shape(f.extents());
    let mut buf: Vec<Complex<f64>> = f
        .samples()
        .iter()
        .map(|v| Complex::new(v.finite_value().expect("finiteness checked above"), 0.0))
        .collect();
    fft_2d(&mut buf, rows, cols, false);
    let multiplier = spectral_multiplier(k, epsilon, f.extents());
    for (bin, m) in buf.iter_mut().zip(multiplier) {
        *bin *= m;
    }
    fft_2d(&mut buf, rows, cols, true);
    let scale = 1.0 / (rows * cols) as f64;
    let mut out = f.clone();
    let points: Vec<grid_core::Point> = f.points().collect();
    for (p, bin) in points.into_iter().zip(buf) {
        out.set(p, ExtReal::Finite(bin.re * scale));
    }
    Ok(out)
}
