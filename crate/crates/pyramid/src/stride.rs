use crate::error::PyramidError;
use crate::resample::{resample, ResampleMode};
use grid_core::{ExtReal, Point, Signal};
use mmbb::{conv_direct, Kernel};

/// Linear convolution followed by downsampling.
pub fn strided_conv(f: &Signal, k: &Kernel, r: usize) -> Signal {
    assert!(r >= 1, "stride must be at least 1");
    resample(&conv_direct(f, k), r, ResampleMode::Down, ExtReal::Bottom)
}

/// Folds kernel weights over residue classes of the stride.
///
/// Offsets congruent modulo `r` merge into one coarse offset in
/// `{0..r-1}^d` with their weights summed. Residues whose weights cancel
/// exactly are dropped.
pub fn aliased_kernel(k: &Kernel, r: usize) -> Result<Kernel, PyramidError> {
    assert!(r >= 1, "stride must be at least 1");
    let mut folded: Vec<(Point, f64)> = Vec::new();
    for (p, w) in k.iter() {
        let residue = [p[0].rem_euclid(r as i64), p[1].rem_euclid(r as i64)];
        match folded.iter_mut().find(|(q, _)| *q == residue) {
            Some((_, acc)) => *acc += w,
            None => folded.push((residue, w)),
        }
    }
    folded.retain(|&(_, w)| w != 0.0);
    if folded.is_empty() {
        return Err(PyramidError::FoldedToNothing { stride: r });
    }
    Ok(Kernel::new(&folded).expect("folded support is deduplicated and non-zero"))
}

/// Circular convolution on the periodised domain of `f`.
///
/// `out(x)` sums `k_i * f((x - x_i) mod extents)` with the wrap taken
/// componentwise, so every output position reads every kernel tap.
pub fn circular_conv(f: &Signal, k: &Kernel) -> Signal {
    assert!(f.all_finite(), "circular convolution needs finite samples");
    let e0 = f.extents()[0] as i64;
    let e1 = if f.dims() == 2 { f.extents()[1] as i64 } else { 1 };
    let points: Vec<_> = f.points().collect();
    let mut out = f.clone();
    for x in points {
        let mut acc = 0.0;
        for (p, w) in k.iter() {
            let z = [(x[0] - p[0]).rem_euclid(e0), (x[1] - p[1]).rem_euclid(e1)];
            acc += w * f.at(z).finite_value().expect("finite checked above");
        }
        out.set(x, ExtReal::finite(acc));
    }
    out
}

/// Divides an `r`-strided kernel support down to the coarse grid.
///
/// Every offset must be a multiple of `r` componentwise; weights carry over
/// unchanged. With such a kernel, downsampling a circular convolution equals
/// circularly convolving the downsampled signal with the reindexed kernel,
/// term for term.
pub fn noble_reindexed_kernel(k: &Kernel, r: usize) -> Result<Kernel, PyramidError> {
    assert!(r >= 1, "stride must be at least 1");
    let mut pairs: Vec<(Point, f64)> = Vec::with_capacity(k.len());
    for (p, w) in k.iter() {
        if p[0].rem_euclid(r as i64) != 0 || p[1].rem_euclid(r as i64) != 0 {
            return Err(PyramidError::OffsetNotStrided { point: p, stride: r });
        }
        pairs.push(([p[0] / r as i64, p[1] / r as i64], w));
    }
    Ok(Kernel::new(&pairs).expect("division by the stride keeps offsets distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(samples: &[f64]) -> Signal {
        Signal::from_f64_1d(samples)
    }

    #[test]
    fn identity_kernel_reduces_to_downsampling() {
        let f = sig(&[1.0, 4.0, 2.0, 8.0]);
        assert_eq!(strided_conv(&f, &Kernel::identity(), 2), sig(&[1.0, 2.0]));
    }

    #[test]
    fn stride_one_reduces_to_convolution() {
        let f = sig(&[1.0, 4.0, 2.0]);
        let k = Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel");
        assert_eq!(strided_conv(&f, &k, 1), conv_direct(&f, &k));
    }

    #[test]
    fn averaging_kernel_halves_the_alternating_signal() {
        let f = sig(&[1.0, 0.0, 1.0, 0.0]);
        let k = Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel");
        assert_eq!(strided_conv(&f, &k, 2), sig(&[0.5, 0.5]));
    }

    #[test]
    fn folding_merges_residue_classes() {
        let k = Kernel::from_pairs_1d(&[(0, 1.0), (1, 2.0), (2, 3.0), (3, 4.0)]).expect("valid");
        let folded = aliased_kernel(&k, 2).expect("non-cancelling fold");
        assert_eq!(folded.support(), &[[0, 0], [1, 0]]);
        assert_eq!(folded.weights(), &[4.0, 6.0]);
    }

    #[test]
    fn folding_is_the_identity_past_the_support_span() {
        let k = Kernel::from_pairs_1d(&[(0, 1.0), (1, 2.0), (2, 3.0)]).expect("valid");
        let folded = aliased_kernel(&k, 5).expect("nothing to merge");
        assert_eq!(folded.support(), k.support());
        assert_eq!(folded.weights(), k.weights());
    }

    #[test]
    fn folding_reports_total_cancellation() {
        let k = Kernel::from_pairs_1d(&[(0, 1.0), (2, -1.0)]).expect("valid");
        assert_eq!(
            aliased_kernel(&k, 2),
            Err(PyramidError::FoldedToNothing { stride: 2 })
        );
    }

    #[test]
    fn circular_convolution_wraps_the_domain() {
        let f = sig(&[1.0, 2.0, 3.0, 4.0]);
        let k = Kernel::from_pairs_1d(&[(1, 1.0)]).expect("valid shift");
        assert_eq!(circular_conv(&f, &k), sig(&[4.0, 1.0, 2.0, 3.0]));
        assert_eq!(circular_conv(&f, &Kernel::identity()), f);
    }

    #[test]
    fn reindexing_requires_strided_support() {
        let k = Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid");
        assert_eq!(
            noble_reindexed_kernel(&k, 2),
            Err(PyramidError::OffsetNotStrided {
                point: [1, 0],
                stride: 2
            })
        );
    }

    #[test]
    fn subsampling_commutes_with_strided_circular_kernels() {
        let f = sig(&[1.0, 5.0, 2.0, 4.0, 3.0, 7.0]);
        let k = Kernel::from_pairs_1d(&[(0, 0.25), (2, 0.5), (4, 0.25)]).expect("valid");
        let lhs = resample(&circular_conv(&f, &k), 2, ResampleMode::Down, ExtReal::Bottom);
        let coarse = resample(&f, 2, ResampleMode::Down, ExtReal::Bottom);
        let rhs = circular_conv(&coarse, &noble_reindexed_kernel(&k, 2).expect("strided"));
        assert_eq!(lhs, rhs, "both sides must sum identical terms");
    }
}
