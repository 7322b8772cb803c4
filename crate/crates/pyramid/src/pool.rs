use crate::error::PyramidError;
use crate::resample::coarse_extents;
use grid_core::{ExtReal, Signal, Window};

/// Decimated max-pooling with backward windows.
///
/// `out(n)` is the maximum of `f(r*n - y)` over window offsets
/// `y in {0..r-1}^d`, restricted to the domain of `f`. The coarse extent
/// along each axis is `ceil(extent / r)`.
pub fn maxpool(f: &Signal, r: usize) -> Signal {
    assert!(r >= 1, "stride must be at least 1");
    let window = Window::stride_window(f.dims(), r);
    let extents = coarse_extents(f.extents(), r);
    let mut out = Signal::filled(f.dims(), &extents, ExtReal::Bottom)
        .expect("pooled extents stay positive");
    let coarse_points: Vec<_> = out.points().collect();
    for n in coarse_points {
        let mut best = ExtReal::Bottom;
        for y in window.iter() {
            let z = [n[0] * r as i64 - y[0], n[1] * r as i64 - y[1]];
            if let Some(v) = f.get(z) {
                best = best.max(v);
            }
        }
        out.set(n, best);
    }
    out
}

/// Upper adjoint of decimated max-pooling.
///
/// Fine position `z` is read by the single backward window `n = ceil(z / r)`,
/// so the adjoint replicates `g(ceil(z / r))` there and is unconstrained,
/// hence top, at fine positions no window reads. This is the unique map
/// satisfying `maxpool(f, r) <= g  iff  f <= maxpool_adjoint(g, r, ..)`.
pub fn maxpool_adjoint(
    g: &Signal,
    r: usize,
    fine_extents: &[usize],
) -> Result<Signal, PyramidError> {
    assert!(r >= 1, "stride must be at least 1");
    if g.extents() != coarse_extents(fine_extents, r).as_slice() {
        return Err(PyramidError::ExtentMismatch {
            coarse: g.extents().to_vec(),
            fine: fine_extents.to_vec(),
            stride: r,
        });
    }
    let mut out = Signal::filled(g.dims(), fine_extents, ExtReal::Top)
        .expect("fine extents stay positive");
    let fine_points: Vec<_> = out.points().collect();
    for z in fine_points {
        let n = [
            (z[0] + r as i64 - 1) / r as i64,
            (z[1] + r as i64 - 1) / r as i64,
        ];
        if let Some(v) = g.get(n) {
            out.set(z, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resample::{resample, ResampleMode};
    use maxplus::dilate;

    fn sig(samples: &[f64]) -> Signal {
        Signal::from_f64_1d(samples)
    }

    #[test]
    fn pools_backward_windows() {
        assert_eq!(maxpool(&sig(&[3.0, 1.0, 2.0, 4.0]), 2), sig(&[3.0, 2.0]));
    }

    #[test]
    fn stride_one_is_the_identity() {
        let f = sig(&[5.0, -1.0, 2.0]);
        assert_eq!(maxpool(&f, 1), f);
    }

    #[test]
    fn constants_pool_to_constants() {
        let f = Signal::filled(2, &[3, 4], ExtReal::finite(7.0)).expect("non-empty");
        let pooled = maxpool(&f, 2);
        assert_eq!(pooled.extents(), &[2, 2]);
        assert!(pooled.samples().iter().all(|&v| v == ExtReal::finite(7.0)));
    }

    #[test]
    fn pooling_is_the_flat_dilation_pyramid() {
        let f = Signal::from_f64_2d(3, 3, &[4.0, 0.0, 2.0, 1.0, 5.0, 3.0, 2.0, 2.0, 6.0]);
        for r in 1..=3 {
            let b = Window::stride_window(f.dims(), r).to_flat();
            let pyramid = resample(&dilate(&f, &b), r, ResampleMode::Down, ExtReal::Bottom);
            assert_eq!(maxpool(&f, r), pyramid, "pooling must match dilate-then-down at stride {r}");
        }
    }

    #[test]
    fn adjoint_replicates_and_tops_the_uncovered_tail() {
        let g = sig(&[3.0, 2.0]);
        let up = maxpool_adjoint(&g, 2, &[4]).expect("consistent extents");
        let expected = Signal::new_1d(vec![
            ExtReal::finite(3.0),
            ExtReal::finite(2.0),
            ExtReal::finite(2.0),
            ExtReal::Top,
        ])
        .expect("non-empty");
        assert_eq!(up, expected);
    }

    #[test]
    fn adjoint_at_stride_one_is_the_identity() {
        let g = sig(&[1.0, 4.0, 2.0]);
        assert_eq!(maxpool_adjoint(&g, 1, &[3]).expect("consistent extents"), g);
    }

    #[test]
    fn adjoint_rejects_inconsistent_extents() {
        let g = sig(&[3.0, 2.0]);
        assert_eq!(
            maxpool_adjoint(&g, 2, &[7]),
            Err(PyramidError::ExtentMismatch {
                coarse: vec![2],
                fine: vec![7],
                stride: 2,
            })
        );
    }
}
