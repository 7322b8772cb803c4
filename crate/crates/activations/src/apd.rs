use crate::relu::relu_param;
use grid_core::{ExtReal, Signal, Window};
use pyramid::{coarse_extents, maxpool, maxpool_adjoint, PyramidError};

/// Activation-pooling dilation: bias, rectify, then decimate in one pass.
///
/// `out(n)` is the largest `max(0, f(r*n - y) + alpha)` over in-domain window
/// reads, which factors exactly as `maxpool(relu(f + alpha), r)`.
pub fn apd(f: &Signal, r: usize, alpha: f64) -> Signal {
    assert!(r >= 1, "stride must be at least 1");
    assert!(f.all_finite(), "activation needs finite samples");
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
                let activated = (v.finite_value().expect("finite checked above") + alpha).max(0.0);
                best = best.max(ExtReal::finite(activated));
            }
        }
        out.set(n, best);
    }
    out
}

/// The pooled-rectifier form `apd` must match sample for sample.
pub fn apd_factored(f: &Signal, r: usize, alpha: f64) -> Signal {
    maxpool(&relu_param(&f.map(|v| v.add_offset(alpha)), 1.0, 0.0), r)
}

/// Upper adjoint of the activation-pooling dilation.
///
/// Negative coarse targets have no pre-image because the operator only emits
/// non-negative values, so the adjoint collapses to bottom; otherwise it
/// undoes the pooling by replication, subtracts the bias, and leaves fine
/// positions no window reads at top.
pub fn apd_adjoint(
    g: &Signal,
    r: usize,
    alpha: f64,
    fine_extents: &[usize],
) -> Result<Signal, PyramidError> {
    let replicated = maxpool_adjoint(g, r, fine_extents)?;
    let nonnegative = g.samples().iter().all(|&v| match v {
        ExtReal::Bottom => false,
        ExtReal::Finite(x) => x >= 0.0,
        ExtReal::Top => true,
    });
    if !nonnegative {
        return Ok(
            Signal::filled(g.dims(), fine_extents, ExtReal::Bottom).expect("shape preserved")
        );
    }
    Ok(replicated.map(|v| v.add_offset(-alpha)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(samples: &[f64]) -> Signal {
        Signal::from_f64_1d(samples)
    }

    #[test]
    fn pools_the_rectified_windows() {
        assert_eq!(apd(&sig(&[-1.0, 3.0, 2.0, -4.0]), 2, 0.0), sig(&[0.0, 3.0]));
    }

    #[test]
    fn identity_on_nonnegative_unstrided_input() {
        let f = sig(&[0.0, 2.0, 5.0]);
        assert_eq!(apd(&f, 1, 0.0), f);
    }

    #[test]
    fn matches_the_pooled_rectifier_form() {
        let f = sig(&[-2.0, 4.0, -1.0, 3.0, 0.0]);
        for r in 1..=3 {
            for alpha in [-1.5, 0.0, 2.0] {
                assert_eq!(apd(&f, r, alpha), apd_factored(&f, r, alpha));
            }
        }
    }

    #[test]
    fn adjoint_replicates_shifts_and_tops_the_tail() {
        let g = sig(&[2.0, 5.0]);
        let up = apd_adjoint(&g, 2, 1.0, &[4]).expect("consistent extents");
        let expected = Signal::new_1d(vec![
            ExtReal::finite(1.0),
            ExtReal::finite(4.0),
            ExtReal::finite(4.0),
            ExtReal::Top,
        ])
        .expect("non-empty");
        assert_eq!(up, expected);
    }

    #[test]
    fn adjoint_collapses_on_negative_targets() {
        let g = sig(&[2.0, -1.0]);
        let up = apd_adjoint(&g, 2, 0.0, &[4]).expect("consistent extents");
        assert!(up.samples().iter().all(|&v| v == ExtReal::Bottom));
    }

    #[test]
    fn adjoint_without_stride_or_bias_is_the_identity() {
        let g = sig(&[0.0, 3.0, 1.0]);
        assert_eq!(apd_adjoint(&g, 1, 0.0, &[3]).expect("consistent"), g);
    }

    #[test]
    fn adjoint_rejects_inconsistent_extents() {
        let g = sig(&[2.0, 5.0]);
        assert!(apd_adjoint(&g, 2, 0.0, &[9]).is_err());
    }
}
