use grid_core::{ExtReal, Signal};

/// Two-slope rectifier: `beta_plus * v` on positive samples, `beta_minus * v`
/// otherwise. `(1, 0)` is the standard rectifier, `(1, 1)` the identity.
pub fn relu_param(f: &Signal, beta_plus: f64, beta_minus: f64) -> Signal {
    assert!(f.all_finite(), "rectifier slopes need finite samples");
    f.map(|v| {
        let v = v.finite_value().expect("finite checked above");
        ExtReal::finite(if v > 0.0 { beta_plus * v } else { beta_minus * v })
    })
}

/// Upper adjoint of the standard rectifier.
///
/// The rectifier's outputs fill the non-negative cone, so the largest
/// pre-image of `g` is `g` itself when `g` is non-negative everywhere and
/// empty, hence bottom, as soon as one sample drops below zero.
pub fn relu_upper_adjoint(g: &Signal) -> Signal {
    let nonnegative = g.samples().iter().all(|&v| match v {
        ExtReal::Bottom => false,
        ExtReal::Finite(x) => x >= 0.0,
        ExtReal::Top => true,
    });
    if nonnegative {
        g.clone()
    } else {
        Signal::filled(g.dims(), g.extents(), ExtReal::Bottom).expect("shape preserved")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(samples: &[f64]) -> Signal {
        Signal::from_f64_1d(samples)
    }

    #[test]
    fn standard_slopes_clip_negatives() {
        assert_eq!(relu_param(&sig(&[-3.0, 2.0]), 1.0, 0.0), sig(&[0.0, 2.0]));
    }

    #[test]
    fn leaky_slopes_shrink_negatives() {
        assert_eq!(
            relu_param(&sig(&[-3.0, 2.0]), 1.0, 0.01),
            sig(&[-0.03, 2.0])
        );
    }

    #[test]
    fn unit_slopes_are_the_identity() {
        let f = sig(&[-4.0, 0.0, 7.0]);
        assert_eq!(relu_param(&f, 1.0, 1.0), f);
    }

    #[test]
    fn adjoint_keeps_the_nonnegative_cone() {
        let g = sig(&[1.0, 2.0]);
        assert_eq!(relu_upper_adjoint(&g), g);
        let zero = sig(&[0.0, 0.0]);
        assert_eq!(relu_upper_adjoint(&zero), zero);
    }

    #[test]
    fn adjoint_collapses_on_a_negative_sample() {
        let g = sig(&[1.0, -1.0]);
        let expected = Signal::new_1d(vec![ExtReal::Bottom, ExtReal::Bottom]).expect("non-empty");
        assert_eq!(relu_upper_adjoint(&g), expected);
    }
}
