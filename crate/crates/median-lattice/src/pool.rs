//! Sign-split decimated pooling.

use grid_core::{ExtReal, Signal};
use pyramid::maxpool;

/// The positive part max(0, f).
pub fn positive_part(f: &Signal) -> Signal {
    assert!(f.all_finite(), "positive_part is defined on finite signals");
    f.map(|v| match v {
        ExtReal::Finite(x) => ExtReal::Finite(x.max(0.0)),
        other => other,
    })
}

/// The negative part max(0, −f).
pub fn negative_part(f: &Signal) -> Signal {
    assert!(f.all_finite(), "negative_part is defined on finite signals");
    f.map(|v| match v {
        ExtReal::Finite(x) => ExtReal::Finite((-x).max(0.0)),
        other => other,
    })
}

/// Decimated pooling that treats the two sign chains separately:
/// max-pool the positive part, max-pool the negative part, and recombine
/// by real subtraction.
///
/// Over a window whose samples share a sign this picks the largest
/// magnitude, which is the decimated window supremum of the
/// signed-magnitude order.  Over a mixed-sign window the two pooled
/// magnitudes compete and the subtraction keeps their difference, so the
/// result is no lattice operation there.
pub fn sym_maxpool(f: &Signal, r: usize) -> Signal {
    let pos = maxpool(&positive_part(f), r);
    let neg = maxpool(&negative_part(f), r);
    pos.zip_map(&neg, |p, n| p.add(n.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use grid_core::Signal;

    fn sig(values: &[f64]) -> Signal {
        Signal::from_f64_1d(values)
    }

    #[test]
    fn sign_parts_split_the_signal() {
        let f = sig(&[-1.0, 0.0, 2.5]);
        assert_eq!(positive_part(&f), sig(&[0.0, 0.0, 2.5]));
        assert_eq!(negative_part(&f), sig(&[1.0, 0.0, 0.0]));
    }

    #[test]
    fn pooling_keeps_the_largest_magnitude_per_sign_chain() {
        let f = sig(&[-1.0, -3.0, -2.0, 5.0]);
        let out = sym_maxpool(&f, 2);
        assert_eq!(out, sig(&[-1.0, -3.0]), "stride-2 pooling of {f:?}");
    }

    #[test]
    fn nonnegative_signals_reduce_to_plain_pooling() {
        let f = sig(&[1.0, 4.0, 0.0, 2.0, 3.0]);
        assert_eq!(sym_maxpool(&f, 2), maxpool(&f, 2));
    }

    #[test]
    fn pooling_commutes_with_negation() {
        let f = sig(&[-1.0, 2.0, -3.0, 4.0, 0.0]);
        let direct = sym_maxpool(&grid_core::negate(&f), 2);
        let conjugated = grid_core::negate(&sym_maxpool(&f, 2));
        assert_eq!(direct, conjugated);
    }
}
