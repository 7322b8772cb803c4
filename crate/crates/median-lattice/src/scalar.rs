//! Scalar lattice operations for the signed-magnitude order.
//!
//! The order ranks finite reals by magnitude within each sign chain and
//! makes zero the least element: `s` precedes `t` when `0 <= s <= t` or
//! `t <= s <= 0`.  Values of opposite sign are incomparable, so the
//! infimum of such a pair collapses to zero while the supremum does not
//! exist.

/// Infimum of two finite reals in the signed-magnitude order.
///
/// Picks the value closer to zero when both share a sign and returns
/// zero when the signs disagree.
pub fn med_inf(s: f64, t: f64) -> f64 {
    assert!(s.is_finite() && t.is_finite(), "med_inf needs finite arguments");
    if s >= 0.0 && t >= 0.0 {
        s.min(t)
    } else if s <= 0.0 && t <= 0.0 {
        s.max(t)
    } else {
        0.0
    }
}

/// Supremum of two finite reals in the signed-magnitude order, when it
/// exists.
///
/// Returns the value farther from zero when both share a sign and `None`
/// when the signs strictly disagree.
pub fn med_sup(s: f64, t: f64) -> Option<f64> {
    assert!(s.is_finite() && t.is_finite(), "med_sup needs finite arguments");
    if s >= 0.0 && t >= 0.0 {
        Some(s.max(t))
    } else if s <= 0.0 && t <= 0.0 {
        Some(s.min(t))
    } else {
        None
    }
}
