//! Flat window operators over the signed-magnitude order.

use crate::scalar::med_inf;
use grid_core::{ExtReal, Signal, Window};

fn finite_sample(f: &Signal, p: grid_core::Point) -> f64 {
    match f.at(p) {
        ExtReal::Finite(v) => v,
        other => panic!("expected a finite sample, found {other:?} at {p:?}"),
    }
}

/// Window infimum in the signed-magnitude order.
///
/// Each output sample folds `med_inf` over the in-domain window reads
/// `f(x + y)`: the smallest magnitude when every read shares a sign,
/// zero as soon as the signs disagree.  Reads outside the domain are
/// skipped rather than padded; a window that falls entirely outside the
/// domain yields the least element zero.
pub fn med_erode(f: &Signal, w: &Window) -> Signal {
    assert!(f.all_finite(), "med_erode is defined on finite signals");
    let mut out = f.clone();
    let targets: Vec<grid_core::Point> = f.points().collect();
    for x in targets {
        let mut acc: Option<f64> = None;
        for &y in w.offsets() {
            let p = [x[0] + y[0], x[1] + y[1]];
            if !f.in_domain(p) {
                continue;
            }
            let v = finite_sample(f, p);
            acc = Some(match acc {
                None => v,
                Some(a) => med_inf(a, v),
            });
        }
        out.set(x, ExtReal::Finite(acc.unwrap_or(0.0)));
    }
    out
}

/// Window supremum in the signed-magnitude order.
///
/// Reads run through the reflected window `f(x - y)`, the adjoint
/// orientation that pairs with `med_erode`, so the composite with the
/// erosion is an opening and decimating this operator reproduces the
/// backward pooling windows.  The binary supremum is partial, but the
/// window fold is made total: the largest magnitude when every read
/// shares a sign, zero as soon as the signs disagree or the window
/// falls outside the domain.
pub fn med_dilate(f: &Signal, w: &Window) -> Signal {
    assert!(f.all_finite(), "med_dilate is defined on finite signals");
    let mut out = f.clone();
    let targets: Vec<grid_core::Point> = f.points().collect();
    for x in targets {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &y in w.offsets() {
            let p = [x[0] - y[0], x[1] - y[1]];
            if !f.in_domain(p) {
                continue;
            }
            let v = finite_sample(f, p);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        let sup = if lo > hi {
            0.0
        } else if lo >= 0.0 {
            hi
        } else if hi <= 0.0 {
            lo
        } else {
            0.0
        };
        out.set(x, ExtReal::Finite(sup));
    }
    out
}

/// Self-dual opening: the window supremum of the window infimum.
pub fn med_open(f: &Signal, w: &Window) -> Signal {
    med_dilate(&med_erode(f, w), w)
}
