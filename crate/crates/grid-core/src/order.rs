use crate::ext_real::ExtReal;
use crate::signal::Signal;

/// f ≤ g in the usual pointwise order.
pub fn pointwise_leq(f: &Signal, g: &Signal) -> bool {
    assert!(f.same_shape(g), "pointwise_leq needs signals of the same shape");
    f.samples().iter().zip(g.samples()).all(|(a, b)| a <= b)
}

/// Pointwise negation.
pub fn negate(f: &Signal) -> Signal {
    f.map(|v| v.neg())
}

/// s ⪯ t in the zero-rooted semilattice order: s lies between 0 and t.
pub fn scalar_median_leq(s: f64, t: f64) -> bool {
    (0.0 <= s && s <= t) || (t <= s && s <= 0.0)
}

/// f ⪯ g pointwise in the zero-rooted order; all samples must be finite.
pub fn median_leq(f: &Signal, g: &Signal) -> bool {
    assert!(f.same_shape(g), "median_leq needs signals of the same shape");
    f.samples().iter().zip(g.samples()).all(|(a, b)| {
        let (a, b) = match (a, b) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => (*a, *b),
            _ => panic!("median_leq is defined on finite samples only"),
        };
        scalar_median_leq(a, b)
    })
}
