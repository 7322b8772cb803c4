use std::cmp::Ordering;
use std::fmt;

/// A real number extended with `Bottom` (−∞) and `Top` (+∞).
///
/// `Bottom` is the neutral element for suprema and `Top` for infima, so
/// empty windows in dilations and erosions evaluate to a well-defined
/// sample.  Finite payloads are never NaN.
#[derive(Clone, Copy, Debug)]
pub enum ExtReal {
    Bottom,
    Finite(f64),
    Top,
}

impl ExtReal {
    /// Wraps a finite value.  NaN and infinities are rejected: infinities
    /// must enter as `Bottom`/`Top` so that ordering stays total.
    pub fn finite(v: f64) -> ExtReal {
        assert!(v.is_finite(), "ExtReal::finite requires a finite value, got {v}");
        ExtReal::Finite(v)
    }

    /// Classifies an arbitrary non-NaN float: ±∞ map to `Bottom`/`Top`.
    pub fn from_f64(v: f64) -> ExtReal {
        assert!(!v.is_nan(), "ExtReal cannot hold NaN");
        if v == f64::INFINITY {
            ExtReal::Top
        } else if v == f64::NEG_INFINITY {
            ExtReal::Bottom
        } else {
            ExtReal::Finite(v)
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite_value(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// The sample as a plain float, with `Bottom`/`Top` as ±∞.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::Bottom => f64::NEG_INFINITY,
            ExtReal::Finite(v) => v,
            ExtReal::Top => f64::INFINITY,
        }
    }

    /// Adds a finite offset; `Bottom` and `Top` absorb.
    pub fn add_offset(self, d: f64) -> ExtReal {
        assert!(d.is_finite(), "offset must be finite, got {d}");
        match self {
            ExtReal::Finite(v) => ExtReal::finite(v + d),
            other => other,
        }
    }

    /// Sum of two extended reals.  `Top + Bottom` is undefined and panics;
    /// callers uphold the crate invariant that it is never formed.
    pub fn add(self, other: ExtReal) -> ExtReal {
        use ExtReal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => ExtReal::finite(a + b),
            (Top, Bottom) | (Bottom, Top) => {
                panic!("Top + Bottom is undefined; operator invariant violated")
            }
            (Top, _) | (_, Top) => Top,
            (Bottom, _) | (_, Bottom) => Bottom,
        }
    }

    /// Scales by a finite weight.  Zero weight annihilates even the
    /// infinities, so a zero-weighted branch contributes exactly 0.
    pub fn scale(self, w: f64) -> ExtReal {
        assert!(w.is_finite(), "weight must be finite, got {w}");
        if w == 0.0 {
            return ExtReal::finite(0.0);
        }
        match self {
            ExtReal::Finite(v) => ExtReal::finite(v * w),
            ExtReal::Top => {
                if w > 0.0 {
                    ExtReal::Top
                } else {
                    ExtReal::Bottom
                }
            }
            ExtReal::Bottom => {
                if w > 0.0 {
                    ExtReal::Bottom
                } else {
                    ExtReal::Top
                }
            }
        }
    }

    pub fn neg(self) -> ExtReal {
        match self {
            ExtReal::Bottom => ExtReal::Top,
            ExtReal::Finite(v) => ExtReal::finite(-v),
            ExtReal::Top => ExtReal::Bottom,
        }
    }

    pub fn min(self, other: ExtReal) -> ExtReal {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: ExtReal) -> ExtReal {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.cmp(other), Ordering::Equal)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (Bottom, Bottom) | (Top, Top) => Ordering::Equal,
            (Bottom, _) | (_, Top) => Ordering::Less,
            (_, Bottom) | (Top, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.partial_cmp(b).expect("ExtReal holds no NaN"),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Bottom => write!(f, "-inf"),
            ExtReal::Top => write!(f, "+inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
        }
    }
}
