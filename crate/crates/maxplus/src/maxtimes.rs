use grid_core::{ExtReal, Point, Signal, StructuringFunction};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxTimesDirection {
    Erosion,
    Dilation,
}

#[derive(Debug, Error, PartialEq)]
pub enum MaxTimesError {
    #[error("sample at {0:?} is not strictly positive")]
    NonPositiveSample(Point),
    #[error("structuring value at {0:?} is not strictly positive")]
    NonPositiveStructuring(Point),
}

/// Multiplicative morphology on strictly positive signals.
///
/// Erosion: out(x) = inf over y with x+y in-domain of f(x+y) / b(y), empty
/// window giving top.  Dilation: out(x) = sup of f(x−y) · b(y), empty window
/// giving 0, the bottom of the multiplicative lattice.
pub fn maxtimes_morph(
    f: &Signal,
    b_pos: &StructuringFunction,
    direction: MaxTimesDirection,
) -> Result<Signal, MaxTimesError> {
    for x in f.points() {
        match f.at(x) {
            ExtReal::Finite(v) if v > 0.0 => {}
            _ => return Err(MaxTimesError::NonPositiveSample(x)),
        }
    }
    for (y, w) in b_pos.iter() {
        if w <= 0.0 {
            return Err(MaxTimesError::NonPositiveStructuring(y));
        }
    }
    let mut out = Vec::with_capacity(f.len());
    for x in f.points() {
        let value = match direction {
            MaxTimesDirection::Erosion => {
                let mut acc = ExtReal::Top;
                for (y, w) in b_pos.iter() {
                    if let Some(ExtReal::Finite(v)) = f.get([x[0] + y[0], x[1] + y[1]]) {
                        acc = acc.min(ExtReal::finite(v / w));
                    }
                }
                acc
            }
            MaxTimesDirection::Dilation => {
                let mut acc = ExtReal::finite(0.0);
                for (y, w) in b_pos.iter() {
                    if let Some(ExtReal::Finite(v)) = f.get([x[0] - y[0], x[1] - y[1]]) {
                        acc = acc.max(ExtReal::finite(v * w));
                    }
                }
                acc
            }
        };
        out.push(value);
    }
    Ok(Signal::new(f.dims(), f.extents(), out).expect("same shape as input"))
}

/// Pointwise natural log; samples must be strictly positive and finite.
pub fn log_signal(f: &Signal) -> Signal {
    f.map(|v| match v {
        ExtReal::Finite(x) if x > 0.0 => ExtReal::finite(x.ln()),
        _ => panic!("log_signal needs strictly positive finite samples"),
    })
}

/// Pointwise exp; bottom maps to 0 and top stays top.
pub fn exp_signal(f: &Signal) -> Signal {
    f.map(|v| match v {
        ExtReal::Bottom => ExtReal::finite(0.0),
        ExtReal::Top => ExtReal::Top,
        ExtReal::Finite(x) => ExtReal::from_f64(x.exp()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::erode;
    use grid_core::StructuringFunction as Sf;

    #[test]
    fn point_mass_divides_and_multiplies() {
        let f = Signal::from_f64_1d(&[4.0, 2.0]);
        let b = Sf::from_pairs_1d(&[(0, 2.0)]);
        assert_eq!(
            maxtimes_morph(&f, &b, MaxTimesDirection::Erosion).unwrap(),
            Signal::from_f64_1d(&[2.0, 1.0])
        );
        assert_eq!(
            maxtimes_morph(&f, &b, MaxTimesDirection::Dilation).unwrap(),
            Signal::from_f64_1d(&[8.0, 4.0])
        );
    }

    #[test]
    fn non_positive_inputs_are_rejected() {
        let f = Signal::from_f64_1d(&[1.0, 0.0]);
        let b = Sf::from_pairs_1d(&[(0, 1.0)]);
        assert_eq!(
            maxtimes_morph(&f, &b, MaxTimesDirection::Erosion).unwrap_err(),
            MaxTimesError::NonPositiveSample([1, 0])
        );
        let f = Signal::from_f64_1d(&[1.0, 2.0]);
        let b = Sf::from_pairs_1d(&[(0, -1.0)]);
        assert_eq!(
            maxtimes_morph(&f, &b, MaxTimesDirection::Dilation).unwrap_err(),
            MaxTimesError::NonPositiveStructuring([0, 0])
        );
    }

    #[test]
    fn conjugates_the_additive_erosion_through_exp() {
        let e = std::f64::consts::E;
        let f = Signal::from_f64_1d(&[e * e, e]);
        let b = Sf::from_pairs_1d(&[(0, e), (1, e)]);
        let log_b = Sf::from_pairs_1d(&[(0, 1.0), (1, 1.0)]);
        let direct = maxtimes_morph(&f, &b, MaxTimesDirection::Erosion).unwrap();
        let conjugated = exp_signal(&erode(&log_signal(&f), &log_b));
        assert!(
            direct.sup_distance(&conjugated) <= 1e-12 * 4.0,
            "max-times erosion must agree with the log-conjugated additive erosion"
        );
    }
}
