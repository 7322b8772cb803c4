use grid_core::{ExtReal, Signal, StructuringFunction};
use maxplus::erode;

/// Lower and upper extremities of a sup-generating interval operator.
#[derive(Clone, Debug, PartialEq)]
pub struct SupGenPair {
    pub g_minus: StructuringFunction,
    pub g_plus: StructuringFunction,
}

/// (α_c f)(x) = min over window offsets y with x+y in the domain of −f(x+y) + c(y).
pub fn anti_dilate(f: &Signal, c: &StructuringFunction) -> Signal {
    let mut out = Vec::with_capacity(f.len());
    for x in f.points() {
        let mut acc = ExtReal::Top;
        for (y, w) in c.iter() {
            if let Some(v) = f.get([x[0] + y[0], x[1] + y[1]]) {
                acc = acc.min(v.neg().add_offset(w));
            }
        }
        out.push(acc);
    }
    Signal::new(f.dims(), f.extents(), out).expect("same shape as input")
}

/// Pointwise minimum of the erosion by g⁻ and the anti-dilation by g⁺.
pub fn supgen_apply(f: &Signal, pair: &SupGenPair) -> Signal {
    erode(f, &pair.g_minus).zip_map(&anti_dilate(f, &pair.g_plus), |a, b| a.min(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_point_pair_gives_negative_absolute_value() {
        let f = Signal::from_f64_1d(&[2.0, -3.0, 0.0]);
        let point = StructuringFunction::from_pairs_1d(&[(0, 0.0)]);
        let pair = SupGenPair { g_minus: point.clone(), g_plus: point };
        assert_eq!(
            supgen_apply(&f, &pair),
            Signal::from_f64_1d(&[-2.0, -3.0, 0.0])
        );
    }

    #[test]
    fn huge_cap_is_vacuous() {
        let f = Signal::from_f64_1d(&[1.0, -2.0, 3.0]);
        let point = StructuringFunction::from_pairs_1d(&[(0, 0.0)]);
        let cap = StructuringFunction::from_pairs_1d(&[(0, 1e9)]);
        let pair = SupGenPair { g_minus: point, g_plus: cap };
        assert_eq!(supgen_apply(&f, &pair), f);
    }

    #[test]
    fn zero_signal_is_fixed_by_zero_pairs() {
        let f = Signal::from_f64_1d(&[0.0]);
        let point = StructuringFunction::from_pairs_1d(&[(0, 0.0)]);
        let pair = SupGenPair { g_minus: point.clone(), g_plus: point };
        assert_eq!(supgen_apply(&f, &pair), f);
    }
}
