use grid_core::{ExtReal, Point, Signal};
use maxplus::erode;

use crate::basis::{virtual_basis, VirtualBasis};
use crate::error::MmbbError;
use crate::kernel::Kernel;
use grid_core::Alphabet;

/// Direct summation with zero padding; the oracle for every representation.
pub fn conv_direct(f: &Signal, k: &Kernel) -> Signal {
    assert!(f.all_finite(), "conv_direct needs a finite-valued signal");
    let mut out = Vec::with_capacity(f.len());
    for x in f.points() {
        let mut acc = 0.0;
        for (p, w) in k.iter() {
            if let Some(ExtReal::Finite(v)) = f.get([x[0] - p[0], x[1] - p[1]]) {
                acc += w * v;
            }
        }
        out.push(ExtReal::finite(acc));
    }
    Signal::new(f.dims(), f.extents(), out).expect("same shape as input")
}

/// True when every support read f(x−xᵢ) lands inside the domain.
pub fn is_interior(f: &Signal, k: &Kernel, x: Point) -> bool {
    k.support()
        .iter()
        .all(|p| f.in_domain([x[0] - p[0], x[1] - p[1]]))
}

/// All domain points whose full support window is in-domain.
pub fn interior_points(f: &Signal, k: &Kernel) -> Vec<Point> {
    f.points().filter(|&x| is_interior(f, k, x)).collect()
}

fn check_alphabet_valued(f: &Signal, a: &Alphabet) -> Result<(), MmbbError> {
    for x in f.points() {
        match f.at(x) {
            ExtReal::Finite(v) if a.contains(v) => {}
            other => {
                return Err(MmbbError::SampleOutsideAlphabet {
                    point: x,
                    value: other.finite_value().unwrap_or(f64::NAN),
                })
            }
        }
    }
    Ok(())
}

/// Pointwise maximum of erosions by every basis element.
pub fn sup_erosion_branch(f: &Signal, basis: &VirtualBasis) -> Signal {
    let mut acc = Signal::filled(f.dims(), f.extents(), ExtReal::Bottom)
        .expect("input shape is valid");
    for sf in basis.erosion_structuring_functions() {
        let eroded = erode(f, &sf);
        acc = acc.zip_map(&eroded, |a, b| a.max(b));
    }
    acc
}

/// Max over basis elements of the min over support reads f(x−xⱼ) − g[j];
/// matches `conv_direct` at interior points.
pub fn conv_via_virtual_basis(
    f: &Signal,
    k: &Kernel,
    a: &Alphabet,
) -> Result<Signal, MmbbError> {
    check_alphabet_valued(f, a)?;
    let basis = virtual_basis(k, a)?;
    Ok(sup_erosion_branch(f, &basis))
}

/// G⁺·(positive branch) − G⁻·(negative branch); points whose branch windows
/// degenerate to an empty read get bottom.
pub fn conv_signed_mmbb(f: &Signal, k: &Kernel, a: &Alphabet) -> Result<Signal, MmbbError> {
    check_alphabet_valued(f, a)?;
    let plus = k.positive_part().ok_or(MmbbError::EmptyPositivePart)?;
    let plus_basis = virtual_basis(&plus.kernel, a)?;
    let plus_branch = sup_erosion_branch(f, &plus_basis);
    match k.negative_part() {
        None => Ok(plus_branch.map(|v| v.scale(plus.gain))),
        Some(minus) => {
            let minus_basis = virtual_basis(&minus.kernel, a)?;
            let minus_branch = sup_erosion_branch(f, &minus_basis);
            Ok(plus_branch.zip_map(&minus_branch, |p, m| match (p, m) {
                (ExtReal::Finite(p), ExtReal::Finite(m)) => {
                    ExtReal::finite(plus.gain * p - minus.gain * m)
                }
                _ => ExtReal::Bottom,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn averaging() -> Kernel {
        Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).unwrap()
    }

    fn difference() -> Kernel {
        Kernel::from_pairs_1d(&[(0, 1.0), (1, -1.0)]).unwrap()
    }

    #[test]
    fn direct_convolution_with_zero_padding() {
        let f = Signal::from_f64_1d(&[1.0, 0.0, 1.0]);
        assert_eq!(conv_direct(&f, &averaging()), Signal::from_f64_1d(&[0.5, 0.5, 0.5]));
        let f = Signal::from_f64_1d(&[1.0, 1.0]);
        assert_eq!(conv_direct(&f, &difference()), Signal::from_f64_1d(&[1.0, 0.0]));
    }

    #[test]
    fn identity_kernel_preserves_the_signal() {
        let f = Signal::from_f64_1d(&[3.0, -1.0, 2.0]);
        assert_eq!(conv_direct(&f, &Kernel::identity()), f);
    }

    #[test]
    fn interior_excludes_padded_reads() {
        let f = Signal::from_f64_1d(&[1.0, 0.0, 1.0]);
        assert_eq!(interior_points(&f, &averaging()), vec![[1, 0], [2, 0]]);
    }

    #[test]
    fn basis_form_matches_direct_on_the_interior() {
        let f = Signal::from_f64_1d(&[1.0, 0.0, 1.0]);
        let via = conv_via_virtual_basis(&f, &averaging(), &Alphabet::binary()).unwrap();
        let direct = conv_direct(&f, &averaging());
        for x in interior_points(&f, &averaging()) {
            let (a, b) = (via.at(x).finite_value().unwrap(), direct.at(x).finite_value().unwrap());
            assert!((a - b).abs() <= 1e-9, "mismatch at {x:?}: {a} vs {b}");
            assert_eq!(b, 0.5);
        }
    }

    #[test]
    fn constant_signals_pass_through_the_basis_form() {
        let f = Signal::from_f64_1d(&[1.0, 1.0, 1.0, 1.0]);
        let via = conv_via_virtual_basis(&f, &averaging(), &Alphabet::binary()).unwrap();
        for x in interior_points(&f, &averaging()) {
            assert_eq!(via.at(x), ExtReal::Finite(1.0));
        }
    }

    #[test]
    fn exhaustive_binary_length_three() {
        let k = averaging();
        let a = Alphabet::binary();
        for bits in 0..8u32 {
            let samples: Vec<f64> = (0..3).map(|i| ((bits >> i) & 1) as f64).collect();
            let f = Signal::from_f64_1d(&samples);
            let via = conv_via_virtual_basis(&f, &k, &a).unwrap();
            let direct = conv_direct(&f, &k);
            for x in interior_points(&f, &k) {
                let (lhs, rhs) =
                    (via.at(x).finite_value().unwrap(), direct.at(x).finite_value().unwrap());
                assert!((lhs - rhs).abs() <= 1e-9, "signal {samples:?} mismatch at {x:?}");
            }
        }
    }

    #[test]
    fn signed_form_matches_direct_on_ternary_signals() {
        let k = difference();
        let a = Alphabet::ternary();
        for code in 0..27u32 {
            let samples: Vec<f64> =
                (0..3).map(|i| ((code / 3u32.pow(i)) % 3) as f64 - 1.0).collect();
            let f = Signal::from_f64_1d(&samples);
            let signed = conv_signed_mmbb(&f, &k, &a).unwrap();
            let direct = conv_direct(&f, &k);
            for x in interior_points(&f, &k) {
                let (lhs, rhs) =
                    (signed.at(x).finite_value().unwrap(), direct.at(x).finite_value().unwrap());
                assert!((lhs - rhs).abs() <= 1e-9, "signal {samples:?} mismatch at {x:?}");
            }
        }
    }

    #[test]
    fn nonnegative_kernels_reduce_to_the_unsigned_form() {
        let f = Signal::from_f64_1d(&[1.0, 0.0, 1.0, 1.0]);
        let k = averaging();
        let a = Alphabet::binary();
        assert_eq!(
            conv_signed_mmbb(&f, &k, &a).unwrap(),
            conv_via_virtual_basis(&f, &k, &a).unwrap()
        );
    }

    #[test]
    fn constant_signal_through_signed_form_scales_by_the_weight_sum() {
        let k = Kernel::from_pairs_1d(&[(0, 2.0), (1, -0.5)]).unwrap();
        let a = Alphabet::binary();
        let f = Signal::from_f64_1d(&[1.0, 1.0, 1.0]);
        let signed = conv_signed_mmbb(&f, &k, &a).unwrap();
        for x in interior_points(&f, &k) {
            assert_eq!(signed.at(x), ExtReal::Finite(1.5));
        }
    }

    #[test]
    fn samples_outside_the_alphabet_are_rejected() {
        let f = Signal::from_f64_1d(&[0.5, 0.0]);
        let err = conv_via_virtual_basis(&f, &averaging(), &Alphabet::binary()).unwrap_err();
        assert!(matches!(err, MmbbError::SampleOutsideAlphabet { .. }));
    }
}
