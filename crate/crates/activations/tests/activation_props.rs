use activations::{apd, apd_factored, morpho_activation, relu_param, sigspec, SigSpecConfig};
use grid_core::{median_leq, pointwise_leq, Alphabet, Signal, StructuringFunction};
use mmbb::{conv_via_virtual_basis, interior_points, supgen_apply, Kernel, SupGenPair};
use proptest::prelude::*;

fn int_signal_exact(len: usize) -> impl Strategy<Value = Signal> {
    prop::collection::vec(-5i32..=5, len)
        .prop_map(|vals| Signal::from_f64_1d(&vals.iter().map(|&v| v as f64).collect::<Vec<_>>()))
}

fn int_signal_pair() -> impl Strategy<Value = (Signal, Signal)> {
    (1usize..=8).prop_flat_map(|n| (int_signal_exact(n), int_signal_exact(n)))
}

/// Pairs ordered for the median relation: each sample moves away from zero.
fn median_ordered_pair() -> impl Strategy<Value = (Signal, Signal)> {
    (1usize..=8)
        .prop_flat_map(|n| prop::collection::vec((-5i32..=5, 0i32..=3, -5i32..=5), n))
        .prop_map(|triples| {
            let (small, large): (Vec<f64>, Vec<f64>) = triples
                .iter()
                .map(|&(v, k, w)| {
                    let s = v as f64;
                    let t = if v > 0 {
                        (v + k) as f64
                    } else if v < 0 {
                        (v - k) as f64
                    } else {
                        w as f64
                    };
                    (s, t)
                })
                .unzip();
            (Signal::from_f64_1d(&small), Signal::from_f64_1d(&large))
        })
}

fn relu(f: &Signal) -> Signal {
    relu_param(f, 1.0, 0.0)
}

proptest! {
    #[test]
    fn rectification_is_a_closing((f, g) in int_signal_pair()) {
        let rf = relu(&f);
        prop_assert!(pointwise_leq(&f, &rf), "rectification must be extensive");
        prop_assert_eq!(relu(&rf), rf.clone(), "rectification must be idempotent");
        let joined = f.zip_map(&g, |a, b| a.max(b));
        prop_assert_eq!(
            relu(&joined),
            rf.zip_map(&relu(&g), |a, b| a.max(b)),
            "rectification must distribute over pointwise maxima"
        );
    }

    #[test]
    fn positive_slopes_preserve_the_median_order(
        (f, g) in median_ordered_pair(),
        bp in 100i32..=300,
        bm in 1i32..=100,
    ) {
        let (bp, bm) = (bp as f64 / 100.0, bm as f64 / 100.0);
        prop_assert!(median_leq(&f, &g), "pair construction must be ordered");
        prop_assert!(
            median_leq(&relu_param(&f, bp, bm), &relu_param(&g, bp, bm)),
            "any positive slope pair keeps each sign chain in order"
        );
    }

    #[test]
    fn stretching_slopes_are_median_extensive(
        f in (1usize..=8).prop_flat_map(int_signal_exact),
        bp in 100i32..=300,
        bm in 100i32..=300,
    ) {
        let (bp, bm) = (bp as f64 / 100.0, bm as f64 / 100.0);
        prop_assert!(
            median_leq(&f, &relu_param(&f, bp, bm)),
            "slopes of at least one push every sample away from zero"
        );
    }

    #[test]
    fn shrinking_slopes_break_median_extensivity(
        f in int_signal_exact(4),
        pos in 0usize..4,
        v in -5i32..=-1,
        bm in 0i32..=99,
    ) {
        let mut f = f;
        f.set([pos as i64, 0], grid_core::ExtReal::finite(v as f64));
        prop_assert!(
            !median_leq(&f, &relu_param(&f, 1.0, bm as f64 / 100.0)),
            "pulling a strictly negative sample toward zero leaves the median order"
        );
        prop_assert!(
            !median_leq(&f, &relu(&f)),
            "clipping a strictly negative sample leaves the median order"
        );
    }

    #[test]
    fn pooled_activation_factors_exactly(
        f in (1usize..=8).prop_flat_map(int_signal_exact),
        r in 1usize..=3,
        alpha in (-8i32..=8).prop_map(|v| v as f64 / 4.0),
    ) {
        prop_assert_eq!(apd(&f, r, alpha), apd_factored(&f, r, alpha));
    }

    #[test]
    fn capped_supremum_distributes_on_random_inputs(
        f in (2usize..=7).prop_flat_map(int_signal_exact),
        widths in prop::collection::vec(1usize..=2, 1..=3),
        cap_v in 0i32..=4,
    ) {
        let basis: Vec<StructuringFunction> = widths
            .iter()
            .enumerate()
            .map(|(i, &w)| {
                let shift = (i % 2) as i64;
                let offsets: Vec<i64> = (0..w as i64).map(|o| o - shift).collect();
                StructuringFunction::flat_1d(&offsets)
            })
            .collect();
        let cap = StructuringFunction::from_pairs_1d(&[(0, cap_v as f64)]);
        let direct = morpho_activation(&f, &basis, &cap);
        let distributed = basis
            .iter()
            .map(|g| supgen_apply(&f, &SupGenPair { g_minus: g.clone(), g_plus: cap.clone() }))
            .reduce(|acc, s| acc.zip_map(&s, |a, b| a.max(b)))
            .expect("non-empty basis");
        prop_assert_eq!(direct, distributed);
    }

    #[test]
    fn rectified_features_match_the_erosion_branch_on_the_nonnegative_side(
        (f, k, alpha) in (2usize..=3, 4usize..=6).prop_flat_map(|(taps, len)| {
            let numerators = prop::collection::vec(1u32..=4, taps);
            let samples = prop::collection::vec(0u32..=1, len);
            let alpha = (-8i32..=8).prop_map(|v| v as f64 / 4.0);
            (numerators, samples, alpha)
        }).prop_map(|(numerators, samples, alpha)| {
            let total: u32 = numerators.iter().sum();
            let pairs: Vec<(i64, f64)> = numerators
                .iter()
                .enumerate()
                .map(|(i, &n)| (i as i64, n as f64 / total as f64))
                .collect();
            let f = Signal::from_f64_1d(&samples.iter().map(|&v| v as f64).collect::<Vec<_>>());
            (f, Kernel::from_pairs_1d(&pairs).expect("positive taps"), alpha)
        })
    ) {
        let a = Alphabet::binary();
        let cfg = SigSpecConfig::new(vec![(1.0, k.clone())], alpha).expect("one term");
        let pre = sigspec(&f, &cfg).map(|v| v.add_offset(cfg.bias()));
        let activated = relu(&pre);
        let branch = conv_via_virtual_basis(&f, &k, &a).expect("alphabet-compatible input");
        for x in interior_points(&f, &k) {
            let p = pre.at(x).finite_value().expect("finite features");
            if p >= 0.0 {
                let lhs = activated.at(x).finite_value().expect("finite activation");
                let rhs = branch.at(x).finite_value().expect("finite branch") + cfg.bias();
                prop_assert!(
                    (lhs - rhs).abs() <= 1e-9,
                    "activated feature {lhs} and erosion branch {rhs} disagree at {x:?}"
                );
            }
        }
    }
}
