use activations::SigSpecConfig;
use grid_core::{median_leq, negate, pointwise_leq, Signal, StructuringFunction};
use mmbb::Kernel;
use nets::{skeleton_idempotency_check, unet_forward, Lattice, SkipMode, UNetConfig};
use proptest::prelude::*;

fn int_signal_len8() -> impl Strategy<Value = Signal> {
    prop::collection::vec(-5..=5i64, 8..=8)
        .prop_map(|v| Signal::from_f64_1d(&v.iter().map(|&k| k as f64).collect::<Vec<_>>()))
}

fn structuring() -> impl Strategy<Value = StructuringFunction> {
    (prop::sample::select(vec![vec![0i64], vec![0, 1], vec![-1, 0, 1]]), 0..=2i64).prop_map(
        |(offsets, peak)| {
            let pairs: Vec<(i64, f64)> = offsets
                .iter()
                .enumerate()
                .map(|(i, &d)| (d, if i == 0 { peak as f64 } else { 0.0 }))
                .collect();
            StructuringFunction::from_pairs_1d(&pairs)
        },
    )
}

fn config(
    bs: Vec<StructuringFunction>,
    skip: SkipMode,
    lattice: Lattice,
) -> UNetConfig {
    UNetConfig::new(bs, 2, skip, lattice).expect("positive stride")
}

proptest! {
    #[test]
    fn tophat_skips_reconstruct_any_input(
        f in int_signal_len8(),
        bs in prop::collection::vec(structuring(), 0..=3),
        lattice in prop::sample::select(vec![Lattice::MaxPlus, Lattice::Median]),
    ) {
        let trace = unet_forward(&config(bs, SkipMode::Tophat, lattice), &f).unwrap();
        prop_assert_eq!(trace.output, f);
    }

    #[test]
    fn the_skipless_skeleton_is_an_opening_in_its_lattice(
        f in int_signal_len8(),
        bs in prop::collection::vec(structuring(), 1..=3),
        lattice in prop::sample::select(vec![Lattice::MaxPlus, Lattice::Median]),
    ) {
        let cfg = config(bs, SkipMode::None, lattice);
        let once = unet_forward(&cfg, &f).unwrap().output;
        let twice = unet_forward(&cfg, &once).unwrap().output;
        prop_assert_eq!(&twice, &once, "skeleton moved on reapplication");
        match lattice {
            Lattice::MaxPlus => prop_assert!(pointwise_leq(&once, &f), "{:?} above {:?}", once, f),
            Lattice::Median => prop_assert!(median_leq(&once, &f), "{:?} above {:?}", once, f),
        }
    }

    #[test]
    fn median_skeletons_commute_with_negation_even_through_linear_features(
        f in int_signal_len8(),
        bs in prop::collection::vec(structuring(), 1..=2),
        with_features in any::<bool>(),
    ) {
        let mut cfg = config(bs, SkipMode::None, Lattice::Median);
        if with_features {
            let average = SigSpecConfig::new(
                vec![(1.0, Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).unwrap())],
                0.0,
            )
            .unwrap();
            let features: Vec<Option<SigSpecConfig>> =
                (0..cfg.levels()).map(|_| Some(average.clone())).collect();
            cfg = cfg.with_features(features).unwrap();
        }
        let direct = unet_forward(&cfg, &negate(&f)).unwrap().output;
        let mirrored = negate(&unet_forward(&cfg, &f).unwrap().output);
        prop_assert_eq!(direct, mirrored);
    }

    #[test]
    fn the_idempotency_check_accepts_identity_feature_skeletons(
        f in int_signal_len8(),
        bs in prop::collection::vec(structuring(), 0..=3),
    ) {
        let cfg = config(bs, SkipMode::None, Lattice::MaxPlus);
        prop_assert!(skeleton_idempotency_check(&cfg, &f).unwrap());
    }
}

#[test]
fn an_averaging_feature_map_breaks_idempotency_within_two_hundred_trials() {
    let average = SigSpecConfig::new(
        vec![(1.0, Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).expect("valid kernel"))],
        0.0,
    )
    .expect("valid config");
    let cfg = UNetConfig::new(
        vec![StructuringFunction::flat_1d(&[0, 1])],
        2,
        SkipMode::None,
        Lattice::MaxPlus,
    )
    .expect("positive stride")
    .with_features(vec![Some(average)])
    .expect("one feature map for one level");
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next_int = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 11) as i64 - 5
    };
    let found = (0..200).any(|_| {
        let samples: Vec<f64> = (0..8).map(|_| next_int() as f64).collect();
        let f = Signal::from_f64_1d(&samples);
        !skeleton_idempotency_check(&cfg, &f).expect("divisible extents")
    });
    assert!(found, "every smoothed skeleton looked idempotent");
}
