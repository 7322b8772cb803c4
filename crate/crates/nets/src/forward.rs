//! Encoder–decoder evaluation.

use crate::config::{Lattice, SkipMode, UNetConfig};
use crate::error::NetError;
use activations::sigspec;
use grid_core::{ExtReal, Signal, StructuringFunction};
use median_lattice::{med_dilate, med_erode};
use pyramid::{gh_analysis, gh_synthesis, resample, ResampleMode};

/// Every intermediate of one forward pass: the coarse encoder outputs,
/// the skip signals (empty unless the skip mode produces them), the
/// decoder outputs from deepest to finest, and the final output.
#[derive(Clone, Debug, PartialEq)]
pub struct UNetTrace {
    pub encoder: Vec<Signal>,
    pub skips: Vec<Signal>,
    pub decoder: Vec<Signal>,
    pub output: Signal,
}

fn analysis(lattice: Lattice, f: &Signal, b: &StructuringFunction, r: usize) -> Signal {
    match lattice {
        Lattice::MaxPlus => gh_analysis(f, b, r),
        Lattice::Median => resample(
            &med_erode(f, &b.support_window()),
            r,
            ResampleMode::Down,
            ExtReal::Finite(0.0),
        ),
    }
}

fn synthesis(lattice: Lattice, g: &Signal, b: &StructuringFunction, r: usize) -> Signal {
    match lattice {
        Lattice::MaxPlus => gh_synthesis(g, b, r),
        Lattice::Median => med_dilate(
            &resample(g, r, ResampleMode::Up, ExtReal::Finite(0.0)),
            &b.support_window(),
        ),
    }
}

/// How many configured levels the extents can actually descend.
fn effective_levels(cfg: &UNetConfig, extents: &[usize]) -> Result<usize, NetError> {
    let r = cfg.stride();
    let mut current: Vec<usize> = extents.to_vec();
    for level in 0..cfg.levels() {
        if let Some(&extent) = current.iter().find(|&&e| e % r != 0) {
            if cfg.is_strict() {
                return Err(NetError::IndivisibleExtent { extent, level, stride: r });
            }
            return Ok(level);
        }
        for e in &mut current {
            *e /= r;
        }
    }
    Ok(cfg.levels())
}

/// Run the encoder down and the decoder back up.
///
/// Each level's encoder step is the feature map followed by the
/// decimated erosion of its lattice; each decoder step is the dual
/// feature map followed by the matching dilation-interpolation, plus the
/// skip signal.  A top-hat skip carries the residue the level's
/// analysis–synthesis unit discards from the encoder input, which the
/// pointwise addition in the decoder restores exactly.  Bottom samples
/// act as the additive identity on both sides of that exchange, so
/// reconstruction stays exact even when the structuring support misses
/// a residue class of the stride.
pub fn unet_forward(cfg: &UNetConfig, f: &Signal) -> Result<UNetTrace, NetError> {
    if cfg.lattice() == Lattice::Median && !f.all_finite() {
        return Err(NetError::NonFiniteInput);
    }
    let levels = effective_levels(cfg, f.extents())?;
    let r = cfg.stride();

    let mut encoder_inputs = Vec::with_capacity(levels);
    let mut encoder = Vec::with_capacity(levels);
    let mut current = f.clone();
    for level in 0..levels {
        let fed = match &cfg.features()[level] {
            Some(features) => {
                if !current.all_finite() {
                    return Err(NetError::NonFiniteInput);
                }
                sigspec(&current, features)
            }
            None => current.clone(),
        };
        let coarse = analysis(cfg.lattice(), &fed, &cfg.structuring()[level], r);
        encoder_inputs.push(fed);
        encoder.push(coarse.clone());
        current = coarse;
    }

    let skips: Vec<Signal> = match cfg.skip() {
        SkipMode::None => Vec::new(),
        SkipMode::Tophat => encoder_inputs
            .iter()
            .zip(&encoder)
            .enumerate()
            .map(|(level, (input, coarse))| {
                let unit = synthesis(cfg.lattice(), coarse, &cfg.structuring()[level], r);
                // A Bottom unit sample discarded everything; the residue
                // there is the whole input sample.
                input.zip_map(&unit, |a, u| match u {
                    ExtReal::Bottom => a,
                    _ => a.add(u.neg()),
                })
            })
            .collect(),
    };

    let mut decoder = Vec::with_capacity(levels);
    let mut state = encoder.last().cloned().unwrap_or_else(|| f.clone());
    for level in (0..levels).rev() {
        let fed = match &cfg.feature_duals()[level] {
            Some(duals) => {
                if !state.all_finite() {
                    return Err(NetError::NonFiniteInput);
                }
                sigspec(&state, duals)
            }
            None => state.clone(),
        };
        let mut up = synthesis(cfg.lattice(), &fed, &cfg.structuring()[level], r);
        if cfg.skip() == SkipMode::Tophat {
            // A Bottom synthesis sample recovered nothing; the skip alone
            // restores that position.
            up = up.zip_map(&skips[level], |a, s| match a {
                ExtReal::Bottom => s,
                _ => a.add(s),
            });
        }
        decoder.push(up.clone());
        state = up;
    }

    Ok(UNetTrace { encoder, skips, decoder, output: state })
}

/// Whether running the skipless skeleton twice changes nothing.
pub fn skeleton_idempotency_check(cfg: &UNetConfig, f: &Signal) -> Result<bool, NetError> {
    let once = unet_forward(cfg, f)?.output;
    let twice = unet_forward(cfg, &once)?.output;
    Ok(twice == once)
}

#[cfg(test)]
mod tests {
    use super::*;
    use grid_core::{negate, pointwise_leq};

    fn sig(values: &[f64]) -> Signal {
        Signal::from_f64_1d(values)
    }

    fn flat01() -> StructuringFunction {
        StructuringFunction::flat_1d(&[0, 1])
    }

    fn config(levels: usize, skip: SkipMode, lattice: Lattice) -> UNetConfig {
        UNetConfig::new(vec![flat01(); levels], 2, skip, lattice).expect("positive stride")
    }

    #[test]
    fn tophat_skips_reconstruct_the_input_exactly() {
        let f = sig(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]);
        for lattice in [Lattice::MaxPlus, Lattice::Median] {
            for levels in 0..=3 {
                let trace = unet_forward(&config(levels, SkipMode::Tophat, lattice), &f)
                    .expect("divisible extents");
                assert_eq!(trace.output, f, "{lattice:?} net with {levels} levels drifted");
            }
        }
    }

    #[test]
    fn point_supports_still_reconstruct_under_tophat_skips() {
        let f = sig(&[3.0, -1.0, 4.0, 1.0]);
        let cfg = UNetConfig::new(
            vec![StructuringFunction::flat_1d(&[0])],
            2,
            SkipMode::Tophat,
            Lattice::MaxPlus,
        )
        .expect("positive stride");
        let trace = unet_forward(&cfg, &f).expect("divisible extents");
        assert_eq!(trace.output, f, "positions the support misses must come back via the skip");
    }

    #[test]
    fn a_skipless_level_is_the_pyramid_opening() {
        let f = sig(&[3.0, 1.0, 4.0, 1.0]);
        let trace = unet_forward(&config(1, SkipMode::None, Lattice::MaxPlus), &f)
            .expect("divisible extents");
        let unit = gh_synthesis(&gh_analysis(&f, &flat01(), 2), &flat01(), 2);
        assert_eq!(trace.output, unit);
        assert!(pointwise_leq(&trace.output, &f), "opening escaped above the input");
    }

    #[test]
    fn the_median_skeleton_commutes_with_negation() {
        let f = sig(&[-1.0, 2.0, -3.0, 4.0, 0.0, -5.0, 1.0, 2.0]);
        let cfg = config(2, SkipMode::None, Lattice::Median);
        let direct = unet_forward(&cfg, &negate(&f)).expect("divisible extents");
        let mirrored = negate(&unet_forward(&cfg, &f).expect("divisible extents").output);
        assert_eq!(direct.output, mirrored);
    }

    #[test]
    fn shapes_telescope_by_the_stride() {
        let f = sig(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]);
        let trace = unet_forward(&config(3, SkipMode::None, Lattice::MaxPlus), &f)
            .expect("divisible extents");
        let extents: Vec<usize> = trace.encoder.iter().map(|l| l.extents()[0]).collect();
        assert_eq!(extents, vec![4, 2, 1]);
        assert_eq!(trace.output.extents(), f.extents());
    }

    #[test]
    fn descent_stops_at_indivisible_extents() {
        let f = sig(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let trace = unet_forward(&config(3, SkipMode::None, Lattice::MaxPlus), &f)
            .expect("non-strict nets truncate instead of failing");
        assert_eq!(trace.encoder.len(), 1, "6 → 3 divides once only");
    }

    #[test]
    fn strict_nets_reject_indivisible_extents() {
        let f = sig(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let err = unet_forward(&config(3, SkipMode::None, Lattice::MaxPlus).strict(), &f)
            .unwrap_err();
        assert_eq!(err, NetError::IndivisibleExtent { extent: 3, level: 1, stride: 2 });
    }

    #[test]
    fn zero_levels_pass_the_input_through() {
        let f = sig(&[5.0, -2.0]);
        let trace = unet_forward(&config(0, SkipMode::Tophat, Lattice::MaxPlus), &f)
            .expect("no levels, no constraints");
        assert_eq!(trace.output, f);
        assert!(trace.encoder.is_empty() && trace.decoder.is_empty() && trace.skips.is_empty());
    }

    #[test]
    fn the_skipless_skeleton_is_idempotent() {
        let f = sig(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]);
        for lattice in [Lattice::MaxPlus, Lattice::Median] {
            for levels in 0..=3 {
                let cfg = config(levels, SkipMode::None, lattice);
                assert!(
                    skeleton_idempotency_check(&cfg, &f).expect("divisible extents"),
                    "{lattice:?} skeleton with {levels} levels moved on reapplication"
                );
            }
        }
    }
}
