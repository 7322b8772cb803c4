//! Repeated layer application and its stabilisation record.

use crate::apply::layer_apply;
use crate::error::LayerError;
use crate::spec::LayerSpec;
use grid_core::{pointwise_leq, ExtReal, Signal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterationMode {
    Opening,
    NaiveResidual,
}

/// The iterate sequence starting at the input, with the first step n at
/// which the next iterate repeats the current one.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationTrace {
    pub iterates: Vec<Signal>,
    pub stabilised_at: Option<usize>,
    pub mode: IterationMode,
}

/// Iterate an arbitrary grid operator.
///
/// Opening mode applies the operator repeatedly.  Residual mode adds
/// each step's output back onto its input, which requires a non-negative
/// start and an operator that never exceeds its input; the iterates then
/// dominate `f + n·γ(f)`, which is checked at every step.
pub fn iterate_with(
    gamma: impl Fn(&Signal) -> Result<Signal, LayerError>,
    f: &Signal,
    n_max: usize,
    mode: IterationMode,
) -> Result<IterationTrace, LayerError> {
    let mut iterates = vec![f.clone()];
    match mode {
        IterationMode::Opening => {
            for _ in 0..n_max {
                let next = gamma(iterates.last().expect("trace starts non-empty"))?;
                iterates.push(next);
            }
        }
        IterationMode::NaiveResidual => {
            if !f.samples().iter().all(|v| *v >= ExtReal::Finite(0.0)) {
                return Err(LayerError::NegativeStart);
            }
            let step_zero = gamma(f)?;
            if !step_zero.same_shape(f) {
                return Err(LayerError::GridChanged);
            }
            for n in 0..n_max {
                let current = iterates.last().expect("trace starts non-empty").clone();
                let step = gamma(&current)?;
                if !step.same_shape(&current) {
                    return Err(LayerError::GridChanged);
                }
                if !pointwise_leq(&step, &current) {
                    return Err(LayerError::NotAntiExtensive);
                }
                let next = current.zip_map(&step, |a, g| a.add(g));
                let floor = f.zip_map(&step_zero, |a, g| a.add(g.scale((n + 1) as f64)));
                assert!(
                    pointwise_leq(&floor, &next),
                    "iterate {} fell below its linear floor: {next:?} < {floor:?}",
                    n + 1
                );
                iterates.push(next);
            }
        }
    }
    let stabilised_at = iterates
        .windows(2)
        .position(|pair| pair[0].same_shape(&pair[1]) && pair[0] == pair[1]);
    Ok(IterationTrace { iterates, stabilised_at, mode })
}

/// Iterate a layer description.
pub fn iterate_layer(
    spec: &LayerSpec,
    f: &Signal,
    n_max: usize,
    mode: IterationMode,
) -> Result<IterationTrace, LayerError> {
    iterate_with(|g| layer_apply(spec, g), f, n_max, mode)
}
