//! Random case generation for the verification suites.
//!
//! Signals carry integer values in [-5, 5] (or [0, 5] where a suite needs
//! non-negative data) at lengths 3 to 8; structuring functions have at
//! most three support offsets and integer values in [0, 2].  Integer data
//! keeps the lattice identities exact in floating point.

use grid_core::{Alphabet, Signal, StructuringFunction};
use mmbb::Kernel;
use rand::Rng;

pub fn int_signal_len<R: Rng>(rng: &mut R, len: usize, lo: i64, hi: i64) -> Signal {
    let samples: Vec<f64> = (0..len).map(|_| rng.gen_range(lo..=hi) as f64).collect();
    Signal::from_f64_1d(&samples)
}

pub fn int_signal<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Signal {
    let len = rng.gen_range(3..=8);
    int_signal_len(rng, len, lo, hi)
}

pub fn structuring<R: Rng>(rng: &mut R, require_origin: bool) -> StructuringFunction {
    let mut offsets: Vec<i64> = (-1..=1).filter(|_| rng.gen_bool(0.5)).collect();
    if require_origin && !offsets.contains(&0) {
        offsets.push(0);
        offsets.sort_unstable();
    }
    if offsets.is_empty() {
        offsets.push(rng.gen_range(-1..=1));
    }
    let flat = rng.gen_bool(0.5);
    let pairs: Vec<(i64, f64)> = offsets
        .iter()
        .map(|&d| (d, if flat { 0.0 } else { rng.gen_range(0..=2) as f64 }))
        .collect();
    StructuringFunction::from_pairs_1d(&pairs)
}

pub fn alphabet_of(levels: usize) -> Alphabet {
    match levels {
        2 => Alphabet::binary(),
        3 => Alphabet::new(&[0.0, 1.0, 2.0]).expect("ascending levels"),
        _ => panic!("suites only draw binary or three-level alphabets"),
    }
}

pub fn alphabet_signal<R: Rng>(rng: &mut R, a: &Alphabet, len: usize) -> Signal {
    let samples: Vec<f64> =
        (0..len).map(|_| a.levels()[rng.gen_range(0..a.len())]).collect();
    Signal::from_f64_1d(&samples)
}

/// Every signal of the given length whose samples all lie in the alphabet.
pub fn all_alphabet_signals(a: &Alphabet, len: usize) -> Vec<Signal> {
    let q = a.len();
    let count = q.pow(len as u32);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut digits = index;
        let samples: Vec<f64> = (0..len)
            .map(|_| {
                let level = a.levels()[digits % q];
                digits /= q;
                level
            })
            .collect();
        out.push(Signal::from_f64_1d(&samples));
    }
    out
}

/// Every signal of the given length with integer samples in [lo, hi].
pub fn all_int_signals(len: usize, lo: i64, hi: i64) -> Vec<Signal> {
    let q = (hi - lo + 1) as usize;
    let count = q.pow(len as u32);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut digits = index;
        let samples: Vec<f64> = (0..len)
            .map(|_| {
                let v = lo + (digits % q) as i64;
                digits /= q;
                v as f64
            })
            .collect();
        out.push(Signal::from_f64_1d(&samples));
    }
    out
}

/// A kernel with both strictly positive and strictly negative taps on
/// the support {0, 1, 2}, weights drawn from +-1/2 and +-1.
pub fn signed_kernel3<R: Rng>(rng: &mut R) -> Kernel {
    let choices = [-1.0, -0.5, 0.5, 1.0];
    loop {
        let weights: Vec<f64> = (0..3).map(|_| choices[rng.gen_range(0..4)]).collect();
        if weights.iter().any(|&w| w > 0.0) && weights.iter().any(|&w| w < 0.0) {
            let pairs: Vec<(i64, f64)> =
                weights.iter().enumerate().map(|(i, &w)| (i as i64, w)).collect();
            return Kernel::from_pairs_1d(&pairs).expect("non-zero taps");
        }
    }
}

/// A non-negative kernel with one to three quarter-integer taps.
pub fn positive_kernel<R: Rng>(rng: &mut R) -> Kernel {
    let taps = rng.gen_range(1..=3);
    let mut offsets: Vec<i64> = (0..=2).collect();
    while offsets.len() > taps {
        offsets.remove(rng.gen_range(0..offsets.len()));
    }
    let pairs: Vec<(i64, f64)> = offsets
        .iter()
        .map(|&d| (d, rng.gen_range(1..=4) as f64 / 4.0))
        .collect();
    Kernel::from_pairs_1d(&pairs).expect("strictly positive taps")
}
