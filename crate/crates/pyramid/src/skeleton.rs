use grid_core::{Signal, StructuringFunction};
use maxplus::{dilate, erode, open};

/// Residue decomposition by iterated erosion.
///
/// Part `i < n_max` is the opening residue `erode_i(f) - open(erode_i(f))`
/// with `erode_i` the i-fold erosion by `b`; the final part stores
/// `erode_n_max(f)` itself so the decomposition loses nothing.
pub fn skeleton_decompose(f: &Signal, b: &StructuringFunction, n_max: usize) -> Vec<Signal> {
    let mut parts = Vec::with_capacity(n_max + 1);
    let mut eroded = f.clone();
    for _ in 0..n_max {
        let opened = open(&eroded, b);
        parts.push(eroded.zip_map(&opened, |a, o| a.add(o.neg())));
        eroded = erode(&eroded, b);
    }
    parts.push(eroded);
    parts
}

/// Rebuilds the input from its residue parts.
///
/// Walks the parts coarsest-first: the running signal is dilated once per
/// level and the stored residue added back, which reverses the erosion
/// telescope exactly for any input.
pub fn skeleton_reconstruct(parts: &[Signal], b: &StructuringFunction) -> Signal {
    let mut iter = parts.iter().rev();
    let mut current = iter
        .next()
        .expect("decomposition always stores at least the final erosion")
        .clone();
    for part in iter {
        current = part.zip_map(&dilate(&current, b), |s, d| s.add(d));
    }
    current
}
