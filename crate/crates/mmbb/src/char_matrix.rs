use crate::error::MmbbError;
use crate::kernel::Kernel;

/// The N×N matrix with entries δ_{ℓi} − k_i; its image is the hyperplane
/// orthogonal to k, and the all-ones vector spans its null space.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicMatrix {
    n: usize,
    entries: Vec<f64>,
}

pub fn char_matrix(k: &Kernel) -> Result<CharacteristicMatrix, MmbbError> {
    for (p, w) in k.iter() {
        if w < 0.0 {
            return Err(MmbbError::NegativeWeight { point: p, weight: w });
        }
    }
    let sum = k.weight_sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(MmbbError::NotNormalised(sum));
    }
    let n = k.len();
    let mut entries = vec![0.0; n * n];
    for l in 0..n {
        for i in 0..n {
            entries[l * n + i] = if l == i { 1.0 - k.weights()[i] } else { -k.weights()[i] };
        }
    }
    Ok(CharacteristicMatrix { n, entries })
}

impl CharacteristicMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.n)
    }

    /// (Av)_ℓ = v_ℓ − Σᵢ kᵢ vᵢ, evaluated from the stored entries.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n, "pattern length must match the kernel support");
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn averaging_kernel_matrix_entries() {
        let k = Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.5)]).unwrap();
        let a = char_matrix(&k).unwrap();
        assert_eq!(a.entry(0, 0), 0.5);
        assert_eq!(a.entry(0, 1), -0.5);
        assert_eq!(a.entry(1, 0), -0.5);
        assert_eq!(a.entry(1, 1), 0.5);
    }

    #[test]
    fn ones_vector_spans_the_null_space() {
        let k = Kernel::from_pairs_1d(&[(0, 0.25), (1, 0.5), (2, 0.25)]).unwrap();
        let a = char_matrix(&k).unwrap();
        assert_eq!(a.apply(&[1.0, 1.0, 1.0]), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn rows_are_orthogonal_to_the_kernel_on_the_left() {
        let k = Kernel::from_pairs_1d(&[(0, 0.25), (1, 0.5), (2, 0.25)]).unwrap();
        let a = char_matrix(&k).unwrap();
        for col in 0..3 {
            let dot: f64 = (0..3).map(|row| k.weights()[row] * a.entry(row, col)).sum();
            assert!(dot.abs() <= 1e-15, "kᵀA column {col} is {dot}, expected 0");
        }
    }

    #[test]
    fn point_kernel_gives_the_zero_matrix() {
        let k = Kernel::from_pairs_1d(&[(0, 1.0)]).unwrap();
        let a = char_matrix(&k).unwrap();
        assert_eq!(a.entry(0, 0), 0.0);
    }

    #[test]
    fn unnormalised_and_signed_kernels_are_rejected() {
        let k = Kernel::from_pairs_1d(&[(0, 0.5), (1, 0.6)]).unwrap();
        assert!(matches!(char_matrix(&k), Err(MmbbError::NotNormalised(_))));
        let k = Kernel::from_pairs_1d(&[(0, 1.5), (1, -0.5)]).unwrap();
        assert!(matches!(char_matrix(&k), Err(MmbbError::NegativeWeight { .. })));
    }
}
