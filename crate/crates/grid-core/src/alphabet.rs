use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlphabetError {
    #[error("an alphabet needs at least two levels, got {0}")]
    TooFewLevels(usize),
    #[error("levels must be finite and strictly increasing at position {0}")]
    NotStrictlyIncreasing(usize),
}

/// A finite quantisation alphabet: strictly increasing finite levels.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    levels: Vec<f64>,
}

impl Alphabet {
    pub fn new(levels: &[f64]) -> Result<Alphabet, AlphabetError> {
        if levels.len() < 2 {
            return Err(AlphabetError::TooFewLevels(levels.len()));
        }
        for (i, w) in levels.windows(2).enumerate() {
            if !w[0].is_finite() || !w[1].is_finite() || w[0] >= w[1] {
                return Err(AlphabetError::NotStrictlyIncreasing(i + 1));
            }
        }
        Ok(Alphabet {
            levels: levels.to_vec(),
        })
    }

    /// The binary alphabet {0, 1}.
    pub fn binary() -> Alphabet {
        Alphabet::new(&[0.0, 1.0]).expect("binary alphabet")
    }

    /// The symmetric ternary alphabet {−1, 0, 1}.
    pub fn ternary() -> Alphabet {
        Alphabet::new(&[-1.0, 0.0, 1.0]).expect("ternary alphabet")
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Exact membership; alphabets hold exactly representable levels.
    pub fn contains(&self, v: f64) -> bool {
        self.levels.iter().any(|&l| l == v)
    }

    /// True when negating any level lands back in the alphabet.
    pub fn is_symmetric(&self) -> bool {
        self.levels.iter().all(|&l| self.contains(-l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_must_increase_strictly() {
        assert_eq!(
            Alphabet::new(&[0.0, 0.0]).unwrap_err(),
            AlphabetError::NotStrictlyIncreasing(1)
        );
        assert_eq!(Alphabet::new(&[1.0]).unwrap_err(), AlphabetError::TooFewLevels(1));
        assert!(Alphabet::new(&[-1.0, 0.5, 2.0]).is_ok());
    }

    #[test]
    fn symmetry_detection() {
        assert!(Alphabet::ternary().is_symmetric());
        assert!(!Alphabet::binary().is_symmetric());
    }
}
